"""Standard monomials of type A and type C, and rank checks of their basis claims.

A monomial is a multiset of Plücker indices, stored as a tuple of factors.
Standard means the factors form a weakly decreasing chain: componentwise
for type A on I_{d,N}, and in ``>=^Sp`` for type C on the s-image of I_{d,2n}.
Rank checks evaluate monomials at exact points and compare ranks of the
resulting matrices; nothing is straightened symbolically.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations_with_replacement

from .exactmath import GF, Field, Mat, PrimeField, random_mat, rank
from .indices import bruhat_ge_typeA, enumerate_spbar, enumerate_typeA, is_sp_index, sp_ge
from .pluecker import PluckerVector, plucker
from .schubert import RichardsonSpec

#: primes tried in turn when a small field leaves a rank deficient
PRIME_SCHEDULE = (7, 31, 101, 1009)


@dataclass(frozen=True)
class Monomial:
    factors: tuple

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(tuple(f) for f in self.factors))

    @property
    def degree(self):
        return len(self.factors)

    def to_dict(self):
        return {"factors": [list(f) for f in self.factors]}


def _poset(kind, d, N):
    if kind == "A":
        return sorted(enumerate_typeA(d, N)), bruhat_ge_typeA
    if kind == "C":
        if N % 2:
            raise ValueError("type C needs an even ambient dimension 2n")
        n = N // 2
        return sorted(enumerate_spbar(d, n)), lambda a, b: sp_ge(a, b, n)
    raise ValueError(f"kind must be 'A' or 'C', not {kind!r}")


def enumerate_standard(kind: str, d: int, N: int, m: int) -> list[Monomial]:
    """All weakly decreasing chains w_1 >= ... >= w_m, in lexicographic order."""
    if m < 1:
        raise ValueError("degree must be positive")
    elems, ge = _poset(kind, d, N)
    out = []

    def extend(prefix):
        if len(prefix) == m:
            out.append(Monomial(prefix))
            return
        for w in elems:
            if not prefix or ge(prefix[-1], w):
                extend(prefix + (w,))

    extend(())
    return out


def all_monomials(d: int, N: int, m: int) -> list[Monomial]:
    """Every degree-m product of Plücker coordinates on G_{d,N}."""
    return [Monomial(c) for c in combinations_with_replacement(enumerate_typeA(d, N), m)]


def eval_monomial(f: Monomial, pv: PluckerVector):
    out = pv.field.one
    for w in f.factors:
        out = pv.field.reduce(out * pv.coords[tuple(sorted(w))])
    return out


def standard_on_richardson(f: Monomial, spec: RichardsonSpec, strict=False) -> bool:
    """u >=^Sp w_1 >=^Sp ... >=^Sp w_m >=^Sp v.

    ``strict`` also demands every factor lie in I^Sp (no repeated hats).
    """
    n = spec.n
    chain = (spec.u,) + f.factors + (spec.v,)
    if not all(sp_ge(a, b, n) for a, b in zip(chain, chain[1:])):
        return False
    return not strict or all(is_sp_index(w, n) for w in f.factors)


def richardson_standard_monomials(spec: RichardsonSpec, m: int, strict=False) -> list[Monomial]:
    return [f for f in enumerate_standard("C", spec.d, 2 * spec.n, m)
            if standard_on_richardson(f, spec, strict)]


def evaluation_matrix(monomials, pvs) -> Mat:
    F = pvs[0].field
    return Mat._raw(F, [[eval_monomial(f, pv) for f in monomials] for pv in pvs], len(monomials))


@dataclass
class Report:
    claim: str
    instance: dict
    expected: dict
    achieved: dict
    passed: bool
    status: str = "ok"
    notes: dict = field(default_factory=dict)

    def to_dict(self):
        out = {"claim": self.claim, "instance": self.instance, "expected": self.expected,
               "achieved": self.achieved, "pass": self.passed, "status": self.status}
        if self.notes:
            out["notes"] = self.notes
        return out


def _field_guard(F: Field, m: int, d: int):
    if isinstance(F, PrimeField) and F.p <= 4 * m * d:
        raise ValueError(f"GF({F.p}) is too small for degree {m} on d={d}; need p > {4 * m * d}")


def _field_name(F):
    return "QQ" if not isinstance(F, PrimeField) else F.p


def random_points(F: Field, N: int, d: int, count: int, rng) -> list[Mat]:
    """``count`` random full-rank N x d matrices."""
    out = []
    while len(out) < count:
        u = random_mat(F, N, d, rng)
        if rank(u) == d:
            out.append(u)
    return out


def verify_basis(kind: str, d: int, N: int, m: int, F: Field, sample_count: int, rng) -> Report:
    """Standard monomials of degree m versus all degree-m products on G_{d,N}.

    Passes when both evaluation matrices reach rank equal to the number of
    standard monomials.
    """
    _field_guard(F, m, d)
    std = enumerate_standard(kind, d, N, m)
    every = all_monomials(d, N, m)
    instance = {"kind": kind, "d": d, "N": N, "m": m, "field": _field_name(F),
                "samples": sample_count}
    expected = {"standard_count": len(std), "rank_all": len(std), "rank_standard": len(std)}
    pvs = [plucker(u, normalize=False, check_rank=False)
           for u in random_points(F, N, d, sample_count, rng)]
    r_all = rank(evaluation_matrix(every, pvs))
    r_std = rank(evaluation_matrix(std, pvs))
    achieved = {"standard_count": len(std), "all_count": len(every),
                "rank_all": r_all, "rank_standard": r_std}
    ok = r_all == r_std == len(std)
    status = "ok" if ok else ("insufficient-samples" if sample_count < len(std) else "rank-deficient")
    return Report(f"smt-basis-{kind}", instance, expected, achieved, ok, status)


def verify_independence_on_richardson(spec: RichardsonSpec, m: int, F: Field, points,
                                      strict=True) -> Report:
    """Full column rank of the standard-on-R(u,v) monomials of degree m at ``points``.

    ``points`` must already be certified members of R(u, v).
    """
    mons = richardson_standard_monomials(spec, m, strict)
    instance = {**spec.to_dict(), "m": m, "field": _field_name(F), "strict": strict,
                "points": len(points)}
    expected = {"rank": len(mons)}
    if len(points) < len(mons):
        return Report("smt-richardson", instance, expected, {"rank": None, "monomials": len(mons)},
                      False, "not-enough-points")
    pvs = [plucker(u, normalize=False, check_rank=False) for u in points]
    r = rank(evaluation_matrix(mons, pvs))
    return Report("smt-richardson", instance, expected, {"rank": r, "monomials": len(mons)},
                  r == len(mons), "ok" if r == len(mons) else "rank-deficient")


def verify_independence_escalating(spec: RichardsonSpec, m: int, primes=PRIME_SCHEDULE[:3],
                                   strict=True, budget=None) -> Report:
    """Run :func:`verify_independence_on_richardson` on R(u,v)(F_q), raising q until it passes."""
    from .oracle import richardson_points

    tried = []
    report = None
    for q in primes:
        report = verify_independence_on_richardson(
            spec, m, GF(q), richardson_points(q, spec, budget), strict)
        tried.append(q)
        if report.passed:
            break
    report.notes["primes_tried"] = tried
    return report
