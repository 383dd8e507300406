"""Brute-force ground truth over F_q.

Every d-dimensional subspace of F_q^{2n} is visited exactly once through its
reduced column echelon basis: pivot rows p_1 < ... < p_d, column j has a 1
in row p_j, zeros above it and in the other pivot rows, and free entries
elsewhere below.  Iteration is lexicographic in the pivot set, then in the
free entries.  Verdicts compare point sets built from that enumeration and
are deterministic.
"""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import partial
from itertools import combinations, product

from .exactmath import GF, Mat, is_prime
from .indices import enumerate_sp, enumerate_spbar, is_sp_index, sp_ge
from .pluecker import evaluate, plucker, sp_relations
from .schubert import (RichardsonSpec, cell_member, e_point, opp_schubert_member,
                       richardson_generators, richardson_member, schubert_member)
from .symplectic import SymplecticContext, is_isotropic

DEFAULT_BUDGET = 10**7
MAX_WITNESSES = 10


class BudgetExceeded(RuntimeError):
    def __init__(self, count, budget):
        super().__init__(f"{count} subspaces exceed the enumeration budget {budget}")
        self.count = count
        self.budget = budget


def default_budget() -> int:
    return int(os.environ.get("SPFLAG_BUDGET", DEFAULT_BUDGET))


def gaussian_binomial(n: int, k: int, q: int) -> int:
    if not 0 <= k <= n:
        return 0
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def pivot_sets(n2: int, d: int):
    """Shards of the enumeration, in iteration order (0-based pivot rows)."""
    return list(combinations(range(n2), d))


def _free_slots(pivots, n2):
    pset = set(pivots)
    return [(i, j) for j, p in enumerate(pivots) for i in range(p + 1, n2) if i not in pset]


def count_subspaces(q: int, n2: int, d: int) -> int:
    """Size of the enumeration, summed shard by shard."""
    return sum(q ** len(_free_slots(p, n2)) for p in pivot_sets(n2, d))


def _check_q(q):
    if not is_prime(q):
        raise ValueError(f"q={q} is not prime")


def enumerate_subspaces(q: int, n2: int, d: int, budget: int | None = None, pivots=None):
    """Yield one canonical ``n2 x d`` basis matrix per subspace.

    ``pivots`` restricts the run to a single shard.  The budget is checked
    against the whole enumeration before anything is produced.
    """
    _check_q(q)
    if not 0 <= d <= n2:
        raise ValueError(f"need 0 <= d <= {n2}")
    budget = default_budget() if budget is None else budget
    total = gaussian_binomial(n2, d, q)
    if total > budget:
        raise BudgetExceeded(total, budget)
    return _iter_subspaces(q, n2, d, pivot_sets(n2, d) if pivots is None else [tuple(pivots)])


def _iter_subspaces(q, n2, d, shards):
    F = GF(q)
    for piv in shards:
        slots = _free_slots(piv, n2)
        base = [[0] * d for _ in range(n2)]
        for j, p in enumerate(piv):
            base[p][j] = 1
        for vals in product(range(q), repeat=len(slots)):
            rows = [r[:] for r in base]
            for (i, j), x in zip(slots, vals):
                rows[i][j] = x
            yield Mat._raw(F, rows, d)


def gp_points(q: int, n: int, d: int, budget=None) -> list:
    """Isotropic d-subspaces of F_q^{2n}: the F_q-points of Sp_{2n}/P_d."""
    ctx = SymplecticContext(n, GF(q))
    return [u for u in enumerate_subspaces(q, 2 * n, d, budget) if is_isotropic(u, ctx, False)]


@dataclass
class Verdict:
    claim: str
    params: dict
    lhs_count: int
    rhs_count: int
    equal: bool
    witnesses_of_failure: list = field(default_factory=list)
    universe_count: int | None = None

    @property
    def passed(self) -> bool:
        return self.equal

    def to_dict(self):
        out = {"claim": self.claim, "params": self.params, "lhs_count": self.lhs_count,
               "rhs_count": self.rhs_count, "equal": self.equal,
               "witnesses_of_failure": self.witnesses_of_failure[:MAX_WITNESSES]}
        if self.universe_count is not None:
            out["universe_count"] = self.universe_count
        return out


# ---------------------------------------------------------------------------
# zero-set comparisons, sharded by pivot set

def _forms_vanish(u, forms):
    pv = plucker(u, normalize=False, check_rank=False)
    return all(evaluate(f, pv) == 0 for f in forms)


def _isotropic(u, ctx):
    return is_isotropic(u, ctx, check_rank=False)


def _in_richardson(u, spec, ctx):
    return _isotropic(u, ctx) and richardson_member(u, spec, ctx, check=False)


def _compare_shard(job):
    q, n2, d, piv, lhs, rhs = job
    nl = nr = total = 0
    bad = []
    for u in _iter_subspaces(q, n2, d, [piv]):
        a, b = lhs(u), rhs(u)
        nl += a
        nr += b
        total += 1
        if a != b and len(bad) < MAX_WITNESSES:
            bad.append(u.to_json())
    return nl, nr, total, bad


def compare_zero_sets(claim, params, q, n2, d, lhs, rhs, budget=None, workers=1) -> Verdict:
    """Compare ``{U : lhs(U)}`` with ``{U : rhs(U)}`` over every d-subspace of F_q^{n2}."""
    enumerate_subspaces(q, n2, d, budget)  # budget and argument checks
    jobs = [(q, n2, d, piv, lhs, rhs) for piv in pivot_sets(n2, d)]
    if workers > 1:
        with ProcessPoolExecutor(workers) as ex:
            results = list(ex.map(_compare_shard, jobs))
    else:
        results = [_compare_shard(j) for j in jobs]
    nl = sum(r[0] for r in results)
    nr = sum(r[1] for r in results)
    total = sum(r[2] for r in results)
    bad = [w for r in results for w in r[3]]
    return Verdict(claim, params, nl, nr, not bad, bad[:MAX_WITNESSES], total)


def verify_thm44(q: int, n: int, d: int, budget=None, workers=1) -> Verdict:
    """Zeros of the isotropy relations in G_{d,2n}(F_q) = isotropic subspaces."""
    ctx = SymplecticContext(n, GF(q))
    forms = sp_relations(n, d)
    return compare_zero_sets("thm44", {"q": q, "n": n, "d": d}, q, 2 * n, d,
                             partial(_forms_vanish, forms=forms), partial(_isotropic, ctx=ctx),
                             budget, workers)


def verify_thm411(q: int, spec: RichardsonSpec, budget=None, workers=1,
                  reading="interval") -> Verdict:
    """Zeros of the ambient Richardson generators = points of R(u, v)."""
    ctx = SymplecticContext(spec.n, GF(q))
    forms = richardson_generators(spec, "ambient", reading)
    params = {"q": q, **spec.to_dict()}
    if reading != "interval":
        params["reading"] = reading
    return compare_zero_sets("thm411", params, q, 2 * spec.n, spec.d,
                             partial(_forms_vanish, forms=forms),
                             partial(_in_richardson, spec=spec, ctx=ctx), budget, workers)


# ---------------------------------------------------------------------------
# point-set checks on G/P(F_q)

def schubert_loci(q: int, n: int, d: int, points=None, opposite=False) -> dict:
    """``{w: [points of X_w]}`` (or X^w) for every w in I^Sp."""
    ctx = SymplecticContext(n, GF(q))
    points = gp_points(q, n, d) if points is None else points
    member = opp_schubert_member if opposite else schubert_member
    return {w: [u for u in points if member(u, w, ctx, check=False)] for w in enumerate_sp(d, n)}


def _vanishing_check(claim, q, n, d, opposite):
    F = GF(q)
    ctx = SymplecticContext(n, F)
    points = gp_points(q, n, d)
    pvs = [plucker(u, normalize=False, check_rank=False) for u in points]
    member = opp_schubert_member if opposite else schubert_member
    nonvanishing, expected, bad = set(), set(), []
    for i in enumerate_sp(d, n):
        locus = [pv for u, pv in zip(points, pvs) if member(u, i, ctx, check=False)]
        for j in enumerate_spbar(d, n):
            key = tuple(sorted(j))
            if any(pv.coords[key] != 0 for pv in locus):
                nonvanishing.add((i, j))
            should = sp_ge(j, i, n) if opposite else sp_ge(i, j, n)
            if should:
                expected.add((i, j))
                if is_sp_index(j, n):
                    ej = e_point(j, 2 * n, F)
                    inside = member(ej, i, ctx, check=False)
                    if not inside or plucker(ej).coords[key] == 0:
                        bad.append({"i": list(i), "j": list(j), "reason": "fixed point witness"})
    for i, j in sorted(nonvanishing ^ expected):
        bad.append({"i": list(i), "j": list(j),
                    "reason": "vanishes" if (i, j) in expected else "does not vanish"})
    return Verdict(claim, {"q": q, "n": n, "d": d}, len(nonvanishing), len(expected),
                   not bad, bad[:MAX_WITNESSES], len(points))


def verify_prop47(q: int, n: int, d: int) -> Verdict:
    """p_j vanishes on X_i(F_q) exactly when i is not >= j."""
    return _vanishing_check("prop47", q, n, d, opposite=False)


def verify_prop48(q: int, n: int, d: int) -> Verdict:
    """p_j vanishes on X^i(F_q) exactly when i is not <= j."""
    return _vanishing_check("prop48", q, n, d, opposite=True)


def verify_prop35(q: int, n: int, d: int) -> Verdict:
    """R(u, v)(F_q) is nonempty exactly when u >= v, with e_v as witness."""
    F = GF(q)
    ctx = SymplecticContext(n, F)
    points = gp_points(q, n, d)
    sp = enumerate_sp(d, n)
    lower = schubert_loci(q, n, d, points)
    upper = schubert_loci(q, n, d, points, opposite=True)
    nonempty, expected, bad = set(), set(), []
    for u in sp:
        keys_u = {id(x) for x in lower[u]}
        for v in sp:
            if any(id(x) in keys_u for x in upper[v]):
                nonempty.add((u, v))
            if sp_ge(u, v, n):
                expected.add((u, v))
                spec = RichardsonSpec(n, d, u, v)
                if not richardson_member(e_point(v, 2 * n, F), spec, ctx):
                    bad.append({"u": list(u), "v": list(v), "reason": "e_v not in R(u,v)"})
    for u, v in sorted(nonempty ^ expected):
        bad.append({"u": list(u), "v": list(v),
                    "reason": "empty" if (u, v) in expected else "nonempty"})
    return Verdict("prop35", {"q": q, "n": n, "d": d}, len(nonempty), len(expected),
                   not bad, bad[:MAX_WITNESSES], len(points))


def verify_containment(q: int, n: int, d: int) -> Verdict:
    """X_w'(F_q) ⊆ X_w(F_q) exactly when w' <= w."""
    loci = schubert_loci(q, n, d)
    sp = enumerate_sp(d, n)
    keys = {w: {u.rows for u in pts} for w, pts in loci.items()}
    contained = {(a, b) for a in sp for b in sp if keys[a] <= keys[b]}
    expected = {(a, b) for a in sp for b in sp if sp_ge(b, a, n)}
    bad = [{"w_small": list(a), "w_big": list(b)} for a, b in sorted(contained ^ expected)]
    v = Verdict("containment", {"q": q, "n": n, "d": d}, len(contained), len(expected),
                not bad, bad[:MAX_WITNESSES])
    v.params["counts"] = [len(loci[w]) for w in sp]
    return v


def verify_cell_partition(q: int, n: int, d: int) -> Verdict:
    """Every F_q-point of G/P lies in exactly one cell B.e_w."""
    ctx = SymplecticContext(n, GF(q))
    points = gp_points(q, n, d)
    sp = enumerate_sp(d, n)
    counts = {w: 0 for w in sp}
    bad = []
    for u in points:
        hits = [w for w in sp if cell_member(u, w, ctx, check=False)]
        for w in hits:
            counts[w] += 1
        if len(hits) != 1 and len(bad) < MAX_WITNESSES:
            bad.append(u.to_json())
    total = sum(counts.values())
    v = Verdict("cells", {"q": q, "n": n, "d": d}, total, len(points), not bad and total == len(points),
                bad, len(points))
    v.params["counts"] = [counts[w] for w in sp]
    return v


def richardson_points(q: int, spec: RichardsonSpec, budget=None) -> list:
    ctx = SymplecticContext(spec.n, GF(q))
    return [u for u in gp_points(q, spec.n, spec.d, budget)
            if richardson_member(u, spec, ctx, check=False)]
