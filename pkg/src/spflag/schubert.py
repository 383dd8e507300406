"""Schubert, opposite Schubert and Richardson loci in Sp_{2n}/P_d.

Everything is phrased through two coordinate flags in k^{2n}:

* ``F_m``: span of the first m basis vectors in chain order
  (e_1, ..., e_n, e_2n, ..., e_{n+1}).  It is stable under the upper Borel.
* ``G_m``: span of the last m vectors in that order, stable under the lower
  (opposite) Borel.

For ``w`` with chain positions ``r_1 < ... < r_d``:

* ``U in X_w``  iff  dim(U ∩ F_{r_t}) >= t for all t,
* ``U in X^w``  iff  dim(U ∩ G_{2n - r_t + 1}) >= d - t + 1 for all t.
"""
from __future__ import annotations

from dataclasses import dataclass

from .exactmath import Field, Mat, canonical_basis, intersection_dim, kernel, rank
from .indices import (bottom, chain, enumerate_spbar, is_sp_index, rank_sp, ranks, sp_ge,
                      top)
from .pluecker import LinearForm, sp_relations
from .symplectic import SymplecticContext, is_isotropic


class EmptyRichardsonError(ValueError):
    """Raised for R(u, v) with u not >= v, which has no points."""


def coordinate_subspace(labels, n2: int, field: Field) -> Mat:
    """Columns e_i for i in ``labels`` (1-based), in the given order."""
    labels = list(labels)
    rows = [[field.one if labels[j] == i + 1 else field.zero for j in range(len(labels))]
            for i in range(n2)]
    return Mat._raw(field, rows, len(labels))


def flag_space(m: int, n: int, field: Field) -> Mat:
    """F_m; F_0 is the zero subspace."""
    return coordinate_subspace(chain(n)[:m], 2 * n, field)


def opposite_flag_space(m: int, n: int, field: Field) -> Mat:
    """G_m, the last m chain vectors."""
    return coordinate_subspace(chain(n)[2 * n - m:], 2 * n, field)


def e_point(w, n2: int, field: Field) -> Mat:
    """The torus fixed point span{e_{w_1}, ..., e_{w_d}}."""
    return coordinate_subspace(w, n2, field)


def _prepare(u: Mat, ctx: SymplecticContext, check: bool):
    if u.nrows != ctx.dim:
        raise ValueError(f"expected {ctx.dim} rows, got {u.nrows}")
    if rank(u) != u.ncols:
        raise ValueError("subspace matrix is rank deficient")
    if check and not is_isotropic(u, ctx, check_rank=False):
        raise ValueError("point is not isotropic")


def _positions(w, n):
    if not is_sp_index(w, n):
        raise ValueError(f"{tuple(w)} is not in I^Sp for n={n}")
    return ranks(w, n)


def schubert_member(u: Mat, w, ctx: SymplecticContext, check=True) -> bool:
    """U in X_w.  ``check=False`` skips the isotropy test (type A use)."""
    _prepare(u, ctx, check)
    n, F = ctx.n, ctx.field
    return all(intersection_dim(u, flag_space(r, n, F)) >= t
               for t, r in enumerate(_positions(w, n), 1))


def opp_schubert_member(u: Mat, w, ctx: SymplecticContext, check=True) -> bool:
    """U in X^w, tested against the opposite flag."""
    _prepare(u, ctx, check)
    n, F = ctx.n, ctx.field
    d = len(w)
    return all(intersection_dim(u, opposite_flag_space(2 * n - r + 1, n, F)) >= d - t + 1
               for t, r in enumerate(_positions(w, n), 1))


def cell_member(u: Mat, w, ctx: SymplecticContext, check=True) -> bool:
    """U in B.e_w: dim(U ∩ F_{r_t}) = t > dim(U ∩ F_{r_t - 1}) for all t."""
    _prepare(u, ctx, check)
    n, F = ctx.n, ctx.field
    for t, r in enumerate(_positions(w, n), 1):
        if intersection_dim(u, flag_space(r, n, F)) != t:
            return False
        if not intersection_dim(u, flag_space(r - 1, n, F)) < t:
            return False
    return True


def upper_cells_member(u: Mat, w, ctx: SymplecticContext, check=True) -> bool:
    """dim(U ∩ F_{r_t - 1}) <= t - 1 for all t.

    Uses the same flag as :func:`schubert_member`, so this is an open
    condition: it picks out the union of the cells B.e_w' with w' >= w, not
    the closed opposite Schubert variety.
    """
    _prepare(u, ctx, check)
    n, F = ctx.n, ctx.field
    return all(intersection_dim(u, flag_space(r - 1, n, F)) <= t - 1
               for t, r in enumerate(_positions(w, n), 1))


@dataclass(frozen=True)
class RichardsonSpec:
    n: int
    d: int
    u: tuple
    v: tuple

    def __post_init__(self):
        object.__setattr__(self, "u", tuple(self.u))
        object.__setattr__(self, "v", tuple(self.v))
        if not 1 <= self.d <= self.n:
            raise ValueError(f"need 1 <= d <= n, got d={self.d}, n={self.n}")
        for name in ("u", "v"):
            w = getattr(self, name)
            if len(w) != self.d or not is_sp_index(w, self.n):
                raise ValueError(f"{name}={w} is not in I^Sp_{{{self.d},{2 * self.n}}}")

    @property
    def nonempty(self) -> bool:
        return sp_ge(self.u, self.v, self.n)

    def contains_index(self, beta) -> bool:
        """v <=^Sp beta <=^Sp u."""
        return sp_ge(self.u, beta, self.n) and sp_ge(beta, self.v, self.n)

    @classmethod
    def full(cls, n, d):
        return cls(n, d, top(d, n), bottom(d, n))

    def to_dict(self):
        return {"n": self.n, "d": self.d, "u": list(self.u), "v": list(self.v)}

    @classmethod
    def from_dict(cls, obj):
        return cls(obj["n"], obj["d"], tuple(obj["u"]), tuple(obj["v"]))


def richardson_member(u: Mat, spec: RichardsonSpec, ctx: SymplecticContext, check=True) -> bool:
    return (schubert_member(u, spec.u, ctx, check)
            and opp_schubert_member(u, spec.v, ctx, check=False))


def _require_nonempty(spec):
    if not spec.nonempty:
        raise EmptyRichardsonError(
            f"R(u,v) is empty: u={spec.u} is not >=^Sp v={spec.v} (n={spec.n})")


def vanishing_indices(spec: RichardsonSpec, reading="interval") -> list:
    """Indices beta (type C shape) whose coordinates generate the ideal of R(u, v).

    ``reading="interval"`` takes every beta outside [v, u]; ``"literal"``
    takes only beta > u or beta < v, which misses indices incomparable to
    u or v.
    """
    _require_nonempty(spec)
    n, d = spec.n, spec.d
    out = []
    for beta in enumerate_spbar(d, n):
        if reading == "interval":
            keep = not spec.contains_index(beta)
        elif reading == "literal":
            keep = ((sp_ge(beta, spec.u, n) and beta != spec.u)
                    or (sp_ge(spec.v, beta, n) and beta != spec.v))
        else:
            raise ValueError(f"unknown reading {reading!r}")
        if keep:
            out.append(beta)
    return out


def richardson_generators(spec: RichardsonSpec, level="quotient", reading="interval"):
    """Unit forms p_beta (plus the isotropy relations at ``level="ambient"``)."""
    if level not in ("quotient", "ambient"):
        raise ValueError(f"level must be 'quotient' or 'ambient', not {level!r}")
    forms = [LinearForm.unit(spec.n, spec.d, sorted(beta))
             for beta in vanishing_indices(spec, reading)]
    if level == "ambient":
        forms += sp_relations(spec.n, spec.d)
    return forms


def richardson_sample(spec: RichardsonSpec, rng, ctx: SymplecticContext, tries=8):
    """Best-effort random point of R(u, v); None on failure.

    The t-th basis vector is drawn from span{e_c : r(v_t) <= pos(c) <= r(u_t)}
    subject to pairing to zero with the earlier vectors.  The result is
    certified with :func:`richardson_member` before it is returned.
    """
    _require_nonempty(spec)
    n, F = ctx.n, ctx.field
    ch = chain(n)
    ru, rv = ranks(spec.u, n), ranks(spec.v, n)
    picked = []
    for t in range(spec.d):
        allowed = [ch[k - 1] for k in range(rv[t], ru[t] + 1)]
        # x^T J f = sum_i x_{i+n} f_i - x_i f_{i+n}
        cons = []
        for f in picked:
            row = []
            for lab in allowed:
                i = lab - 1
                row.append(f[i - n] if i >= n else F.reduce(-f[i + n]))
            cons.append(row)
        if cons:
            K = kernel(Mat(F, cons))
            basis = [K.column(j) for j in range(K.ncols)]
        else:
            basis = [tuple(F.one if a == b else F.zero for b in range(len(allowed)))
                     for a in range(len(allowed))]
        if not basis:
            return None
        for _ in range(tries):
            coeffs = [F.random_element(rng) for _ in basis]
            local = [F.reduce(sum(c * b[k] for c, b in zip(coeffs, basis)))
                     for k in range(len(allowed))]
            if any(local):
                break
        else:
            return None
        vec = [F.zero] * (2 * n)
        for lab, x in zip(allowed, local):
            vec[lab - 1] = x
        picked.append(vec)
    u = Mat(F, [list(r) for r in zip(*picked)])
    if rank(u) != spec.d:
        return None
    u = canonical_basis(u)
    if not (is_isotropic(u, ctx, check_rank=False) and richardson_member(u, spec, ctx, check=False)):
        return None
    return u
