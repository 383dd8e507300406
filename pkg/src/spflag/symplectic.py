"""The standard symplectic form, group membership, P_d, Borel samplers and Weyl representatives."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .exactmath import (Field, Mat, QQ, blocks, identity, inverse, rank, zeros)
from .indices import full_weyl_tuple


class SignError(RuntimeError):
    """A signed Weyl representative failed M^T J M = J."""


@dataclass(frozen=True)
class SymplecticContext:
    n: int
    field: Field = QQ

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be positive")

    @cached_property
    def J(self) -> Mat:
        n, F = self.n, self.field
        I, Z = identity(F, n), zeros(F, n, n)
        return blocks(Z, -I, I, Z)

    @property
    def dim(self) -> int:
        return 2 * self.n


def pairing(x, y, ctx: SymplecticContext):
    """x^T J y for coordinate sequences x, y of length 2n."""
    n = ctx.n
    # J y = (-y[n:], y[:n])
    s = sum(x[i + n] * y[i] - x[i] * y[i + n] for i in range(n))
    return ctx.field.reduce(s)


def _blocks_of(m: Mat, n: int):
    top, bot, left, right = range(n), range(n, 2 * n), range(n), range(n, 2 * n)
    return (m.submatrix(top, left), m.submatrix(top, right),
            m.submatrix(bot, left), m.submatrix(bot, right))


def block_criterion(m: Mat, ctx: SymplecticContext) -> bool:
    """A^T C - C^T A = 0, B^T D - D^T B = 0, A^T D - C^T B = I."""
    A, B, C, D = _blocks_of(m, ctx.n)
    return ((A.T @ C - C.T @ A).is_zero()
            and (B.T @ D - D.T @ B).is_zero()
            and A.T @ D - C.T @ B == identity(ctx.field, ctx.n))


def is_symplectic(m: Mat, ctx: SymplecticContext) -> bool:
    if m.shape != (ctx.dim, ctx.dim):
        raise ValueError(f"expected a {ctx.dim}x{ctx.dim} matrix, got {m.shape}")
    direct = m.T @ ctx.J @ m == ctx.J
    if direct != block_criterion(m, ctx):
        raise AssertionError("M^T J M = J disagrees with the block criterion")
    return direct


def is_isotropic(u: Mat, ctx: SymplecticContext, check_rank=True) -> bool:
    """Every pair of columns of ``u`` pairs to zero under J."""
    if u.nrows != ctx.dim:
        raise ValueError(f"expected {ctx.dim} rows, got {u.nrows}")
    if check_rank and rank(u) != u.ncols:
        raise ValueError("subspace matrix is rank deficient")
    cols = [u.column(j) for j in range(u.ncols)]
    return all(pairing(cols[a], cols[b], ctx) == 0
               for a in range(len(cols)) for b in range(a + 1, len(cols)))


def in_parabolic(m: Mat, d: int, ctx: SymplecticContext) -> bool:
    """Block pattern of P_d: A[d:, :d] = 0 and C vanishes outside its lower-right block."""
    A, _, C, _ = _blocks_of(m, ctx.n)
    n = ctx.n
    if any(A[i, j] != 0 for i in range(d, n) for j in range(d)):
        return False
    return all(C[i, j] == 0 for i in range(n) for j in range(n) if i < d or j < d)


def _random_symmetric(rng, ctx):
    n, F = ctx.n, ctx.field
    S = [[F.zero] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            S[i][j] = S[j][i] = F.random_element(rng)
    return Mat(F, S)


def _random_triangular(rng, ctx, upper=True):
    n, F = ctx.n, ctx.field
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == j:
                row.append(F.random_element(rng, nonzero=True))
            elif (j > i) == upper:
                row.append(F.random_element(rng))
            else:
                row.append(F.zero)
        rows.append(row)
    return Mat(F, rows)


def borel_from(A: Mat, S: Mat) -> Mat:
    """[[A, A S], [0, A^-T]] for upper triangular A and symmetric S."""
    n = A.nrows
    return blocks(A, A @ S, zeros(A.field, n, n), inverse(A.T))


def opp_borel_from(A: Mat, S: Mat) -> Mat:
    """[[A, 0], [A^-T S, A^-T]] for lower triangular A and symmetric S."""
    n = A.nrows
    AinvT = inverse(A.T)
    return blocks(A, zeros(A.field, n, n), AinvT @ S, AinvT)


def borel_sample(rng, ctx: SymplecticContext) -> Mat:
    return borel_from(_random_triangular(rng, ctx, upper=True), _random_symmetric(rng, ctx))


def opp_borel_sample(rng, ctx: SymplecticContext) -> Mat:
    return opp_borel_from(_random_triangular(rng, ctx, upper=False), _random_symmetric(rng, ctx))


def weyl_matrix(w, ctx: SymplecticContext) -> Mat:
    """Signed permutation matrix sending e_t to ±e_{i_t} for the full tuple of ``w``.

    Columns t <= n with i_t > n are negated; that is exactly what M^T J M = J
    requires.  Raises :class:`SignError` if the check fails anyway.
    """
    n, F = ctx.n, ctx.field
    full = full_weyl_tuple(w, n)
    rows = [[F.zero] * (2 * n) for _ in range(2 * n)]
    for t, i in enumerate(full):
        sign = -1 if t < n and i > n else 1
        rows[i - 1][t] = F(sign)
    m = Mat(F, rows)
    if m.T @ ctx.J @ m != ctx.J:
        raise SignError(f"signed representative of {tuple(w)} is not symplectic")
    return m
