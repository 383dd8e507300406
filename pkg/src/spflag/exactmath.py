"""Exact fields, dense matrices, minors, ranks and compound matrices.

Two fields are supported: the rationals ``QQ`` (elements are
:class:`fractions.Fraction`) and prime fields ``GF(p)`` (elements are plain
ints in ``range(p)``).  A :class:`Mat` carries its field; binary operations
between matrices over different fields raise :class:`FieldMismatchError`.

Row/column positions on :class:`Mat` are 0-based, as usual in Python.  The
index tuples accepted by :func:`minor` and produced by :func:`lex_subsets`
are 1-based, matching the Plücker indexing used everywhere else.
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence


class FieldMismatchError(ValueError):
    pass


class Field:
    """Base class; concrete fields override the element hooks."""

    char = 0

    def __call__(self, x):
        raise NotImplementedError

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def inv(self, a):
        raise NotImplementedError

    def reduce(self, a):
        return a

    def random_element(self, rng, nonzero=False):
        raise NotImplementedError

    def to_json(self, a):
        raise NotImplementedError


class Rationals(Field):
    char = 0
    #: default sampling pool for random entries
    pool = tuple(range(-3, 4))

    def __call__(self, x):
        return Fraction(x)

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(a)

    def random_element(self, rng, nonzero=False):
        pool = [x for x in self.pool if x] if nonzero else self.pool
        return Fraction(rng.choice(pool))

    def to_json(self, a):
        a = Fraction(a)
        return a.numerator if a.denominator == 1 else str(a)

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


class PrimeField(Field):
    def __init__(self, p: int):
        if p < 2 or p >= 2**31 or not is_prime(p):
            raise ValueError(f"{p} is not a prime below 2**31")
        self.p = p
        self.char = p

    def __call__(self, x):
        if isinstance(x, Fraction):
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        if isinstance(x, str):
            return self(Fraction(x))
        return int(x) % self.p

    def inv(self, a):
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def reduce(self, a):
        return a % self.p

    def random_element(self, rng, nonzero=False):
        if nonzero:
            return rng.randrange(1, self.p)
        return rng.randrange(self.p)

    def to_json(self, a):
        return int(a)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"GF({self.p})"


QQ = Rationals()


@lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    return PrimeField(p)


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def field_for(q: int | None) -> Field:
    """``QQ`` for ``q`` in (None, 0), otherwise ``GF(q)``."""
    return QQ if not q else GF(q)


class Mat:
    """Immutable dense matrix over an exact field."""

    __slots__ = ("field", "rows", "nrows", "ncols")

    def __init__(self, field: Field, rows: Iterable[Iterable], ncols: int | None = None):
        rows = tuple(tuple(field(x) for x in row) for row in rows)
        if ncols is None:
            if not rows:
                raise ValueError("cannot infer column count of an empty matrix")
            ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "nrows", len(rows))
        object.__setattr__(self, "ncols", ncols)

    @classmethod
    def _raw(cls, field, rows, ncols):
        # trusted constructor: entries already reduced field elements
        m = object.__new__(cls)
        object.__setattr__(m, "field", field)
        object.__setattr__(m, "rows", tuple(tuple(r) for r in rows))
        object.__setattr__(m, "nrows", len(m.rows))
        object.__setattr__(m, "ncols", ncols)
        return m

    def __setattr__(self, name, value):
        raise AttributeError("Mat is immutable")

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def __getitem__(self, key):
        i, j = key
        return self.rows[i][j]

    def __eq__(self, other):
        return (isinstance(other, Mat) and self.field == other.field
                and self.shape == other.shape and self.rows == other.rows)

    def __hash__(self):
        return hash((self.field, self.ncols, self.rows))

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in r) for r in self.rows)
        return f"Mat({self.field!r}, {self.nrows}x{self.ncols}: [{body}])"

    def _check(self, other):
        if not isinstance(other, Mat):
            raise TypeError(f"expected Mat, got {type(other).__name__}")
        if self.field != other.field:
            raise FieldMismatchError(f"{self.field!r} vs {other.field!r}")

    def __add__(self, other):
        self._check(other)
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        red = self.field.reduce
        return Mat._raw(self.field, [[red(a + b) for a, b in zip(r, s)]
                                     for r, s in zip(self.rows, other.rows)], self.ncols)

    def __neg__(self):
        red = self.field.reduce
        return Mat._raw(self.field, [[red(-a) for a in r] for r in self.rows], self.ncols)

    def __sub__(self, other):
        return self + (-other)

    def __matmul__(self, other):
        self._check(other)
        if self.ncols != other.nrows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        red = self.field.reduce
        cols = list(zip(*other.rows)) if other.nrows else [()] * other.ncols
        out = [[red(sum(a * b for a, b in zip(r, c))) for c in cols] for r in self.rows]
        return Mat._raw(self.field, out, other.ncols)

    def scale(self, c):
        c = self.field(c)
        red = self.field.reduce
        return Mat._raw(self.field, [[red(c * a) for a in r] for r in self.rows], self.ncols)

    @property
    def T(self):
        cols = [[r[j] for r in self.rows] for j in range(self.ncols)]
        return Mat._raw(self.field, cols, self.nrows)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "Mat":
        """0-based row/column selection in the given order."""
        return Mat._raw(self.field, [[self.rows[i][j] for j in cols] for i in rows], len(cols))

    def column(self, j):
        return tuple(r[j] for r in self.rows)

    def is_zero(self):
        return all(a == 0 for r in self.rows for a in r)

    def to_json(self):
        return [[self.field.to_json(a) for a in r] for r in self.rows]


def identity(field: Field, n: int) -> Mat:
    return Mat._raw(field, [[field.one if i == j else field.zero for j in range(n)]
                            for i in range(n)], n)


def zeros(field: Field, nrows: int, ncols: int) -> Mat:
    return Mat._raw(field, [[field.zero] * ncols for _ in range(nrows)], ncols)


def diag(field: Field, entries: Sequence) -> Mat:
    n = len(entries)
    return Mat(field, [[entries[i] if i == j else 0 for j in range(n)] for i in range(n)])


def hstack(*mats: Mat) -> Mat:
    first = mats[0]
    for m in mats[1:]:
        first._check(m)
        if m.nrows != first.nrows:
            raise ValueError("row count mismatch")
    return Mat._raw(first.field, [sum((m.rows[i] for m in mats), ()) for i in range(first.nrows)],
                    sum(m.ncols for m in mats))


def vstack(*mats: Mat) -> Mat:
    first = mats[0]
    for m in mats[1:]:
        first._check(m)
        if m.ncols != first.ncols:
            raise ValueError("column count mismatch")
    return Mat._raw(first.field, [r for m in mats for r in m.rows], first.ncols)


def blocks(a: Mat, b: Mat, c: Mat, d: Mat) -> Mat:
    """``[[a, b], [c, d]]``."""
    return vstack(hstack(a, b), hstack(c, d))


def random_mat(field: Field, nrows: int, ncols: int, rng) -> Mat:
    return Mat._raw(field, [[field.random_element(rng) for _ in range(ncols)]
                            for _ in range(nrows)], ncols)


# ---------------------------------------------------------------------------
# elimination

def _integer_rows(m: Mat):
    # clear denominators row by row; rank and det (up to a known factor) survive
    rows, factor = [], Fraction(1)
    for r in m.rows:
        den = math.lcm(*(Fraction(a).denominator for a in r)) if r else 1
        rows.append([int(Fraction(a) * den) for a in r])
        factor *= den
    return rows, factor


def _bareiss(rows, ncols):
    """Fraction-free elimination in place on integer rows.

    Returns ``(rank, sign)``; when the matrix is square and nonsingular the
    last pivot ``rows[-1][-1]`` equals ``sign * det``.
    """
    nrows = len(rows)
    prev, r, sign = 1, 0, 1
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if piv is None:
            continue
        if piv != r:
            rows[r], rows[piv] = rows[piv], rows[r]
            sign = -sign
        pr = rows[r]
        pv = pr[c]
        for i in range(r + 1, nrows):
            ri = rows[i]
            f = ri[c]
            for j in range(c + 1, ncols):
                ri[j] = (pv * ri[j] - f * pr[j]) // prev
            ri[c] = 0
        prev = pv
        r += 1
    return r, sign


def _modp_echelon(rows, ncols, p):
    """Row echelon form mod p in place; returns (pivot columns, sign)."""
    nrows = len(rows)
    pivots, r, sign = [], 0, 1
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if rows[i][c]), None)
        if piv is None:
            continue
        if piv != r:
            rows[r], rows[piv] = rows[piv], rows[r]
            sign = -sign
        pr = rows[r]
        inv = pow(pr[c], -1, p)
        for i in range(r + 1, nrows):
            ri = rows[i]
            f = ri[c]
            if f:
                f = f * inv % p
                for j in range(c, ncols):
                    ri[j] = (ri[j] - f * pr[j]) % p
        pivots.append(c)
        r += 1
    return pivots, sign


def rank(m: Mat) -> int:
    if m.nrows == 0 or m.ncols == 0:
        return 0
    if isinstance(m.field, PrimeField):
        rows = [list(r) for r in m.rows]
        return len(_modp_echelon(rows, m.ncols, m.field.p)[0])
    rows, _ = _integer_rows(m)
    return _bareiss(rows, m.ncols)[0]


def det(m: Mat):
    """Exact determinant of a square matrix."""
    if m.nrows != m.ncols:
        raise ValueError(f"det of non-square {m.shape} matrix")
    n = m.nrows
    field = m.field
    if n == 0:
        return field.one
    if n == 1:
        return m.rows[0][0]
    if n == 2:
        (a, b), (c, d) = m.rows
        return field.reduce(a * d - b * c)
    if isinstance(field, PrimeField):
        p = field.p
        rows = [list(r) for r in m.rows]
        pivots, sign = _modp_echelon(rows, n, p)
        if len(pivots) < n:
            return 0
        out = sign
        for i in range(n):
            out = out * rows[i][i] % p
        return out
    rows, factor = _integer_rows(m)
    rk, sign = _bareiss(rows, n)
    if rk < n:
        return Fraction(0)
    return Fraction(sign * rows[-1][-1]) / factor


def minor(m: Mat, rows: Sequence[int], cols: Sequence[int]):
    """Determinant of the submatrix on 1-based ``rows`` x ``cols``."""
    if len(rows) != len(cols):
        raise ValueError("minor needs as many rows as columns")
    for idx, bound in ((rows, m.nrows), (cols, m.ncols)):
        if any(not 1 <= i <= bound for i in idx):
            raise IndexError(f"index out of range 1..{bound}: {tuple(idx)}")
    return det(m.submatrix([i - 1 for i in rows], [j - 1 for j in cols]))


def rref(m: Mat):
    """Reduced row echelon form; returns ``(R, pivot_columns)`` (0-based)."""
    field = m.field
    red = field.reduce
    rows = [list(r) for r in m.rows]
    nrows, ncols = m.nrows, m.ncols
    pivots, r = [], 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = field.inv(rows[r][c])
        rows[r] = [red(a * inv) for a in rows[r]]
        pr = rows[r]
        for i in range(nrows):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [red(a - f * b) for a, b in zip(rows[i], pr)]
        pivots.append(c)
        r += 1
    return Mat._raw(field, rows, ncols), pivots


def kernel(m: Mat) -> Mat:
    """Basis of the right null space, as the columns of a ``ncols x k`` matrix."""
    field = m.field
    R, pivots = rref(m)
    free = [c for c in range(m.ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [field.zero] * m.ncols
        v[f] = field.one
        for row, pc in zip(R.rows, pivots):
            v[pc] = field.reduce(-row[f])
        basis.append(v)
    if not basis:
        return Mat._raw(field, [[] for _ in range(m.ncols)], 0)
    return Mat._raw(field, [list(r) for r in zip(*basis)], len(basis))


def inverse(m: Mat) -> Mat:
    if m.nrows != m.ncols:
        raise ValueError("inverse of non-square matrix")
    n = m.nrows
    R, pivots = rref(hstack(m, identity(m.field, n)))
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return R.submatrix(range(n), range(n, 2 * n))


def column_space_key(u: Mat):
    """Hashable canonical form of the column span (RREF of the transpose)."""
    R, pivots = rref(u.T)
    return R.rows[:len(pivots)]


def canonical_basis(u: Mat) -> Mat:
    """Reduced column echelon basis of the column span of ``u``."""
    R, pivots = rref(u.T)
    return Mat._raw(u.field, R.rows[:len(pivots)], u.nrows).T


def intersection_dim(u: Mat, w: Mat) -> int:
    """dim(U ∩ W) for the column spans, via dim U + dim W - dim(U + W)."""
    u._check(w)
    if u.nrows != w.nrows:
        raise ValueError(f"ambient dimension mismatch: {u.nrows} vs {w.nrows}")
    if w.ncols == 0 or u.ncols == 0:
        return 0
    return rank(u) + rank(w) - rank(hstack(u, w))


# ---------------------------------------------------------------------------
# compound matrices

def lex_subsets(r: int, s: int):
    """I_{s,r} in lexicographic order, 1-based."""
    return list(combinations(range(1, r + 1), s))


def compound_matrix(a: Mat, s: int) -> Mat:
    """Matrix of all s x s minors, rows/columns indexed by I_{s,r} in lex order."""
    r = a.nrows
    if a.ncols != r:
        raise ValueError("compound_matrix needs a square matrix")
    if not 0 <= s <= r:
        raise ValueError(f"order {s} out of range for a {r}x{r} matrix")
    gammas = lex_subsets(r, s)
    return Mat._raw(a.field, [[minor(a, gi, gj) for gj in gammas] for gi in gammas], len(gammas))


def complementary_minor(a: Mat, rows: Sequence[int], cols: Sequence[int]):
    """Determinant after deleting the 1-based ``rows`` and ``cols``."""
    keep_r = [i for i in range(a.nrows) if i + 1 not in rows]
    keep_c = [j for j in range(a.ncols) if j + 1 not in cols]
    return det(a.submatrix(keep_r, keep_c))


def signed_cofactor_compound(a: Mat, s: int) -> Mat:
    """C with C[i][j] = (-1)^(|γ_i| + |γ_j|) * A[γ_j; γ_i].

    ``|γ|`` is the entry sum and ``A[ρ; κ]`` the minor left after deleting rows
    ρ and columns κ.  With B = compound_matrix(a, s), B @ C = det(a) * I.
    """
    r = a.nrows
    if a.ncols != r:
        raise ValueError("signed_cofactor_compound needs a square matrix")
    gammas = lex_subsets(r, s)
    red = a.field.reduce
    out = []
    for gi in gammas:
        row = []
        for gj in gammas:
            sgn = -1 if (sum(gi) + sum(gj)) % 2 else 1
            row.append(red(sgn * complementary_minor(a, gj, gi)))
        out.append(row)
    return Mat._raw(a.field, out, len(gammas))


def random_invertible(field: Field, r: int, rng) -> Mat:
    while True:
        a = random_mat(field, r, r, rng)
        if det(a) != 0:
            return a


def verify_lemma43(field: Field, r_max: int, count: int, rng) -> dict:
    """compound(A, s) @ signed_cofactor_compound(A, s) == det(A) I for random invertible A.

    Sizes r cycle through 1..r_max; every order s <= r is checked.
    """
    checked = failures = 0
    first_failure = None
    for k in range(count):
        r = k % r_max + 1
        a = random_invertible(field, r, rng)
        da = det(a)
        for s in range(r + 1):
            b, c = compound_matrix(a, s), signed_cofactor_compound(a, s)
            checked += 1
            if b @ c != identity(field, b.nrows).scale(da):
                failures += 1
                if first_failure is None:
                    first_failure = {"A": a.to_json(), "s": s}
    out = {"claim": "lemma43",
           "instance": {"field": getattr(field, "p", "QQ"), "r_max": r_max, "matrices": count},
           "expected": {"failures": 0},
           "achieved": {"products_checked": checked, "failures": failures},
           "pass": failures == 0}
    if first_failure:
        out["witness"] = first_failure
    return out
