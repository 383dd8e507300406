"""Plücker vectors, integer linear forms in Plücker coordinates, and the
linear relations cutting the isotropic locus out of the Grassmannian.

Coordinates follow the symmetric convention: ``p`` of an unsorted tuple is
``p`` of the sorted tuple, zero if an entry repeats, and every sign is an
explicit ``(-1)**tau`` factor on the form.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass
from itertools import combinations

from .exactmath import Field, Mat, det, minor, rank
from .indices import enumerate_typeA, normalize_tuple, tau


@dataclass(frozen=True)
class PluckerVector:
    field: Field
    n2: int
    d: int
    coords: dict

    def __getitem__(self, index):
        return self.coords[tuple(index)]

    def support(self):
        return [i for i, v in self.coords.items() if v != 0]

    def key(self):
        return tuple(self.coords.values())


def plucker(u: Mat, normalize=True, check_rank=True) -> PluckerVector:
    """All maximal minors of the ``2n x d`` basis matrix ``u``.

    With ``normalize`` the first nonzero coordinate (lexicographic) is scaled
    to 1, which makes equal subspaces produce equal vectors.
    """
    n2, d = u.shape
    if check_rank and rank(u) != d:
        raise ValueError("plucker() needs a full column rank matrix")
    F = u.field
    rows = u.rows
    coords = {}
    for idx in combinations(range(n2), d):
        coords[tuple(i + 1 for i in idx)] = det(Mat._raw(F, [rows[i] for i in idx], d))
    if normalize:
        lead = next(v for v in coords.values() if v != 0)
        inv = F.inv(lead)
        coords = {k: F.reduce(v * inv) for k, v in coords.items()}
    return PluckerVector(F, n2, d, coords)


_TERM = re.compile(r"([+-])(\d*)p\[([\d,\s]+)\]")


@dataclass(frozen=True)
class LinearForm:
    """Integer combination of Plücker coordinates on G_{d,2n}."""

    n: int
    d: int
    terms: tuple  # ((coeff, index), ...), indices strictly increasing, sorted lexicographically

    def __post_init__(self):
        combined = {}
        for c, idx in self.terms:
            idx = tuple(idx)
            if len(idx) != self.d or list(idx) != sorted(set(idx)):
                raise ValueError(f"bad index {idx} for d={self.d}")
            if not all(1 <= i <= 2 * self.n for i in idx):
                raise ValueError(f"index {idx} outside 1..{2 * self.n}")
            combined[idx] = combined.get(idx, 0) + int(c)
        terms = tuple((c, idx) for idx, c in sorted(combined.items()) if c)
        object.__setattr__(self, "terms", terms)

    @classmethod
    def unit(cls, n, d, index):
        return cls(n, d, ((1, tuple(index)),))

    def is_zero(self):
        return not self.terms

    def support(self):
        return [idx for _, idx in self.terms]

    def to_dict(self):
        return {"n": self.n, "d": self.d,
                "terms": [{"c": c, "p": list(idx)} for c, idx in self.terms]}

    def to_json(self):
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, obj):
        return cls(obj["n"], obj["d"], tuple((t["c"], tuple(t["p"])) for t in obj["terms"]))

    def to_text(self):
        if not self.terms:
            return "0"
        parts = []
        for c, idx in self.terms:
            mag = "" if abs(c) == 1 else str(abs(c))
            parts.append(f"{'+' if c > 0 else '-'}{mag}p[{','.join(map(str, idx))}]")
        return " ".join(parts)

    @classmethod
    def from_text(cls, text, n, d):
        text = text.strip()
        if text == "0":
            return cls(n, d, ())
        terms = []
        pos = 0
        compact = text.replace(" ", "")
        for m in _TERM.finditer(compact):
            if m.start() != pos:
                raise ValueError(f"cannot parse form near {compact[pos:]!r}")
            sign = -1 if m.group(1) == "-" else 1
            mag = int(m.group(2)) if m.group(2) else 1
            idx = tuple(int(x) for x in m.group(3).split(","))
            terms.append((sign * mag, idx))
            pos = m.end()
        if pos != len(compact):
            raise ValueError(f"cannot parse form near {compact[pos:]!r}")
        return cls(n, d, tuple(terms))


def evaluate(f: LinearForm, pv: PluckerVector):
    if pv.d != f.d or pv.n2 != 2 * f.n:
        raise ValueError(f"form on G_{{{f.d},{2 * f.n}}} applied to G_{{{pv.d},{pv.n2}}} point")
    total = 0
    for c, idx in f.terms:
        total += c * pv.coords[idx]
    return pv.field.reduce(total)


def relation_terms(ibar, n):
    """The signed raw terms ``((-1)**tau, normalized index or None)`` for one ``ibar``."""
    out = []
    for t in range(1, n + 1):
        raw = tuple(ibar) + (t, n + t)
        out.append(((-1) ** tau(raw), normalize_tuple(raw)))
    return out


def sp_relation(ibar, n: int) -> LinearForm:
    """sum_t (-1)^tau(ibar, t, n+t) p_(ibar, t, n+t); repeated-index terms vanish."""
    d = len(ibar) + 2
    return LinearForm(n, d, tuple((c, idx) for c, idx in relation_terms(ibar, n) if idx is not None))


def relation_table(n: int, d: int):
    """``[(ibar, form), ...]`` over ibar in I_{d-2,2n}, zero forms included."""
    if not 1 <= d <= n:
        raise ValueError(f"need 1 <= d <= n, got d={d}, n={n}")
    if d == 1:
        return []
    ibars = [()] if d == 2 else enumerate_typeA(d - 2, 2 * n)
    return [(ibar, sp_relation(ibar, n)) for ibar in ibars]


def sp_relations(n: int, d: int) -> list[LinearForm]:
    """Linear forms whose common zeros in G_{d,2n} are the isotropic subspaces.

    Identically zero forms are dropped; :func:`zero_relation_count` reports
    how many.
    """
    return [f for _, f in relation_table(n, d) if not f.is_zero()]


def zero_relation_count(n: int, d: int) -> int:
    return sum(1 for _, f in relation_table(n, d) if f.is_zero())


def laplace_sides(u: Mat, ibar, t: int):
    """Both sides of the two-row Laplace expansion behind the relations.

    Left: ``(-1)^tau(ibar,t,n+t) * p_(ibar,t,n+t)(U)``.  Right:
    ``sum_{j1<j2} (-1)^(j1+j2+1) M(t,j1,j2) D(ibar,j1,j2)`` where ``M`` is the
    2x2 minor on rows t, n+t and columns j1, j2, and ``D`` the minor on rows
    ``ibar`` with columns j1, j2 deleted.
    """
    n2, d = u.shape
    n = n2 // 2
    if len(ibar) != d - 2:
        raise ValueError(f"ibar must have length d-2 = {d - 2}")
    F = u.field
    raw = tuple(ibar) + (t, n + t)
    idx = normalize_tuple(raw)
    p = 0 if idx is None else minor(u, idx, tuple(range(1, d + 1)))
    lhs = F.reduce((-1) ** tau(raw) * p)
    rhs = 0
    for j1, j2 in combinations(range(1, d + 1), 2):
        M = minor(u, (t, n + t), (j1, j2))
        rest = tuple(j for j in range(1, d + 1) if j not in (j1, j2))
        D = minor(u, tuple(ibar), rest) if rest else F.one
        rhs += (-1) ** (j1 + j2 + 1) * M * D
    return lhs, F.reduce(rhs)


def laplace_identity_check(u: Mat, ibar, t: int) -> bool:
    lhs, rhs = laplace_sides(u, ibar, t)
    return lhs == rhs


def verify_laplace(n: int, d: int, field: Field, count: int, rng) -> dict:
    """:func:`laplace_identity_check` on ``count`` random 2n x d matrices, all ibar and t."""
    from .exactmath import random_mat

    if not 2 <= d <= 2 * n:
        raise ValueError(f"need 2 <= d <= 2n, got d={d}")
    ibars = enumerate_typeA(d - 2, 2 * n) if d > 2 else [()]
    checked = failures = 0
    witness = None
    for _ in range(count):
        u = random_mat(field, 2 * n, d, rng)
        for ibar in ibars:
            for t in range(1, n + 1):
                checked += 1
                if not laplace_identity_check(u, ibar, t):
                    failures += 1
                    if witness is None:
                        witness = {"U": u.to_json(), "ibar": list(ibar), "t": t}
    out = {"claim": "laplace",
           "instance": {"n": n, "d": d, "field": getattr(field, "p", "QQ"), "samples": count},
           "expected": {"failures": 0},
           "achieved": {"identities_checked": checked, "failures": failures},
           "pass": failures == 0}
    if witness:
        out["witness"] = witness
    return out
