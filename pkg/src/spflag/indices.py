"""Index tuples for type A and type C Plücker coordinates.

All labels are 1-based.  ``n`` is the half-rank, so type C tuples live in
``[1, 2n]``.  The type C order is read off the chain

    1 < 2 < ... < n < 2n < 2n-1 < ... < n+1

and :func:`rank_sp` gives the position of a label in that chain.  Type C
tuples are written increasing on the labels ``<= n`` and then decreasing on
the labels ``> n``, which is the same as increasing in chain position.
"""
from __future__ import annotations

from itertools import combinations, product
from typing import Sequence

IndexTuple = tuple


def _check_dn(d: int, n: int):
    if not 1 <= d <= n:
        raise ValueError(f"need 1 <= d <= n, got d={d}, n={n}")


def _check_label(i: int, top: int):
    if not 1 <= i <= top:
        raise ValueError(f"label {i} out of range 1..{top}")


def enumerate_typeA(d: int, n: int) -> list[IndexTuple]:
    """I_{d,n} in lexicographic order."""
    _check_dn(d, n)
    return list(combinations(range(1, n + 1), d))


def hat(i: int, n: int) -> int:
    return i if i <= n else i - n


def partner(i: int, n: int) -> int:
    """The other label with the same hat."""
    return i + n if i <= n else i - n


def chain(n: int) -> tuple:
    """Labels 1..2n listed bottom to top in the type C order."""
    return tuple(range(1, n + 1)) + tuple(range(2 * n, n, -1))


def rank_sp(i: int, n: int) -> int:
    """Position (1-based) of label ``i`` in :func:`chain`."""
    _check_label(i, 2 * n)
    return i if i <= n else 3 * n + 1 - i


def sigma(i: int, n: int) -> int:
    """Label immediately below ``i`` in the chain; 0 below the bottom label 1."""
    _check_label(i, 2 * n)
    if i <= n:
        return i - 1
    if i < 2 * n:
        return i + 1
    return n


def sigma_ge(i: int, j: int, n: int) -> bool:
    """Label order by iterating :func:`sigma` down from ``i`` (reflexive)."""
    while i != j:
        if i == 0:
            return False
        i = sigma(i, n)
    return True


def shape_sort(entries: Sequence[int], n: int) -> IndexTuple:
    """Sort labels into type C shape (increasing chain position)."""
    return tuple(sorted(entries, key=lambda i: rank_sp(i, n)))


def is_spbar_index(t: Sequence[int], n: int) -> bool:
    """Member of the image of I_{d,2n} under s (distinct labels in shape)."""
    t = tuple(t)
    if not all(1 <= i <= 2 * n for i in t) or len(set(t)) != len(t):
        return False
    return t == shape_sort(t, n)


def is_sp_index(t: Sequence[int], n: int) -> bool:
    """Member of I^{Sp}: shaped, and no two labels share a hat."""
    if not is_spbar_index(t, n):
        return False
    hats = [hat(i, n) for i in t]
    return len(set(hats)) == len(hats)


def enumerate_spbar(d: int, n: int) -> list[IndexTuple]:
    """The image set of I_{d,2n} under s, ordered by chain-position tuples."""
    _check_dn(d, n)
    return [s_apply(t, n) for t in combinations(range(1, 2 * n + 1), d)]


def enumerate_sp(d: int, n: int) -> list[IndexTuple]:
    """I^{Sp}_{d,2n}, ordered lexicographically by chain-position tuples.

    Built by choosing d hats and a side for each; the count is C(n,d) * 2^d.
    """
    _check_dn(d, n)
    out = []
    for hats in combinations(range(1, n + 1), d):
        for sides in product((0, 1), repeat=d):
            out.append(shape_sort([h + n * s for h, s in zip(hats, sides)], n))
    out.sort(key=lambda t: tuple(rank_sp(i, n) for i in t))
    return out


def bottom(d: int, n: int) -> IndexTuple:
    """Least element (1, ..., d) of I^{Sp}_{d,2n}."""
    _check_dn(d, n)
    return tuple(range(1, d + 1))


def top(d: int, n: int) -> IndexTuple:
    """Greatest element (n+d, ..., n+1) of I^{Sp}_{d,2n}."""
    _check_dn(d, n)
    return tuple(range(n + d, n, -1))


def ranks(t: Sequence[int], n: int) -> tuple:
    return tuple(rank_sp(i, n) for i in t)


def _same_length(i, j):
    if len(i) != len(j):
        raise ValueError(f"length mismatch: {tuple(i)} vs {tuple(j)}")


def sp_ge(i: Sequence[int], j: Sequence[int], n: int) -> bool:
    """``i >=^Sp j``: componentwise comparison of chain positions."""
    _same_length(i, j)
    return all(rank_sp(a, n) >= rank_sp(b, n) for a, b in zip(i, j))


def sp_le(i: Sequence[int], j: Sequence[int], n: int) -> bool:
    return sp_ge(j, i, n)


# decides j <=^Sp i
sp_le_tuple = sp_ge


def sp_ge_display(i: Sequence[int], j: Sequence[int], n: int) -> bool:
    """``i >=^Sp j`` by the two-case rule on raw labels.

    For each t: ``i_t >= j_t`` when ``j_t <= n``, and ``n < i_t <= j_t``
    when ``j_t > n``.  Kept separate from :func:`sp_ge` so each can check
    the other.
    """
    _same_length(i, j)
    for a, b in zip(i, j):
        if b <= n:
            if not a >= b:
                return False
        elif not n < a <= b:
            return False
    return True


def bruhat_ge_typeA(i: Sequence[int], j: Sequence[int]) -> bool:
    """``i >= j`` in I_{d,n}: componentwise."""
    _same_length(i, j)
    return all(a >= b for a, b in zip(i, j))


def s_perm(i: int, n: int) -> int:
    """Fix 1..n and reverse n+1..2n."""
    _check_label(i, 2 * n)
    return i if i <= n else 3 * n + 1 - i


def s_apply(t: Sequence[int], n: int) -> IndexTuple:
    """Image of an increasing tuple under s, sorted into type C shape."""
    return shape_sort([s_perm(i, n) for i in t], n)


def s_inverse_apply(t: Sequence[int], n: int) -> IndexTuple:
    # s is an involution
    return tuple(sorted(s_perm(i, n) for i in t))


def tau(t: Sequence[int]) -> int:
    """Inversion count, taken to be 0 when an entry repeats."""
    t = tuple(t)
    if len(set(t)) != len(t):
        return 0
    return sum(1 for a in range(len(t)) for b in range(a + 1, len(t)) if t[a] > t[b])


def normalize_tuple(t: Sequence[int]):
    """Sorted tuple, or None (the zero coordinate) when an entry repeats."""
    t = tuple(t)
    if len(set(t)) != len(t):
        return None
    return tuple(sorted(t))


def full_weyl_tuple(w: Sequence[int], n: int) -> tuple:
    """Expand an I^{Sp} abbreviation to the full 2n-tuple of its coset representative.

    Positions d+1..n take the unused hats in increasing order; position t+n
    holds the partner of position t.
    """
    w = tuple(w)
    if not is_sp_index(w, n):
        raise ValueError(f"{w} is not in I^Sp for n={n}")
    used = {hat(i, n) for i in w}
    first = w + tuple(h for h in range(1, n + 1) if h not in used)
    return first + tuple(partner(i, n) for i in first)


def in_weyl_group(full: Sequence[int], n: int) -> bool:
    """Is ``full`` a permutation of 1..2n with matching hats at t and t+n?"""
    full = tuple(full)
    if sorted(full) != list(range(1, 2 * n + 1)):
        return False
    return all(hat(full[t], n) == hat(full[t + n], n) for t in range(n))


def abbreviate(full: Sequence[int], d: int) -> IndexTuple:
    return tuple(full[:d])
