"""Index tuples, the type C chain order and Weyl abbreviations."""
from itertools import combinations, product
from math import comb

import pytest
from hypothesis import given, strategies as st

from spflag.indices import (abbreviate, bottom, bruhat_ge_typeA, chain, enumerate_sp,
                            enumerate_spbar, enumerate_typeA, full_weyl_tuple, hat,
                            in_weyl_group, is_sp_index, is_spbar_index, normalize_tuple,
                            rank_sp, s_apply, s_inverse_apply, sigma, sigma_ge, sp_ge,
                            sp_ge_display, sp_le, tau, top)


def test_typeA_enumeration():
    assert enumerate_typeA(2, 4) == [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]
    assert enumerate_typeA(1, 3) == [(1,), (2,), (3,)]
    assert len(enumerate_typeA(3, 6)) == 20


def test_sp_enumeration_examples():
    assert enumerate_sp(2, 2) == [(1, 2), (1, 4), (2, 3), (4, 3)]
    assert enumerate_sp(1, 1) == [(1,), (2,)]
    assert len(enumerate_sp(2, 3)) == 12


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_sp_count_and_filter(n):
    for d in range(1, n + 1):
        sp = enumerate_sp(d, n)
        assert len(sp) == comb(n, d) * 2 ** d
        # exhaustive filter over all ordered tuples
        brute = {t for t in product(range(1, 2 * n + 1), repeat=d) if is_sp_index(t, n)}
        assert set(sp) == brute
        assert bottom(d, n) in sp and top(d, n) in sp
        assert all(sp_ge(top(d, n), w, n) and sp_ge(w, bottom(d, n), n) for w in sp)


def test_chain_and_sigma():
    assert chain(3) == (1, 2, 3, 6, 5, 4)
    assert [rank_sp(i, 3) for i in chain(3)] == [1, 2, 3, 4, 5, 6]
    assert [sigma(i, 3) for i in chain(3)] == [0, 1, 2, 3, 6, 5]
    assert hat(5, 3) == 2


def test_order_examples():
    assert sp_ge((4, 3), (2, 3), 2)
    assert sp_ge((2, 3), (1, 4), 2) and not sp_ge((1, 4), (2, 3), 2)
    assert bruhat_ge_typeA((2, 4), (1, 3))
    assert not bruhat_ge_typeA((1, 4), (2, 3)) and not bruhat_ge_typeA((2, 3), (1, 4))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_three_orders_agree(n):
    for d in range(1, n + 1):
        elems = enumerate_spbar(d, n)
        for i, j in product(elems, repeat=2):
            a = sp_ge(i, j, n)
            assert a == sp_ge_display(i, j, n)
            assert a == all(sigma_ge(x, y, n) for x, y in zip(i, j))
            assert sp_le(j, i, n) == a


@pytest.mark.parametrize("n", [1, 2, 3])
def test_s_is_order_isomorphism(n):
    for d in range(1, n + 1):
        A = enumerate_typeA(d, 2 * n)
        assert sorted(s_apply(t, n) for t in A) == sorted(enumerate_spbar(d, n))
        for a, b in product(A, repeat=2):
            assert bruhat_ge_typeA(a, b) == sp_ge(s_apply(a, n), s_apply(b, n), n)
        assert all(s_inverse_apply(s_apply(t, n), n) == t for t in A)


def test_s_apply_examples():
    assert s_apply((1, 2, 5), 3) == (1, 2, 5)
    assert s_apply((1, 4), 2) == (1, 3)
    assert s_apply((3, 4), 2) == (4, 3)


def test_normalize_and_tau():
    assert normalize_tuple((2, 1, 4)) == (1, 2, 4)
    assert normalize_tuple((1, 1, 4)) is None
    assert normalize_tuple((1, 2, 5)) == (1, 2, 5)
    assert tau((4, 2, 5)) == 1 and tau((4, 3, 6)) == 1
    assert tau((1, 1, 4)) == 0
    assert tau((3, 2, 1)) == 3


@given(st.lists(st.integers(1, 9), min_size=1, max_size=6, unique=True))
def test_tau_parity_is_sort_sign(t):
    # parity of tau equals parity of n - #cycles of the sorting permutation
    order = sorted(range(len(t)), key=lambda k: t[k])
    seen, cycles = set(), 0
    for k in range(len(t)):
        if k not in seen:
            cycles += 1
            while k not in seen:
                seen.add(k)
                k = order[k]
    assert tau(t) % 2 == (len(t) - cycles) % 2


def test_weyl_reconstruction():
    full = full_weyl_tuple((1, 5, 8, 7), 5)
    assert full == (1, 5, 8, 7, 4, 6, 10, 3, 2, 9)
    assert in_weyl_group(full, 5)
    assert abbreviate(full, 4) == (1, 5, 8, 7)
    # the tuple with positions 8 and 9 swapped breaks the hat constraint
    assert not in_weyl_group((1, 5, 8, 7, 4, 6, 10, 2, 3, 9), 5)
    assert full_weyl_tuple((1, 2), 2) == (1, 2, 3, 4)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_weyl_tuples_valid(n):
    for d in range(1, n + 1):
        for w in enumerate_sp(d, n):
            full = full_weyl_tuple(w, n)
            assert in_weyl_group(full, n) and abbreviate(full, d) == w


def test_bad_inputs():
    with pytest.raises(ValueError):
        enumerate_sp(3, 2)
    with pytest.raises(ValueError):
        sp_ge((1, 2), (1,), 2)
    with pytest.raises(ValueError):
        full_weyl_tuple((1, 3), 2)
    assert not is_sp_index((1, 3), 2) and is_spbar_index((1, 3), 2)
    assert not is_spbar_index((3, 4), 2)
