"""Standard monomials and their evaluation-rank checks."""
import random
from math import comb

import pytest

from spflag.exactmath import GF, QQ
from spflag.indices import enumerate_sp, enumerate_spbar, enumerate_typeA, sp_ge
from spflag.oracle import richardson_points
from spflag.pluecker import plucker
from spflag.schubert import RichardsonSpec, e_point
from spflag.smt import (Monomial, all_monomials, enumerate_standard, eval_monomial,
                        richardson_standard_monomials, standard_on_richardson, verify_basis,
                        verify_independence_escalating, verify_independence_on_richardson)


def test_counts():
    assert len(enumerate_standard("A", 2, 4, 2)) == 20
    assert len(enumerate_standard("C", 2, 4, 2)) == 20
    assert len(all_monomials(2, 4, 2)) == 21
    assert [f.factors for f in enumerate_standard("A", 2, 4, 1)] == [(w,) for w in enumerate_typeA(2, 4)]
    assert len(enumerate_standard("C", 2, 6, 1)) == comb(6, 2)


@pytest.mark.parametrize("d,n,m", [(1, 2, 3), (2, 2, 3), (2, 3, 2), (3, 3, 2)])
def test_type_A_and_C_counts_agree(d, n, m):
    assert len(enumerate_standard("A", d, 2 * n, m)) == len(enumerate_standard("C", d, 2 * n, m))


def test_standard_order_and_shape():
    mons = enumerate_standard("C", 2, 6, 2)
    keys = [f.factors for f in mons]
    assert keys == sorted(keys)
    for f in mons:
        a, b = f.factors
        assert sp_ge(a, b, 3) and a in enumerate_spbar(2, 3)
    assert Monomial([[1, 2]]).to_dict() == {"factors": [[1, 2]]}
    with pytest.raises(ValueError):
        enumerate_standard("B", 2, 4, 2)
    with pytest.raises(ValueError):
        enumerate_standard("C", 2, 5, 2)


def test_eval_examples():
    pv = plucker(e_point((1, 2), 4, QQ))
    assert eval_monomial(Monomial([(1, 2)]), pv) == 1
    assert eval_monomial(Monomial([(4, 3), (1, 2)]), pv) == 0
    assert eval_monomial(Monomial([(1, 2), (1, 2)]), pv) == 1


def test_standard_on_richardson_modes():
    spec = RichardsonSpec(2, 2, (2, 3), (1, 4))
    strict = richardson_standard_monomials(spec, 2, strict=True)
    assert [f.factors for f in strict] == [((1, 4), (1, 4)), ((2, 3), (1, 4)), ((2, 3), (2, 3))]
    assert len(richardson_standard_monomials(spec, 2)) == 9
    assert not standard_on_richardson(Monomial([(1, 3), (1, 4)]), spec, strict=True)
    assert standard_on_richardson(Monomial([(1, 3), (1, 4)]), spec)
    assert not standard_on_richardson(Monomial([(1, 4), (2, 3)]), spec)


@pytest.mark.parametrize("kind", ["A", "C"])
def test_basis_g24(kind):
    rep = verify_basis(kind, 2, 4, 2, QQ, 40, random.Random(0))
    assert rep.passed
    assert rep.achieved["rank_all"] == rep.achieved["rank_standard"] == 20
    assert verify_basis(kind, 2, 4, 1, QQ, 10, random.Random(0)).achieved["rank_all"] == 6


def test_basis_g26():
    rep = verify_basis("C", 2, 6, 2, GF(1009), 150, random.Random(1))
    assert rep.passed and rep.achieved["rank_all"] == 105


def test_basis_guards():
    with pytest.raises(ValueError):
        verify_basis("A", 2, 4, 2, GF(13), 40, random.Random(0))
    rep = verify_basis("A", 2, 4, 2, QQ, 10, random.Random(0))
    assert not rep.passed and rep.status == "insufficient-samples"


def test_richardson_independence():
    spec = RichardsonSpec(2, 2, (2, 3), (1, 4))
    rep = verify_independence_escalating(spec, 2)
    assert rep.passed and rep.achieved["rank"] == 3
    assert rep.notes["primes_tried"] == [7]
    pts = richardson_points(7, spec)
    short = verify_independence_on_richardson(spec, 2, GF(7), pts[:2])
    assert short.status == "not-enough-points" and not short.passed


def test_richardson_full_space_modes():
    full = RichardsonSpec.full(2, 2)
    strict = verify_independence_escalating(full, 2, primes=(7,))
    assert strict.passed and strict.achieved["rank"] == 10
    # with repeated-hat factors the 20 products satisfy the quadric relation of LG(2,4) in P^4
    loose = verify_independence_escalating(full, 2, primes=(7,), strict=False)
    assert not loose.passed and loose.achieved == {"rank": 14, "monomials": 20}


@pytest.mark.parametrize("u,v", [(u, v) for u in enumerate_sp(2, 2) for v in enumerate_sp(2, 2)
                                 if sp_ge(u, v, 2)])
def test_strict_independence_all_intervals(u, v):
    rep = verify_independence_escalating(RichardsonSpec(2, 2, u, v), 2)
    assert rep.passed
