"""Plücker vectors, linear forms and the isotropy relations."""
import random
from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from spflag.exactmath import GF, QQ, Mat, det, random_mat, rank
from spflag.indices import enumerate_typeA
from spflag.pluecker import (LinearForm, evaluate, laplace_identity_check, laplace_sides, plucker,
                             relation_table, sp_relation, sp_relations, verify_laplace,
                             zero_relation_count)
from spflag.schubert import e_point
from spflag.symplectic import SymplecticContext, borel_sample, is_isotropic


def test_plucker_examples():
    pv = plucker(e_point((1, 2), 4, QQ))
    assert pv.support() == [(1, 2)] and pv[(1, 2)] == 1
    u = Mat(QQ, [[1, 0], [0, 1], [1, 0], [0, 0]])
    raw = plucker(u, normalize=False)
    assert raw[(1, 2)] == 1 and raw[(2, 3)] == -1
    assert set(raw.support()) == {(1, 2), (2, 3)}
    with pytest.raises(ValueError):
        plucker(Mat(QQ, [[1, 1], [0, 0], [0, 0], [0, 0]]))


def test_plucker_matches_det():
    u = Mat(QQ, [[1, 0, 0], [0, 1, 0], [0, 0, 1], [2, 1, 0], [1, 3, 1], [0, 1, 5]])
    pv = plucker(u, normalize=False)
    for idx in combinations(range(1, 7), 3):
        assert pv[idx] == det(u.submatrix([i - 1 for i in idx], range(3)))


def test_plucker_normalization_is_basis_independent(rng):
    F = GF(101)
    u = random_mat(F, 6, 3, rng)
    g = Mat(F, [[1, 2, 0], [0, 1, 3], [4, 0, 1]])
    assert rank(u) == 3 and det(g) != 0
    assert plucker(u).key() == plucker(u @ g).key()


def test_relations_n3_d2():
    table = relation_table(3, 2)
    assert len(table) == 1
    assert table[0][1].to_text() == "+p[1,4] +p[2,5] +p[3,6]"
    assert [c for c, _ in table[0][1].terms] == [1, 1, 1]


def test_relations_n3_d3():
    forms = {ibar: f.to_text() for ibar, f in relation_table(3, 3)}
    assert forms[(1,)] == "+p[1,2,5] +p[1,3,6]"
    assert forms[(2,)] == "-p[1,2,4] +p[2,3,6]"
    assert forms[(4,)] == "-p[2,4,5] -p[3,4,6]"
    assert len(forms) == 6 and zero_relation_count(3, 3) == 0


@pytest.mark.parametrize("n,d", [(n, d) for n in range(1, 5) for d in range(1, n + 1)])
def test_relations_vanish_on_isotropic_points(n, d):
    rng = random.Random(n * 10 + d)
    ctx = SymplecticContext(n, GF(1009))
    forms = sp_relations(n, d)
    for _ in range(5):
        g = borel_sample(rng, ctx)
        u = g @ e_point(tuple(range(1, d + 1)), 2 * n, ctx.field)
        pv = plucker(u)
        assert all(evaluate(f, pv) == 0 for f in forms)


def test_relation_detects_non_isotropy():
    f = sp_relation((), 3)
    assert evaluate(f, plucker(e_point((1, 2), 6, QQ))) == 0
    assert evaluate(f, plucker(e_point((1, 4), 6, QQ))) == 1
    assert evaluate(LinearForm(3, 2, ()), plucker(e_point((1, 4), 6, QQ))) == 0
    with pytest.raises(ValueError):
        evaluate(f, plucker(e_point((1, 2, 3), 6, QQ)))


@pytest.mark.parametrize("n,d", [(2, 2), (3, 2), (3, 3)])
def test_relations_cut_out_isotropy_on_random_points(n, d):
    # for random points the relations vanish exactly when the point is isotropic
    rng = random.Random(7)
    ctx = SymplecticContext(n, GF(3))
    forms = sp_relations(n, d)
    for _ in range(200):
        u = random_mat(GF(3), 2 * n, d, rng)
        if rank(u) < d:
            continue
        pv = plucker(u)
        assert all(evaluate(f, pv) == 0 for f in forms) == is_isotropic(u, ctx)


def test_form_text_roundtrip():
    f = LinearForm(3, 3, ((-1, (1, 2, 4)), (1, (2, 3, 6))))
    assert LinearForm.from_text(f.to_text(), 3, 3) == f
    assert LinearForm.from_dict(f.to_dict()) == f
    assert LinearForm(3, 2, ((1, (1, 4)), (-1, (1, 4)))).to_text() == "0"
    assert LinearForm.from_text("0", 3, 2).is_zero()
    assert LinearForm(3, 2, ((2, (2, 5)), (1, (1, 4)))).to_text() == "+p[1,4] +2p[2,5]"
    with pytest.raises(ValueError):
        LinearForm.from_text("+p[1,4] junk", 3, 2)
    with pytest.raises(ValueError):
        LinearForm(2, 2, ((1, (2, 1)),))


@given(st.lists(st.tuples(st.integers(-3, 3), st.sampled_from(enumerate_typeA(2, 6))), max_size=6))
def test_form_roundtrip_property(terms):
    f = LinearForm(3, 2, tuple(terms))
    assert LinearForm.from_text(f.to_text(), 3, 2) == f
    assert LinearForm.from_dict(f.to_dict()) == f


def test_laplace_on_fixed_matrix():
    u = Mat(QQ, [[1, 2, 0], [0, 1, 1], [3, 0, 1], [1, 1, 1], [2, 0, 5], [0, 4, 1]])
    for ibar in [(1,), (4,), (6,)]:
        for t in (1, 2, 3):
            lhs, rhs = laplace_sides(u, ibar, t)
            assert lhs == rhs


def test_laplace_random():
    rep = verify_laplace(3, 3, GF(1009), 20, random.Random(0))
    assert rep["pass"] and rep["achieved"]["identities_checked"] == 20 * 6 * 3
    assert verify_laplace(4, 2, QQ, 10, random.Random(1))["pass"]
    u = random_mat(GF(1009), 8, 4, random.Random(2))
    assert all(laplace_identity_check(u, ibar, t)
               for ibar in enumerate_typeA(2, 8) for t in range(1, 5))
