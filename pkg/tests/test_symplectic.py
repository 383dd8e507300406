"""Symplectic group membership, P_d, Borel samplers and Weyl matrices."""
import random

import pytest

from spflag.exactmath import GF, QQ, Mat, diag, identity, inverse, random_mat
from spflag.indices import enumerate_sp
from spflag.pluecker import plucker
from spflag.schubert import e_point
from spflag.symplectic import (SymplecticContext, block_criterion, borel_from, borel_sample,
                               in_parabolic, is_isotropic, is_symplectic, opp_borel_sample,
                               weyl_matrix)

FIELDS = [QQ, GF(1009)]


def test_examples():
    ctx = SymplecticContext(2)
    assert is_symplectic(identity(QQ, 4), ctx)
    assert is_symplectic(ctx.J, ctx)
    assert is_symplectic(diag(QQ, [2, 1, QQ(1) / 2, 1]), ctx)
    assert not is_symplectic(diag(QQ, [2, 1, 2, 1]), ctx)
    with pytest.raises(ValueError):
        is_symplectic(identity(QQ, 3), ctx)


def test_isotropy_examples():
    ctx = SymplecticContext(2)
    assert is_isotropic(e_point((1, 2), 4, QQ), ctx)
    assert not is_isotropic(e_point((1, 3), 4, QQ), ctx)
    assert is_isotropic(e_point((4, 3), 4, QQ), ctx)


def test_borel_from_identity():
    I = identity(QQ, 3)
    assert borel_from(I, Mat(QQ, [[0] * 3] * 3)) == identity(QQ, 6)


@pytest.mark.parametrize("F", FIELDS, ids=repr)
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_borel_samples(F, n):
    rng = random.Random(n)
    ctx = SymplecticContext(n, F)
    for _ in range(100 // 4):
        b = borel_sample(rng, ctx)
        assert is_symplectic(b, ctx)
        assert all(in_parabolic(b, d, ctx) for d in range(1, n + 1))
        for d in range(1, n + 1):
            # B fixes span{e_1..e_d}
            pv = plucker(b @ e_point(tuple(range(1, d + 1)), 2 * n, F))
            assert pv[tuple(range(1, d + 1))] != 0
        assert is_symplectic(opp_borel_sample(rng, ctx), ctx)


def test_criteria_agree_on_random_matrices():
    rng = random.Random(3)
    for k in range(1000):
        n = k % 4 + 1
        ctx = SymplecticContext(n, GF(1009))
        if k % 2:
            m = borel_sample(rng, ctx) @ opp_borel_sample(rng, ctx)
            if k % 4 == 3:
                i, j = rng.randrange(2 * n), rng.randrange(2 * n)
                rows = [list(r) for r in m.rows]
                rows[i][j] = (rows[i][j] + 1) % 1009
                m = Mat(GF(1009), rows)
        else:
            m = random_mat(GF(1009), 2 * n, 2 * n, rng)
        # is_symplectic raises if the two criteria disagree
        assert is_symplectic(m, ctx) == block_criterion(m, ctx)


def test_group_closure():
    rng = random.Random(11)
    ctx = SymplecticContext(3, QQ)
    for _ in range(100):
        a = borel_sample(rng, ctx) @ opp_borel_sample(rng, ctx)
        b = opp_borel_sample(rng, ctx)
        assert is_symplectic(a @ b, ctx)
        assert is_symplectic(inverse(a), ctx)


def test_action_preserves_isotropy():
    rng = random.Random(4)
    ctx = SymplecticContext(3, GF(1009))
    for w in enumerate_sp(2, 3):
        u = e_point(w, 6, ctx.field)
        g = borel_sample(rng, ctx) @ opp_borel_sample(rng, ctx)
        assert is_isotropic(g @ u, ctx)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_weyl_matrices_symplectic(n):
    ctx = SymplecticContext(n)
    for d in range(1, n + 1):
        for w in enumerate_sp(d, n):
            m = weyl_matrix(w, ctx)
            assert is_symplectic(m, ctx)
            # columns 1..d span e_w
            assert plucker(m.submatrix(range(2 * n), range(d))).support() == [tuple(sorted(w))]


def test_weyl_identity_and_parabolic():
    ctx = SymplecticContext(2)
    assert weyl_matrix((1, 2), ctx) == identity(QQ, 4)
    assert all(in_parabolic(identity(QQ, 4), d, ctx) for d in (1, 2))
    m = weyl_matrix((1, 4), ctx)
    assert not in_parabolic(m, 2, ctx)
    # the nonzero entry of the C block sits bottom-right
    C = m.submatrix(range(2, 4), range(2))
    assert C[1, 1] != 0 and C[0, 0] == 0
