import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from etalgebra import linalg
from etalgebra.algebra import make_matrix_algebra
from etalgebra.errors import BoundaryError, CharacteristicError, InvalidInputError, NotDecomposableError
from etalgebra.etale import EtaleSubalgebra, type_of
from etalgebra.fields import GF, QQ
from etalgebra.linalg import Subspace, iter_rref
from etalgebra.plucker import (CONTAINED, PAIR, TANGENT, PluckerPoint, PointPairOnQuadric,
                               QuadraticSpace, etale2_to_line, klein_quadric, line_quadric_intersect,
                               line_to_etale2, pair_to_line, plucker_embed, plucker_inverse,
                               severi_brauer_point, split_form, wedge2_action, wedge_form,
                               ideal_of_column_space)

fr = lambda *xs: tuple(Fraction(x) for x in xs)  # noqa: E731


def e(i, n=4):
    return tuple(Fraction(int(j == i)) for j in range(n))


def test_embed_examples():
    assert plucker_embed(Subspace(QQ, 4, [e(0), e(1)])).coords == fr(1, 0, 0, 0, 0, 0)
    assert plucker_embed(Subspace(QQ, 4, [e(2), e(3)])).coords == fr(0, 0, 0, 0, 0, 1)
    p = plucker_embed(Subspace(QQ, 4, [fr(1, 0, 1, 0), fr(0, 1, 0, 1)]))
    assert p.coords == fr(1, 0, 1, -1, 0, 1)
    assert p.is_decomposable
    with pytest.raises(InvalidInputError):
        plucker_embed(Subspace(QQ, 4, [e(0)]))


def test_embedding_is_basis_independent():
    a = plucker_embed(Subspace(QQ, 4, [fr(1, 2, 0, 3), fr(0, 1, 1, 1)]))
    b = plucker_embed(Subspace(QQ, 4, [fr(2, 5, 1, 7), fr(1, 1, -1, 2)]))
    assert a == b


def test_inverse_examples():
    assert plucker_inverse(PluckerPoint(fr(1, 0, 0, 0, 0, 0), QQ)) == Subspace(QQ, 4, [e(0), e(1)])
    assert plucker_inverse(PluckerPoint(fr(0, 0, 0, 0, 0, 1), QQ)) == Subspace(QQ, 4, [e(2), e(3)])
    with pytest.raises(NotDecomposableError):
        plucker_inverse(PluckerPoint(fr(1, 0, 0, 0, 0, 1), QQ))
    with pytest.raises(InvalidInputError):
        PluckerPoint(fr(0, 0, 0, 0, 0, 0), QQ)


def test_wedge_form_examples():
    e12, e13, e34 = fr(1, 0, 0, 0, 0, 0), fr(0, 1, 0, 0, 0, 0), fr(0, 0, 0, 0, 0, 1)
    assert wedge_form(QQ, e12, e34) == 1
    assert wedge_form(QQ, e12, e13) == 0
    w = fr(1, 0, 0, 0, 0, 1)
    assert wedge_form(QQ, w, w) == 2


def test_characteristic_two_rejected():
    with pytest.raises(CharacteristicError):
        PluckerPoint((1, 0, 0, 0, 0, 0), GF(2))
    with pytest.raises(CharacteristicError):
        QuadraticSpace(GF(2), [[1, 0], [0, 1]])


def test_line_quadric_examples():
    q = split_form(QQ)
    pp = line_quadric_intersect(Subspace(QQ, 4, [e(0), e(3)]), q)
    assert pp.kind == PAIR and pp.form == fr(0, 1, 0)
    assert pp.points() == (QQ, [e(3), e(0)])
    assert pair_to_line(pp) == Subspace(QQ, 4, [e(0), e(3)])

    pp = line_quadric_intersect(Subspace(QQ, 4, [e(0), fr(0, 1, 1, 0)]), q)
    assert pp.kind == TANGENT and pp.form == fr(0, 0, 1)
    assert pp.points()[1] == [e(0), e(0)]
    with pytest.raises(BoundaryError):
        pair_to_line(pp)

    pp = line_quadric_intersect(Subspace(QQ, 4, [e(0), e(1)]), q)
    assert pp.kind == CONTAINED
    with pytest.raises(BoundaryError):
        pair_to_line(pp)


def test_conjugate_pair_descends():
    q = QuadraticSpace(QQ, [[Fraction(int(i == j)) for j in range(4)] for i in range(4)])
    W = Subspace(QQ, 4, [e(0), e(1)])
    pp = line_quadric_intersect(W, q)
    assert pp.kind == PAIR and pp.form == fr(1, 0, 1)
    K, pts = pp.points()
    assert K.degree == 2
    assert pair_to_line(pp) == W
    assert PointPairOnQuadric.from_points(q, pts, K) == pp


def test_degenerate_form_rejected():
    q = QuadraticSpace(QQ, [[Fraction(int(i == j == 0)) for j in range(4)] for i in range(4)])
    assert not q.is_nondegenerate
    with pytest.raises(InvalidInputError):
        line_quadric_intersect(Subspace(QQ, 4, [e(0), e(1)]), q)


def test_quadratic_space_helpers():
    F = GF(5)
    q = QuadraticSpace.from_form(F, 4, {(0, 3): 1, (1, 2): 4})
    assert q == split_form(F)
    assert q.value((1, 0, 0, 1)) == 1
    assert q.is_similar(QuadraticSpace(F, [[F.mul(3, c) for c in row] for row in q.gram]))
    assert not q.is_similar(QuadraticSpace(F, linalg.identity(F, 4)))
    with pytest.raises(InvalidInputError):
        QuadraticSpace(F, [[1, 2], [3, 1]])


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(-5, 5), min_size=16, max_size=16), st.lists(st.integers(-5, 5), min_size=6, max_size=6),
       st.lists(st.integers(-5, 5), min_size=6, max_size=6))
def test_wedge_form_det_scaling(gs, w1, w2):
    g = [[Fraction(x) for x in gs[4 * i: 4 * i + 4]] for i in range(4)]
    d = linalg.det(QQ, g)
    w1, w2 = [Fraction(x) for x in w1], [Fraction(x) for x in w2]
    lhs = wedge_form(QQ, wedge2_action(QQ, g, w1), wedge2_action(QQ, g, w2))
    assert lhs == d * wedge_form(QQ, w1, w2)


def test_exhaustive_roundtrip_f3():
    F = GF(3)
    for rows in iter_rref(F, 4, 2):
        W = Subspace.from_rref(F, 4, rows)
        assert plucker_inverse(plucker_embed(W)) == W


def test_klein_quadric_contains_grassmannian():
    F = GF(5)
    Q = klein_quadric(F)
    rng = random.Random(3)
    for _ in range(30):
        W = Subspace(F, 4, [[rng.randrange(5) for _ in range(4)] for _ in range(2)])
        if W.dim == 2:
            assert Q.value(plucker_embed(W).coords) == 0


def test_split_model_etale2_roundtrip():
    F = GF(3)
    A = make_matrix_algebra(4, F)
    # block diagonal F x F of type [2,2]
    blk = [F.zero] * 16
    blk[0] = blk[5] = F.one
    E = EtaleSubalgebra.span(A, [A.one_coords, tuple(blk)])
    assert type_of(E) == [2, 2]
    line = etale2_to_line(E)
    assert line.ambient == 6 and line.dim == 2
    assert line_to_etale2(A, line) == E
    # X with X^2 = -1: its eigenplanes are conjugate over F_9
    c = [F.zero] * 16
    for i, j, v in ((0, 2, 2), (1, 3, 2), (2, 0, 1), (3, 1, 1)):
        c[i * 4 + j] = v
    E2 = EtaleSubalgebra.span(A, [A.one_coords, tuple(c)])
    assert type_of(E2) == [2, 2]
    line2 = etale2_to_line(E2)
    assert line_to_etale2(A, line2) == E2


def test_severi_brauer_point_on_klein_quadric():
    F = GF(5)
    A = make_matrix_algebra(4, F)
    U = Subspace(F, 4, [(1, 2, 0, 0), (0, 0, 1, 3)])
    p = severi_brauer_point(ideal_of_column_space(A, U))
    assert p == plucker_embed(U)
    assert klein_quadric(F).value(p.coords) == 0
