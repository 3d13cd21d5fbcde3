from fractions import Fraction

import pytest

from etalgebra.algebra import (Partition, RightIdeal, charpoly_left, ideal_from_idempotent,
                               load_algebra, make_matrix_algebra, make_quaternion_algebra,
                               make_structure_constant_algebra, min_poly, reduced_rank,
                               summand_generator)
from etalgebra.errors import CharacteristicError, InvalidInputError, StructuralError
from etalgebra.fields import GF, QQ
from etalgebra.linalg import Subspace
from etalgebra.poly import Poly


def mat(A, rows):
    F = A.field
    return A.element(F.load(x) for r in rows for x in r)


def test_matrix_multiplication():
    A = make_matrix_algebra(2, QQ)
    x = mat(A, [[1, 2], [3, 4]])
    y = mat(A, [[0, 1], [1, 0]])
    assert x * y == mat(A, [[2, 1], [4, 3]])
    assert A.one * x == x == x * A.one
    assert x ** 0 == A.one


def test_quaternion_relations():
    m1 = Fraction(-1)
    H = make_quaternion_algebra(m1, m1, QQ)
    one, i, j, k = H.basis()
    assert i * i == -one and j * j == -one and k * k == -one
    assert i * j == k and j * i == -k
    assert j * k == i and k * i == j
    with pytest.raises(CharacteristicError):
        make_quaternion_algebra(1, 1, GF(2))


def test_min_poly_examples():
    A = make_matrix_algebra(2, QQ)
    assert min_poly(mat(A, [[1, 0], [0, 2]])) == Poly([Fraction(2), Fraction(-3), Fraction(1)], QQ)
    assert min_poly(A.one).degree == 1
    # left multiplication on M_n has char poly equal to the n-th power of the char poly
    a = mat(A, [[0, 1], [1, 1]])
    f = min_poly(a)
    assert charpoly_left(a) == f * f


def test_reduced_rank_and_generator():
    A = make_matrix_algebra(3, GF(2))
    e = mat(A, [[1, 0, 0], [0, 1, 0], [0, 0, 0]])
    I = ideal_from_idempotent(e)
    assert I.dim == 6 and reduced_rank(I) == 2
    g = summand_generator(I)
    assert g * g == g and ideal_from_idempotent(g).subspace == I.subspace
    with pytest.raises(InvalidInputError):
        ideal_from_idempotent(mat(A, [[0, 1, 0], [0, 0, 0], [0, 0, 0]]))


def test_right_ideal_closure_and_rank_divisibility():
    A = make_matrix_algebra(2, QQ)
    F = QQ
    # first row is a right ideal of dimension 2
    I = RightIdeal(A, Subspace(F, 4, [A.basis_coords(0), A.basis_coords(1)]))
    assert reduced_rank(I) == 1
    with pytest.raises(InvalidInputError):
        RightIdeal(A, Subspace(F, 4, [A.basis_coords(0)]))
    # {0} is an ideal; a nonzero ideal of dimension 1 cannot exist in M_2, so
    # divisibility is checked on an unchecked ideal
    with pytest.raises(StructuralError):
        reduced_rank(RightIdeal(A, Subspace(F, 4, [A.basis_coords(0)]), check=False))


def test_partition():
    p = Partition.parse("1,2,1")
    assert p.parts == (2, 1, 1)
    assert p == [1, 1, 2]
    assert p.multiplicity(1) == 2 and p.n_distinct == 2 and p.length == 3 and p.total == 4
    with pytest.raises(InvalidInputError):
        Partition.parse("1,x")
    with pytest.raises(InvalidInputError):
        Partition([0, 1])


def test_structure_constants_checked():
    F = QQ
    o, z = Fraction(1), Fraction(0)
    # Q x Q with idempotent basis
    table = [[[o, z], [z, z]], [[z, z], [z, o]]]
    A = make_structure_constant_algebra(F, table, [o, o])
    assert A.dim == 2
    bad = [[[o, z], [z, o]], [[z, o], [o, o]]]
    with pytest.raises(InvalidInputError):
        make_structure_constant_algebra(F, bad, [o, o])


def test_load_algebra_roundtrip_and_errors():
    A = load_algebra({"kind": "matrix", "n": 3, "field": "GF(5)"})
    assert A.degree == 3 and A.matrix_size == 3
    H = load_algebra({"kind": "quaternion", "a": -1, "b": -3, "field": "QQ"})
    assert H.degree == 2 and H.matrix_size is None
    B = load_algebra(make_structure_constant_algebra(
        QQ, [[[Fraction(1)]]], [Fraction(1)], degree=1).descriptor)
    assert B.dim == 1
    for bad in ({"kind": "matrix"}, {"kind": "spinor"}, [], {"kind": "matrix", "n": "x"}):
        with pytest.raises(InvalidInputError):
            load_algebra(bad)


def test_base_change_is_cached():
    A = make_matrix_algebra(2, GF(3))
    from etalgebra.poly import finite_extension
    K = finite_extension(GF(3), 2)
    assert A.over(K) is A.over(K)
    assert A.over(K).over(GF(3)) is A
