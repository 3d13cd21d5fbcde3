from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from etalgebra.errors import InvalidInputError, UnsupportedSplittingError
from etalgebra.fields import GF, QQ
from etalgebra.poly import (Poly, find_roots, finite_extension, irreducible_polynomial, is_irreducible,
                            splitting_extension, squarefree_test)


def P(coeffs, F=QQ):
    return Poly([F.load(c) for c in coeffs], F)


def test_roots_over_prime_field():
    assert find_roots(P([1, 0, 1], GF(5)), GF(5)) == [2, 3]
    assert find_roots(P([1, 0, 1], GF(3)), GF(3)) == []


def test_rational_roots_with_multiplicity():
    f = Poly.from_roots([Fraction(1), Fraction(1), Fraction(-2, 3)], QQ)
    assert find_roots(f) == [Fraction(-2, 3), Fraction(1), Fraction(1)]


def test_splitting_over_gf2():
    E, roots = splitting_extension(P([1, 1, 1], GF(2)))
    assert E.order == 4
    assert len(roots) == 2


def test_splitting_over_q_quadratic():
    E, roots = splitting_extension(P([1, 0, 1]))
    assert E.modulus == (Fraction(1), Fraction(0), Fraction(1))
    assert len(roots) == 2
    f = P([1, 0, 1]).over(E)
    assert all(E.is_zero(f(r)) for r in roots)


def test_splitting_rejects_bad_input():
    with pytest.raises(InvalidInputError):
        splitting_extension(P([1, 2, 1]))  # (x+1)^2
    with pytest.raises(UnsupportedSplittingError):
        splitting_extension(P([-2, 0, 0, 1]))  # x^3 - 2


def test_edf_agrees_with_exhaustive():
    F = finite_extension(GF(3), 3)
    f = Poly.from_roots(list(F.elements())[3:9], F)
    assert find_roots(f, F, method="edf") == find_roots(f, F, method="exhaustive")


def test_irreducibility():
    assert is_irreducible(P([1, 1, 0, 1], GF(2)))
    assert not is_irreducible(P([1, 0, 0, 1], GF(2)))
    assert is_irreducible(P([-2, 0, 1]))
    assert not is_irreducible(P([-4, 0, 1]))
    g = irreducible_polynomial(GF(2), 6)
    assert g.coeffs == tuple([1, 1, 0, 0, 0, 0, 1])


def test_squarefree():
    assert squarefree_test(P([0, -1, 0, 1]))
    assert not squarefree_test(P([1, -2, 1]))


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(0, 6), min_size=1, max_size=6))
def test_from_roots_roundtrip(rs):
    F = GF(7)
    f = Poly.from_roots(rs, F)
    assert find_roots(f, F) == sorted(rs)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(-9, 9), min_size=1, max_size=6),
       st.lists(st.integers(-9, 9), min_size=1, max_size=4).filter(lambda c: c[-1] != 0))
def test_divmod_identity(a, b):
    f, g = P(a), P(b)
    q, r = divmod(f, g)
    assert q * g + r == f
    assert r.is_zero or r.degree < g.degree
