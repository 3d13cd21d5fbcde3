from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from etalgebra.errors import InvalidInputError
from etalgebra.fields import GF, QQ, ExtensionField, is_prime, load_field, rational_sqrt
from etalgebra.poly import finite_extension, quadratic_field


def test_prime_field_arithmetic():
    F = GF(7)
    assert F.add(5, 4) == 2
    assert F.mul(3, 5) == 1
    assert F.inv(3) == 5
    assert F.neg(0) == 0
    assert list(F.elements()) == list(range(7))
    with pytest.raises(InvalidInputError):
        GF(6)


def test_rational_io_roundtrip():
    x = QQ.load("-3/4")
    assert x == Fraction(-3, 4)
    assert QQ.dump(x) == "-3/4"
    assert QQ.dump(Fraction(2)) == "2/1"
    assert QQ.load(5) == 5


def test_extension_field_basics():
    F4 = ExtensionField(GF(2), [1, 1, 1])
    assert F4.order == 4 and F4.degree == 2
    w = F4.gen
    assert F4.add(F4.mul(w, w), F4.add(w, F4.one)) == F4.zero  # w^2 + w + 1 = 0
    for x in F4.elements():
        if not F4.is_zero(x):
            assert F4.mul(x, F4.inv(x)) == F4.one
    with pytest.raises(InvalidInputError):
        ExtensionField(GF(2), [1, 0, 1])  # x^2 + 1 = (x + 1)^2


def test_coerce_and_descend():
    F = GF(3)
    F9 = finite_extension(F, 2)
    x = F9.coerce(2, F)
    assert F9.descend(x, F) == 2
    assert F9.descend(F9.gen, F) is None


def test_quadratic_field_sqrt():
    K = quadratic_field(Fraction(-4))
    r = K.sqrt(K.embed_base(Fraction(-1)))
    assert K.mul(r, r) == K.embed_base(Fraction(-1))
    assert rational_sqrt(Fraction(9, 4)) == Fraction(3, 2)
    assert rational_sqrt(Fraction(2)) is None


def test_load_field_forms():
    assert load_field("QQ") == QQ
    assert load_field("GF(5)") == GF(5)
    assert load_field(5) == GF(5)
    K = finite_extension(GF(2), 3)
    assert load_field(K.describe()) == K
    with pytest.raises(InvalidInputError):
        load_field("GF(x)")
    with pytest.raises(InvalidInputError):
        load_field(True)


def test_is_prime():
    assert [p for p in range(20) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19]


@given(st.integers(0, 24), st.integers(1, 24))
def test_gf25_field_axioms(a, b):
    K = finite_extension(GF(5), 2)
    elems = list(K.elements())
    x, y = elems[a], elems[b]
    assert K.mul(K.div(x, y), y) == x
    assert K.pow(x, 25) == x
