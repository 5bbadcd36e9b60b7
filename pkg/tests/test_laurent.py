import pytest
from hypothesis import given, strategies as st

from braidwidth.laurent import ONE, T, ZERO, LaurentPoly

polys = st.dictionaries(st.integers(-6, 6), st.integers(-5, 5), max_size=6).map(LaurentPoly)


def test_construction_drops_zeros():
    p = LaurentPoly({0: 1, 3: 0, -1: 2})
    assert p.terms == {-1: 2, 0: 1}
    assert LaurentPoly() == ZERO and ZERO.is_zero()


def test_degrees_and_coefficients():
    p = LaurentPoly.from_coefficients([1, 0, -2], shift=-1)
    assert (p.min_degree, p.max_degree) == (-1, 1)
    assert p.coefficients() == [1, 0, -2]
    with pytest.raises(ValueError):
        ZERO.min_degree


def test_arithmetic():
    assert (T - 1) * (T + 1) == T ** 2 - 1
    assert 2 * T + 1 == LaurentPoly({0: 1, 1: 2})
    assert 1 - T == -(T - ONE)
    assert T ** -2 == LaurentPoly({-2: 1})
    assert (-T) ** -1 == LaurentPoly({-1: -1})
    with pytest.raises(ValueError):
        (T + 1) ** -1


def test_exact_div():
    num = T ** 6 - 1
    assert num.exact_div(T - 1) == LaurentPoly.from_coefficients([1] * 6)
    with pytest.raises(ArithmeticError):
        (T ** 2 + 1).exact_div(T - 1)
    with pytest.raises(ZeroDivisionError):
        T.exact_div(ZERO)


def test_normalized_and_str():
    p = LaurentPoly({-3: -1, -2: 1, -1: -1})
    assert p.normalized() == LaurentPoly({0: 1, 1: -1, 2: 1})
    assert str(p.normalized()) == "1 - t + t^2"
    assert str(LaurentPoly({0: -2, 1: 3})) == "-2 + 3*t"
    assert str(ZERO) == "0"


def test_evaluation():
    assert (T ** 2 - T + 1)(1) == 1
    assert (T ** 2 - T + 1)(2) == 3


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == ZERO


@given(polys, polys)
def test_division_inverts_multiplication(a, b):
    if b.is_zero():
        return
    assert (a * b).exact_div(b) == a


@given(polys, st.integers(-3, 3))
def test_evaluation_is_homomorphic(a, x):
    if x == 0:
        return
    from fractions import Fraction

    v = Fraction(x)
    assert (a * a)(v) == a(v) ** 2
    assert hash(a) == hash(LaurentPoly(a.terms))
