import pytest

from danielewski import RATIONALS
from danielewski.errors import ExponentBoundError
from danielewski.laurent import EXPONENT_BOUND, LaurentPoly
from danielewski.polynomials import gen, universe


R = universe(RATIONALS)
X, Y, Z = (gen(R, name) for name in "XYZ")


def test_normalize_0():
    p = LaurentPoly(X * Z, 1)
    assert p.is_polynomial()
    assert p.to_poly() == Z


def test_normalize_1():
    p = LaurentPoly(X ** 2 * Z + X, 3)
    assert p.shift == 2
    assert p.numer == X * Z + 1


def test_arithmetic_0():
    inverse_x = LaurentPoly(R.one, 1)
    assert inverse_x * X == LaurentPoly(R.one)
    assert inverse_x + X == LaurentPoly(X ** 2 + 1, 1)
    assert (inverse_x ** 3).ord_x() == -3


def test_arithmetic_1():
    p = LaurentPoly(Z ** 2 - 1, 1)
    assert p - p == LaurentPoly(R.zero)
    assert not (p - p)


def test_degrees_0():
    p = LaurentPoly(Z ** 2 - 1 + X ** 3 * Z, 2)
    assert p.ord_x() == -2
    assert p.degree_in("X") == 1
    assert p.top_z() == 2
    assert p.lowest_x_slice() == LaurentPoly(Z ** 2 - 1, 2)
    assert p.top_z_slice() == LaurentPoly(Z ** 2, 2)


def test_coefficient_0():
    p = LaurentPoly(Z ** 2 - 1, 1)
    assert p.coefficient((-1, 0, 2, 0, 0, 0, 0)) == 1
    assert p.coefficient((-5, 0, 2, 0, 0, 0, 0)) == 0


def test_terms_0():
    p = LaurentPoly(Z ** 2 - 1, 1)
    assert [exponents[0] for exponents, _ in p.terms()] == [-1, -1]
    assert str(p) == "X^-1*Z^2 - X^-1"


def test_exponent_bound_0():
    with pytest.raises(ExponentBoundError):
        LaurentPoly(R.one, EXPONENT_BOUND + 1)
