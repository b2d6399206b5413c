import numpy as np
import pytest

from sympy.polys.domains import QQ

from danielewski import CoefficientField, RATIONALS
from danielewski.errors import (
    CoefficientError,
    FieldMismatchError,
    NotDivisibleError,
    PolySyntaxError,
    UnknownVariableError,
)
from danielewski.laurent import LaurentPoly
from danielewski.parser import ELEMENT_DISPLAY, poly_parse, poly_print
from danielewski.polynomials import (
    NEG_INF,
    canonical,
    degree_in,
    divide_by_x_power,
    evaluate_at,
    formal_derivative,
    gen,
    multivar_divide,
    poly_add,
    rational_roots,
    substitute,
    universe,
    variables_of,
    x_adic_split,
)

from ._parametrize import fields


R = universe(RATIONALS)
X, Y, Z, T = (gen(R, name) for name in "XYZT")


def test_parse_0():
    assert poly_parse("Z^2 - 1", RATIONALS) == Z ** 2 - 1
    assert poly_parse("-(Y + 2*Z)^2", RATIONALS) == -((Y + 2 * Z) ** 2)


def test_parse_1():
    assert poly_parse("3/6*X*Y", RATIONALS) == (X * Y).mul_ground(QQ(1, 2))


def test_parse_2():
    with pytest.raises(PolySyntaxError) as err:
        poly_parse("Z^^2", RATIONALS)
    assert err.value.position is not None


def test_parse_3():
    with pytest.raises(UnknownVariableError):
        poly_parse("Z + S", RATIONALS)


def test_parse_4():
    with pytest.raises(UnknownVariableError):
        poly_parse("X*Y", RATIONALS, allowed_vars=("X", "Z"))


def test_parse_5():
    with pytest.raises(CoefficientError):
        poly_parse("Z + 1/7", CoefficientField(7))


def test_print_0():
    assert poly_print(Z ** 2 - 1) == "Z^2 - 1"
    assert poly_print((-Y).mul_ground(QQ(1, 4))) == "-1/4*Y"
    assert poly_print(X * Z * T - Y, ELEMENT_DISPLAY) == "x*z*t - y"
    assert poly_print(R.zero) == "0"


def test_print_1():
    F7 = CoefficientField(7)
    p = poly_parse("Z^2 - 1", F7)
    assert poly_print(p) == "Z^2 + 6"
    assert poly_parse(poly_print(p), F7) == p


def test_degree_0():
    assert degree_in(X ** 2 * Z + Z ** 3, "Z") == 3
    assert degree_in(R.zero, "Z") == NEG_INF
    assert variables_of(X * T + Z) == {"X", "Z", "T"}


def test_divide_by_x_power_0():
    assert divide_by_x_power(X ** 2 * Z + X ** 3, 2) == Z + X
    with pytest.raises(NotDivisibleError):
        divide_by_x_power(X * Z + 1, 1)


def test_x_adic_split_0():
    c0, rest = x_adic_split(X ** 2 * Y + Z + X * T)
    assert c0 == Z
    assert rest == X * Y + T


def test_substitute_0():
    p = X * Y + Z ** 2
    assert substitute(p, {"X": Y, "Y": X}) == p
    assert substitute(p, {"Z": Z + X}) == X * Y + Z ** 2 + 2 * X * Z + X ** 2


def test_evaluate_0():
    assert evaluate_at(X ** 2 * Z + Z - 1, "X", 0) == Z - 1
    assert formal_derivative(Z ** 2 - 1, "Z") == 2 * Z


def test_field_mismatch_0():
    other = universe(CoefficientField(7))
    with pytest.raises(FieldMismatchError):
        poly_add(X, other.gens[0])


def test_rational_roots_0():
    roots = rational_roots({2: QQ(1), 0: QQ(-1)}, QQ)
    assert roots == [QQ(-1), QQ(1)]


def test_rational_roots_1():
    assert rational_roots({2: QQ(2), 0: QQ(-1)}, QQ) == []


def test_rational_roots_2():
    roots = rational_roots({2: QQ(4), 0: QQ(-1)}, QQ)
    assert roots == [QQ(-1, 2), QQ(1, 2)]


def test_rational_roots_3():
    roots = rational_roots({3: QQ(1), 1: QQ(-1)}, QQ)
    assert roots == [QQ(-1), QQ(0), QQ(1)]


def _random_poly(rng, ring, n_terms=4, max_exp=3):
    p = ring.zero
    for _ in range(n_terms):
        monom = tuple(int(k) for k in rng.integers(0, max_exp + 1, size=3))
        coeff = ring.domain.convert(int(rng.integers(-4, 5)))
        p += ring.from_dict({monom + (0,) * (len(ring.gens) - 3): coeff})
    return p


@pytest.mark.parametrize(*fields)
def test_parse_print_random_0(field):
    ring = universe(field)
    rng = np.random.default_rng(0)
    for _ in range(25):
        p = _random_poly(rng, ring)
        assert poly_parse(poly_print(p), field) == p


@pytest.mark.parametrize(*fields)
def test_ring_axioms_0(field):
    ring = universe(field)
    rng = np.random.default_rng(1)
    for _ in range(25):
        a, b, c = (_random_poly(rng, ring) for _ in range(3))
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c


@pytest.mark.parametrize(*fields)
def test_leibniz_0(field):
    ring = universe(field)
    rng = np.random.default_rng(2)
    for _ in range(100):
        p, q = _random_poly(rng, ring), _random_poly(rng, ring)
        for var in ("Y", "Z"):
            lhs = formal_derivative(p * q, var)
            rhs = formal_derivative(p, var) * q + p * formal_derivative(q, var)
            assert lhs == rhs


@pytest.mark.parametrize(*fields)
def test_multivar_divide_0(field):
    ring = universe(field)
    Y_, Z_ = gen(ring, "Y"), gen(ring, "Z")
    divisors = [Y_ ** 2 + Z_, Z_ ** 2 - 1]
    rng = np.random.default_rng(3)
    for _ in range(25):
        q1, q2 = _random_poly(rng, ring), _random_poly(rng, ring)
        _, remainder = multivar_divide(q1 * divisors[0] + q2 * divisors[1], divisors)
        assert not remainder


@pytest.mark.parametrize(*fields)
def test_multivar_divide_1(field):
    ring = universe(field)
    Y_, Z_ = gen(ring, "Y"), gen(ring, "Z")
    divisors = [Y_ ** 2 + Z_, Z_ ** 2 - 1]
    rng = np.random.default_rng(4)
    for _ in range(25):
        p = _random_poly(rng, ring)
        quotients, remainder = multivar_divide(p, divisors)
        assert p - sum(q * f for q, f in zip(quotients, divisors)) == remainder


def test_multivar_divide_2():
    quotients, remainder = multivar_divide(R.zero, [Z ** 2 - 1, Y])
    assert quotients == [R.zero, R.zero]
    assert not remainder


def test_frobenius_0():
    F2 = universe(CoefficientField(2))
    X2, Y2 = gen(F2, "X"), gen(F2, "Y")
    assert canonical((X2 + Y2) ** 2) == X2 ** 2 + Y2 ** 2


def test_formal_derivative_0():
    F2 = universe(CoefficientField(2))
    derivative = formal_derivative(gen(F2, "Z") ** 2, "Z")
    assert not derivative
    assert derivative == F2.zero
    assert list(derivative.iterterms()) == []


def test_substitute_1():
    y = LaurentPoly(Z ** 2 - 1, 1)
    assert substitute(X * Y, {"Y": y}) == LaurentPoly(Z ** 2 - 1)
    numer = (Z ** 2 - 1) ** 2 + X ** 2 * Z
    assert substitute(Y ** 2 + Z, {"Y": y}) == LaurentPoly(numer, 2)
