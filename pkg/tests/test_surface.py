import json

import numpy as np
import pytest

from danielewski import (
    CoefficientField,
    RATIONALS,
    SurfaceElement,
    SurfaceSpec,
    divide_exact_x,
    load_spec,
    normalize,
    reduce_mod_x,
    save_spec,
)
from danielewski.errors import (
    FieldMismatchError,
    InputError,
    NotDivisibleError,
    SpecError,
    UnsupportedFieldError,
)
from danielewski.graded import filt_degree_B
from danielewski.laurent import LaurentPoly
from danielewski.parser import poly_parse
from danielewski.surface import (
    elem_add,
    elem_equal,
    elem_mul,
    embed_laurent,
    express_in_R,
    random_element,
    surface_new,
)

from ._parametrize import FLAGSHIP, fields


flagship = SurfaceSpec(*FLAGSHIP)


invalid_specs = (
    "spec_args",
    [
        ((0, 1, "Z^2 - 1", "Y^2 + Z")),
        ((1, 1, "2*Z^2 - 1", "Y^2 + Z")),
        ((1, 1, "Z^2 - Y", "Y^2 + Z")),
        ((1, 1, "Z^2 - 1", "Y^2 + T")),
        ((1, 1, "X", "Y^2 + Z")),
    ],
)


@pytest.mark.parametrize(*invalid_specs)
def test_spec_validation_0(spec_args):
    with pytest.raises(InputError):
        SurfaceSpec(*spec_args)


def test_spec_flags_0():
    assert flagship.double
    assert flagship.mlc
    assert (flagship.r, flagship.s) == (2, 2)


def test_spec_flags_1():
    spec = SurfaceSpec(1, 1, "Z", "Y")
    assert not spec.double
    assert not spec.mlc


def test_spec_flags_2():
    assert SurfaceSpec(1, 2, "Z", "Y^2 + Z").mlc
    assert not SurfaceSpec(1, 1, "Z", "Y^2 + Z").mlc
    assert SurfaceSpec(1, 1, "Z^2", "Y").mlc


def test_spec_json_0(tmp_path):
    path = str(tmp_path / "spec.json")
    save_spec(flagship, path)
    assert load_spec(path) == flagship
    with open(path) as fh:
        assert json.load(fh)["field"] == "Q"


def test_spec_json_1():
    data = dict(flagship.to_dict(), field={"Fp": 7})
    spec = SurfaceSpec.from_dict(data)
    assert spec.field == CoefficientField(7)
    with pytest.raises(FieldMismatchError):
        SurfaceSpec.from_dict(data, RATIONALS)


def test_spec_json_2():
    with pytest.raises(SpecError):
        SurfaceSpec.from_dict({"d": 1, "e": 1, "P": "Z^2"})


def test_derived_specs_0():
    assert flagship.graded_spec() == SurfaceSpec(1, 2, "Z^2 - 1", "Y^2")
    assert flagship.leading_spec() == SurfaceSpec(1, 2, "Z^2", "Y^2")
    assert flagship.sibling(1) == SurfaceSpec(1, 1, "Z^2 - 1", "Y^2 + Z")


def test_element_equality_0():
    x, y, z, t = flagship.generators("xyzt")
    assert x * y == z ** 2 - 1
    assert x ** 2 * t == y ** 2 + z
    assert x * y != z


def test_element_equality_1():
    el = SurfaceElement(flagship, "x^3*y*t")
    assert el == SurfaceElement(flagship, "(y^2 + z)*(z^2 - 1)")


def test_normalize_0():
    nf = normalize(SurfaceElement(flagship, "x^2*y*t"))
    assert nf.expr == poly_parse("X*Z^2*T - X*T", RATIONALS)
    assert nf.within_bounds()
    assert str(nf) == "x*z^2*t - x*t"


def test_normalize_1():
    first = SurfaceElement(flagship, "y^3 + y*z")
    second = SurfaceElement(flagship, "x*(z^2 - 1)*t")
    assert first == second
    assert normalize(first).within_bounds()
    assert normalize(second).within_bounds()
    assert normalize(first) != normalize(second)


def test_normalize_2():
    assert normalize(SurfaceElement(flagship, 0)).expr == flagship.ring.zero


@pytest.mark.parametrize(*fields)
def test_normalize_random_0(field):
    spec = SurfaceSpec(*FLAGSHIP, field=field)
    rng = np.random.default_rng(0)
    for _ in range(500):
        el = random_element(spec, rng, n_terms=3, max_exp=3)
        nf = normalize(el)
        assert nf.within_bounds()
        assert nf.expand() == el


@pytest.mark.parametrize(*fields)
def test_filtration_random_0(field):
    spec = SurfaceSpec(2, 1, "Z^2 - 1", "Y^2 + X*Y + Z", field)
    rng = np.random.default_rng(1)
    for _ in range(100):
        a = random_element(spec, rng)
        b = random_element(spec, rng)
        if a.is_zero() or b.is_zero():
            continue
        assert filt_degree_B(a * b) == filt_degree_B(a) + filt_degree_B(b)


def test_reduce_mod_x_0():
    R = flagship.ring
    assert reduce_mod_x(SurfaceElement(flagship, "y^2*z")) == -R.one
    assert reduce_mod_x(SurfaceElement(flagship, "z^2 + x*t")) == R.one
    assert reduce_mod_x(SurfaceElement(flagship, "x*y")) == R.zero


def test_divide_exact_x_0():
    quotient = divide_exact_x(SurfaceElement(flagship, "z^2 - 1"))
    assert quotient == SurfaceElement(flagship, "y")


def test_divide_exact_x_1():
    quotient = divide_exact_x(SurfaceElement(flagship, "y^2 + z"), 2)
    assert quotient == SurfaceElement(flagship, "t")


def test_divide_exact_x_2():
    el = SurfaceElement(flagship, "1 + y^2*z")
    quotient = divide_exact_x(el)
    assert quotient == SurfaceElement(flagship, "x*z*t - y")


def test_divide_exact_x_3():
    with pytest.raises(NotDivisibleError):
        divide_exact_x(SurfaceElement(flagship, "z"))


def test_divide_exact_x_4():
    el = SurfaceElement(flagship, "y^2 + z")
    with pytest.raises(NotDivisibleError):
        divide_exact_x(el, 1, subring="R")
    with pytest.raises(SpecError):
        divide_exact_x(el, 1, subring="S")


def test_element_ops_0():
    spec = surface_new(*FLAGSHIP)
    assert spec == flagship
    x, y, z, t = spec.generators("xyzt")
    assert elem_equal(elem_mul(x, y), elem_add(z ** 2, SurfaceElement(spec, -1)))
    assert embed_laurent(y) == LaurentPoly(poly_parse("Z^2 - 1", RATIONALS), 1)
    with pytest.raises(SpecError):
        elem_equal(x, SurfaceElement(flagship.sibling(1), "x"))


def test_divide_exact_x_5():
    quotient = divide_exact_x(SurfaceElement(flagship, "x^2*t"), 1)
    assert quotient == SurfaceElement(flagship, "x*t")


@pytest.mark.parametrize(*fields)
def test_divide_exact_x_random_0(field):
    spec = SurfaceSpec(*FLAGSHIP, field=field)
    X = spec.ring.gens[0]
    rng = np.random.default_rng(4)
    for _ in range(10):
        el = random_element(spec, rng)
        n = int(rng.integers(1, 4))
        assert divide_exact_x(SurfaceElement(spec, X ** n * el.expr), n) == el


def test_express_in_R_0():
    expr = express_in_R(SurfaceElement(flagship, "x*z^2*t - x*t"))
    assert expr == poly_parse("Y^3 + Y*Z", RATIONALS)
    assert express_in_R(SurfaceElement(flagship, "x*y + z")) == poly_parse("X*Y + Z", RATIONALS)


def test_express_in_R_1():
    with pytest.raises(NotDivisibleError):
        express_in_R(SurfaceElement(flagship, "t"))


@pytest.mark.parametrize(*fields)
def test_domain_0(field):
    spec = SurfaceSpec(*FLAGSHIP, field=field)
    rng = np.random.default_rng(6)
    for _ in range(15):
        a = random_element(spec, rng)
        b = random_element(spec, rng)
        if a.is_zero() or b.is_zero():
            continue
        assert not (a * b).is_zero()


def test_embed_laurent_0():
    t = SurfaceElement(flagship, "t")
    numer = poly_parse("(Z^2 - 1)^2 + X^2*Z", RATIONALS)
    assert embed_laurent(t) == LaurentPoly(numer, 4)


def test_spec_validation_1():
    with pytest.raises(SpecError):
        SurfaceSpec(1, 1, 5, "Y")


def test_spec_validation_2():
    data = {"d": 1, "e": 1, "P": "Z", "Q": "Y", "field": {"Fp": "x"}}
    with pytest.raises(UnsupportedFieldError):
        SurfaceSpec.from_dict(data)
