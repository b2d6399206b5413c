import pytest

from danielewski import (
    CoefficientField,
    RATIONALS,
    SurfaceElement,
    SurfaceSpec,
    bezout_certificate,
    build_stable_iso,
    cancellation_demo,
    reduce_mod_x,
    stable_chain,
    verify_certificate,
)
from danielewski.errors import NotUnitError, SpecError
from danielewski.parser import poly_parse
from danielewski.stable import (
    CERTIFICATE_CHECKS,
    StableIsoCertificate,
    check_stable_hypotheses,
    load_certificate,
    quotient_inverse,
    save_certificate,
)

from ._parametrize import FLAGSHIP, stable_specs


flagship = SurfaceSpec(*FLAGSHIP)


def _poly(text):
    return poly_parse(text, RATIONALS)


def _tampered(key, value):
    data = build_stable_iso(flagship).to_dict()
    data[key] = value(data[key])
    report = verify_certificate(StableIsoCertificate.from_dict(data))
    return report.failed()


def test_hypotheses_0():
    report = check_stable_hypotheses(flagship)
    assert report.passed
    assert [check.name for check in report.checks] == ["0-double", "1-separable", "2-unit"]


def test_hypotheses_1():
    spec = SurfaceSpec(1, 2, "Z^2", "Y^2 + Z")
    assert "1-separable" in check_stable_hypotheses(spec).failed()
    with pytest.raises(NotUnitError):
        bezout_certificate(spec)


def test_hypotheses_2():
    spec = SurfaceSpec(*FLAGSHIP, field=CoefficientField(2))
    assert check_stable_hypotheses(spec).failed() == ["1-separable", "2-unit"]


def test_hypotheses_3():
    assert check_stable_hypotheses(SurfaceSpec(1, 1, "Z", "Y")).failed() == ["0-double"]


@pytest.mark.parametrize("P", ["Z^2 + Z", "Z^3 - Z"])
def test_hypotheses_4(P):
    spec = SurfaceSpec(1, 2, P, "Y^2 + Z")
    assert check_stable_hypotheses(spec).failed() == ["2-unit"]


def test_quotient_inverse_0():
    inverse = quotient_inverse(flagship, _poly("Z"))
    assert inverse == _poly("Z")


def test_quotient_inverse_1():
    with pytest.raises(NotUnitError):
        quotient_inverse(flagship, _poly("Z - 1"))


def test_bezout_0():
    cofactors = bezout_certificate(flagship)
    assert cofactors.a == _poly("-1/4*Y")
    assert cofactors.b == _poly("Z")
    assert cofactors.c == _poly("-1")
    assert not cofactors.residue(flagship)


def test_certificate_0():
    cert = build_stable_iso(flagship)
    assert cert.target == flagship.sibling(1)
    assert cert.theta == SurfaceElement(flagship, "x*w^2")
    assert cert.delta == SurfaceElement(flagship, "x*z*t - y")
    assert cert.g == SurfaceElement(flagship, "y + 2*x*z*w + x^3*w^2")
    assert reduce_mod_x(cert.h) == _poly("4*Y*Z*W")


def test_certificate_1():
    report = verify_certificate(build_stable_iso(flagship))
    assert report.passed
    assert [check.name for check in report.checks] == list(CERTIFICATE_CHECKS)


def test_certificate_2():
    cert = build_stable_iso(flagship)
    again = StableIsoCertificate.from_dict(cert.to_dict())
    assert again.to_dict() == cert.to_dict()
    assert verify_certificate(again).passed


def test_certificate_3(tmp_path):
    path = str(tmp_path / "certificate.json")
    save_certificate(build_stable_iso(flagship), path)
    cert = load_certificate(path)
    assert cert.source == flagship
    assert verify_certificate(cert, checks=["6-generator-witnesses"]).passed


def test_certificate_4():
    with pytest.raises(SpecError):
        verify_certificate(build_stable_iso(flagship), checks=["8-unknown"])


def test_certificate_5():
    data = build_stable_iso(flagship).to_dict()
    del data["rho"]
    with pytest.raises(SpecError):
        StableIsoCertificate.from_dict(data)


def test_tamper_0():
    assert _tampered("v", lambda text: text + " + 1") == ["6-generator-witnesses"]


def test_tamper_1():
    assert _tampered("a", lambda text: "-1/2*y") == ["3-unit-identity"]


def test_tamper_2():
    assert _tampered("delta", lambda text: text + " + 1") == ["3-unit-identity"]


def test_build_0():
    with pytest.raises(SpecError):
        build_stable_iso(flagship.sibling(1))


@pytest.mark.parametrize(*stable_specs)
def test_stable_family_0(spec_args):
    spec = SurfaceSpec(*spec_args)
    assert check_stable_hypotheses(spec).passed
    report = verify_certificate(build_stable_iso(spec))
    assert report.passed, report.failed()


@pytest.mark.parametrize("d, e", [(1, 1), (2, 1), (1, 2)])
def test_cancellation_demo_0(d, e):
    spec = SurfaceSpec(d, e, "Z^2 - 1", "Y^2 + Z")
    report = cancellation_demo(spec)
    assert report.passed, report.failed()
    assert "non-isomorphism" in report
    assert "stable:7-target-relations" in report


def test_stable_chain_0():
    spec = flagship.sibling(3)
    chain = stable_chain(spec)
    assert len(chain) == 2
    assert chain[0].source == spec
    assert chain[-1].target == flagship.sibling(1)
    assert all(verify_certificate(cert).passed for cert in chain)


def test_stable_chain_1():
    assert stable_chain(flagship.sibling(1)) == []
