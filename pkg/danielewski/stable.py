# Author: Simon Blanke
# Email: simon.blanke@yahoo.com
# License: MIT License

import json
import logging

from sympy.polys.matrices import DomainMatrix
from sympy.polys.orderings import lex
from sympy.polys.rings import ring

from .errors import NotUnitError, SpecError
from .expmap import expmap_canonical, extend_to_A
from .morphisms import compare_invariants
from .parser import ELEMENT_DISPLAY, ELEMENT_NAMES, poly_parse, poly_print
from .polynomials import (
    canonical,
    divide_by_x_power,
    gen,
    multivar_divide,
    substitute,
    univariate_coeffs,
)
from .report import Report
from .surface import SurfaceElement, SurfaceSpec, divide_exact_x


logger = logging.getLogger(__name__)

# witnesses live in the target ring: G, F, H, V sit in the Y, Z, T, W slots
WITNESS_NAMES = {"X": "X", "x": "X", "G": "Y", "F": "Z", "H": "T", "V": "W"}
WITNESS_DISPLAY = {"X": "X", "Y": "G", "Z": "F", "T": "H", "W": "V"}

CERTIFICATE_CHECKS = (
    "1-p-relation",
    "2-q-relation",
    "3-unit-identity",
    "4-invariance",
    "5-slice-shift",
    "6-generator-witnesses",
    "7-target-relations",
)

ELEMENT_KEYS = ("f", "g", "h", "theta", "rho", "delta", "v")


def _quotient_basis(spec):
    Y, Z = gen(spec.ring, "Y"), gen(spec.ring, "Z")
    return [Y ** i * Z ** j for i in range(spec.s) for j in range(spec.r)]


def quotient_inverse(spec, element):
    """Inverse of element in k[Y,Z]/(P(0,Z), Q(0,Y,Z)), by an exact linear solve
    over the monomial basis Y^i*Z^j, i < s, j < r."""
    domain = spec.ring.domain
    basis = _quotient_basis(spec)
    position = {b.LM: k for k, b in enumerate(basis)}
    n = len(basis)

    columns = []
    for b in basis:
        _, remainder = multivar_divide(element * b, [spec.Q0, spec.P0])
        column = [domain.zero] * n
        for monom, coeff in remainder.iterterms():
            column[position[monom]] = coeff
        columns.append(column)
    rows = [[columns[k][i] for k in range(n)] for i in range(n)]
    matrix = DomainMatrix(rows, (n, n), domain)
    if matrix.rank() < n:
        raise NotUnitError(
            "{} is a zero divisor modulo (P(0,Z), Q(0,Y,Z))".format(poly_print(element))
        )
    rhs = DomainMatrix([[domain.one]] + [[domain.zero]] * (n - 1), (n, 1), domain)
    solution = matrix.lu_solve(rhs).to_list()
    return sum(
        (b.mul_ground(row[0]) for b, row in zip(basis, solution)), spec.ring.zero
    )


def check_stable_hypotheses(spec):
    report = Report("stable hypotheses of {}".format(spec))
    report.add(
        "0-double",
        spec.double,
        "r = {}, s = {}".format(spec.r, spec.s),
    )

    domain = spec.ring.domain
    U, Zu = ring("Z", domain, lex)
    p0 = U.from_dict({(k,): c for k, c in univariate_coeffs(spec.P0, "Z").items()})
    dp0 = canonical(p0.diff(Zu))
    if not dp0:
        report.add("1-separable", False, "P'(0,Z) vanishes")
    else:
        _, _, common = p0.gcdex(dp0)
        report.add(
            "1-separable",
            common == U.one,
            "gcd(P(0,Z), P'(0,Z)) = {}".format(common.as_expr()),
        )

    if not spec.Q_prime0:
        report.add("2-unit", False, "Q'(0,Y,Z) vanishes")
    else:
        try:
            quotient_inverse(spec, spec.Q_prime0)
            report.add("2-unit", True, "Q'(0,Y,Z) is a unit modulo (P(0,Z), Q(0,Y,Z))")
        except NotUnitError as err:
            report.add("2-unit", False, str(err))
    return report


class BezoutCofactors:
    """Q'(0,Y,Z)*P'(0,Z)*a + Q(0,Y,Z)*b + P(0,Z)*c = 1."""

    def __init__(self, a, b, c):
        self.a = a
        self.b = b
        self.c = c

    def residue(self, spec):
        return (
            spec.Q_prime0 * spec.P_prime0 * self.a
            + spec.Q0 * self.b
            + spec.P0 * self.c
            - spec.ring.one
        )

    def to_dict(self):
        return {
            key: poly_print(getattr(self, key), ELEMENT_DISPLAY) for key in "abc"
        }

    @classmethod
    def from_dict(cls, data, field):
        return cls(
            *(poly_parse(data[key], field, ("Y", "Z"), ELEMENT_NAMES) for key in "abc")
        )

    def __repr__(self):
        return "BezoutCofactors({})".format(self.to_dict())


def bezout_certificate(spec):
    target = spec.Q_prime0 * spec.P_prime0
    if not target:
        raise NotUnitError("Q'(0,Y,Z)*P'(0,Z) vanishes")
    a = quotient_inverse(spec, target)
    (b, c), remainder = multivar_divide(spec.ring.one - target * a, [spec.Q0, spec.P0])
    if remainder:
        raise ArithmeticError("cofactor division left {}".format(poly_print(remainder)))
    cofactors = BezoutCofactors(a, b, c)
    if cofactors.residue(spec):
        raise ArithmeticError("Bezout identity does not hold")
    logger.debug("cofactors for %s: %s", spec, cofactors)
    return cofactors


class StableIsoCertificate:
    """A = B_source[w] = E[v] with E = k[x,f,g,h] isomorphic to B_target."""

    def __init__(self, source, target, cofactors, elements, witnesses):
        missing = [key for key in ELEMENT_KEYS if key not in elements]
        if missing:
            raise SpecError("certificate misses {}".format(", ".join(missing)))
        missing = [key for key in "wzyt" if key not in witnesses]
        if missing:
            raise SpecError("certificate misses witnesses for {}".format(", ".join(missing)))
        self.source = source
        self.target = target
        self.cofactors = cofactors
        self.elements = {
            key: value if isinstance(value, SurfaceElement) else SurfaceElement(source, value)
            for key, value in elements.items()
        }
        self.witnesses = dict(witnesses)
        for key, value in self.elements.items():
            setattr(self, key, value)

    def laurent_point(self):
        """Laurent images of f, g, h, v in the witness slots."""
        e = self.elements
        return {"Y": e["g"].laurent, "Z": e["f"].laurent, "T": e["h"].laurent, "W": e["v"].laurent}

    def expand_witness(self, name):
        """Laurent image of the witness evaluated at x, f, g, h, v."""
        return substitute(self.witnesses[name], self.laurent_point())

    def to_dict(self):
        data = {"source": self.source.to_dict(), "target": self.target.to_dict()}
        data.update(self.cofactors.to_dict())
        for key in ELEMENT_KEYS:
            data[key] = str(self.elements[key])
        data["witnesses"] = {
            key: poly_print(self.witnesses[key], WITNESS_DISPLAY) for key in "wzyt"
        }
        return data

    @classmethod
    def from_dict(cls, data, field=None):
        if not isinstance(data, dict):
            raise SpecError("a certificate must be a JSON object")
        missing = [
            key
            for key in ("source", "target", "a", "b", "c", "witnesses") + ELEMENT_KEYS
            if key not in data
        ]
        if missing:
            raise SpecError("certificate misses {}".format(", ".join(missing)))
        source = SurfaceSpec.from_dict(data["source"], field)
        target = SurfaceSpec.from_dict(data["target"], source.field)
        cofactors = BezoutCofactors.from_dict(data, source.field)
        elements = {key: SurfaceElement(source, data[key]) for key in ELEMENT_KEYS}
        if not isinstance(data["witnesses"], dict):
            raise SpecError("witnesses must be a JSON object")
        witnesses = {
            key: poly_parse(
                data["witnesses"][key],
                source.field,
                ("X", "Y", "Z", "T", "W"),
                WITNESS_NAMES,
            )
            for key in "wzyt"
            if key in data["witnesses"]
        }
        return cls(source, target, cofactors, elements, witnesses)

    def __repr__(self):
        return "StableIsoCertificate({} -> {})".format(self.source, self.target)


def certificate_to_dict(cert):
    return cert.to_dict()


def certificate_from_dict(data, field=None):
    return StableIsoCertificate.from_dict(data, field)


def load_certificate(path, field=None):
    with open(path) as fh:
        data = json.load(fh)
    return StableIsoCertificate.from_dict(data, field)


def save_certificate(cert, path):
    with open(path, "w") as fh:
        json.dump(cert.to_dict(), fh, indent=2)


def build_stable_iso(spec):
    """Certificate for B_{d,e}[w] = B_{d,e-1}[v], e >= 2."""
    if spec.e < 2:
        raise SpecError("a stable step needs e >= 2, got e = {}".format(spec.e))
    cofactors = bezout_certificate(spec)

    R = spec.ring
    X, Y, Z, T, W = (gen(R, name) for name in "XYZTW")
    d, e = spec.d, spec.e
    n = d + e - 1
    Pp, Qp = spec.P_prime0, spec.Q_prime0

    f = X ** n * W + Z
    theta = divide_by_x_power(
        substitute(spec.P, {"Z": f}) - spec.P - X ** n * Pp * W, d + e
    )
    g = Y + X ** (e - 1) * (Pp * W + X * theta)
    rho = divide_by_x_power(
        substitute(spec.Q, {"Y": g, "Z": f}) - spec.Q - X ** (e - 1) * Pp * Qp * W, e
    )
    h = Pp * Qp * W + X * T + X * rho
    logger.debug("f = %s, g = %s, h = %s", f, g, h)

    delta = divide_exact_x(
        SurfaceElement(spec, R.one - Qp * Pp * cofactors.a), 1
    ).expr
    a_gf = substitute(cofactors.a, {"Y": g, "Z": f})
    v = divide_exact_x(SurfaceElement(spec, W - a_gf * h), 1).expr

    target = spec.sibling(e - 1)
    # slot variables: Y = G, Z = F, T = H, W = V
    w_wit = X * W + cofactors.a * T
    z_wit = Z - X ** n * w_wit
    point = {"Z": z_wit, "W": w_wit}
    y_wit = Y - X ** (e - 1) * (
        substitute(Pp, point) * w_wit + X * substitute(theta, point)
    )
    point["Y"] = y_wit
    t_times_x = (
        T
        - substitute(Pp * Qp, point) * w_wit
        - X * substitute(rho, point)
    )
    t_wit = divide_exact_x(SurfaceElement(target, t_times_x), 1).expr

    elements = {
        "f": f,
        "g": g,
        "h": h,
        "theta": theta,
        "rho": rho,
        "delta": delta,
        "v": v,
    }
    witnesses = {"w": w_wit, "z": z_wit, "y": y_wit, "t": t_wit}
    cert = StableIsoCertificate(spec, target, cofactors, elements, witnesses)
    logger.debug("built %r", cert)
    return cert


def _check_p_relation(cert):
    spec = cert.source
    x = gen(spec.ring, "X")
    lhs = SurfaceElement(spec, substitute(spec.P, {"Z": cert.f.expr}))
    rhs = cert.g * x ** spec.d
    return lhs == rhs, "P(x,f) = x^d*g"


def _check_q_relation(cert):
    spec = cert.source
    x = gen(spec.ring, "X")
    lhs = SurfaceElement(spec, substitute(spec.Q, {"Y": cert.g.expr, "Z": cert.f.expr}))
    rhs = cert.h * x ** (spec.e - 1)
    return lhs == rhs, "Q(x,g,f) = x^(e-1)*h"


def _check_unit_identity(cert):
    spec = cert.source
    a = cert.cofactors.a
    lhs = SurfaceElement(spec, spec.Q_prime0 * spec.P_prime0 * a) + cert.delta * gen(
        spec.ring, "X"
    )
    in_b = lhs == SurfaceElement(spec, 1)
    bezout = not cert.cofactors.residue(spec)
    detail = "Q'P'a + x*delta = 1: {}, Q'P'a + Qb + Pc = 1: {}".format(
        "yes" if in_b else "no", "yes" if bezout else "no"
    )
    return in_b and bezout, detail


def _check_invariance(cert):
    phi = extend_to_A(expmap_canonical(cert.source))
    moved = [key for key in "fgh" if phi.apply(cert.elements[key]) != cert.elements[key]]
    if moved:
        return False, "moved: {}".format(", ".join(moved))
    return True, "f, g, h fixed"


def _check_slice_shift(cert):
    spec = cert.source
    phi = extend_to_A(expmap_canonical(spec))
    shifted = SurfaceElement(spec, cert.v.expr - gen(spec.ring, "U"))
    return phi.apply(cert.v) == shifted, "phi(v) = v - U"


def _check_generator_witnesses(cert):
    spec = cert.source
    wrong = [
        name
        for name in "wzyt"
        if cert.expand_witness(name) != SurfaceElement(spec, gen(spec.ring, name.upper())).laurent
    ]
    if wrong:
        return False, "witness mismatch for {}".format(", ".join(wrong))
    return True, "w, z, y, t lie in k[x,f,g,h,v]"


def _check_target_relations(cert):
    spec = cert.source
    if cert.target != spec.sibling(spec.e - 1):
        return False, "target is not {}".format(spec.sibling(spec.e - 1))
    point = cert.laurent_point()
    alive = [
        label
        for label, relation in zip("pq", cert.target.relations())
        if substitute(relation, point)
    ]
    if alive:
        return False, "relations not killed: {}".format(", ".join(alive))
    return True, "X,F,G,H -> x,f,g,h kills both relations"


_CHECKS = dict(
    zip(
        CERTIFICATE_CHECKS,
        (
            _check_p_relation,
            _check_q_relation,
            _check_unit_identity,
            _check_invariance,
            _check_slice_shift,
            _check_generator_witnesses,
            _check_target_relations,
        ),
    )
)


def verify_certificate(cert, checks=None):
    checks = CERTIFICATE_CHECKS if checks is None else checks
    report = Report(
        "stable isomorphism {} -> {}".format(cert.source, cert.target),
        data={"source": repr(cert.source), "target": repr(cert.target)},
    )
    for name in checks:
        if name not in _CHECKS:
            raise SpecError("unknown certificate check {!r}".format(name))
        passed, detail = _CHECKS[name](cert)
        report.add(name, passed, detail)
    return report


def cancellation_demo(spec):
    """B_{d,e} and B_{d,e+1} are not isomorphic, their cylinders are."""
    sibling = spec.sibling(spec.e + 1)
    comparison = compare_invariants(spec, sibling)
    report = Report(
        "cancellation {} vs {}".format(spec, sibling),
        data={
            "tuples": "{} vs {}".format(comparison.first, comparison.second),
            "verdict": comparison.verdict,
        },
    )
    report.add(
        "non-isomorphism",
        comparison.certified and comparison.differing == ["e"],
        comparison.render(),
    )
    cert = build_stable_iso(sibling)
    report.extend(verify_certificate(cert), prefix="stable:")
    return report


def stable_chain(spec):
    """One certificate per step B_{d,e} -> B_{d,e-1} -> ... -> B_{d,1}."""
    certificates = []
    current = spec
    while current.e >= 2:
        cert = build_stable_iso(current)
        certificates.append(cert)
        current = cert.target
    return certificates
