# Author: Simon Blanke
# Email: simon.blanke@yahoo.com
# License: MIT License

import logging

import numpy as np

from .errors import ExpMapError, SpecError
from .parser import ELEMENT_DISPLAY, ELEMENT_NAMES, poly_parse, poly_print
from .polynomials import (
    IX,
    divide_by_x_power,
    evaluate_at,
    gen,
    substitute,
    uses_only,
)
from .report import Report
from .surface import SurfaceElement, random_element


logger = logging.getLogger(__name__)

GENERATORS = ("x", "y", "z", "t", "w")


class ExpMap:
    """phi: B -> B[U] (or A -> A[U]) given by the images of the generators.

    Generators without an image are fixed.
    """

    def __init__(self, spec, images):
        self.spec = spec
        self.images = {}
        for name, image in images.items():
            if name not in GENERATORS:
                raise SpecError("unknown generator {!r}".format(name))
            if isinstance(image, SurfaceElement):
                image = image.expr
            elif isinstance(image, str):
                image = poly_parse(image, spec.field, names=ELEMENT_NAMES)
            self.images[name] = SurfaceElement(spec, image)

    def image(self, name, var="U"):
        if name in self.images:
            expr = self.images[name].expr
        else:
            expr = gen(self.spec.ring, name.upper())
        if var != "U":
            expr = substitute(expr, {"U": gen(self.spec.ring, var)})
        return expr

    def assignment(self, var="U"):
        return {name.upper(): self.image(name, var) for name in self.images}

    def apply(self, el, var="U"):
        expr = el.expr if isinstance(el, SurfaceElement) else el
        return SurfaceElement(self.spec, substitute(expr, self.assignment(var)))

    def to_dict(self):
        return {
            name: poly_print(image.expr, ELEMENT_DISPLAY)
            for name, image in self.images.items()
        }

    @classmethod
    def from_dict(cls, spec, data):
        if not isinstance(data, dict):
            raise SpecError("an exponential map must be a JSON object")
        return cls(spec, data)

    def __repr__(self):
        return "ExpMap({})".format(self.to_dict())


class InvariantReport:
    def __init__(self, element, is_invariant, u_degree):
        self.element = element
        self.is_invariant = is_invariant
        self.u_degree = u_degree

    def __bool__(self):
        return self.is_invariant

    def __repr__(self):
        return "InvariantReport({}, is_invariant={}, u_degree={})".format(
            self.element, self.is_invariant, self.u_degree
        )


def _x_quotient(p, n, exact):
    if exact:
        return divide_by_x_power(p, n)
    kept = p.ring.from_dict(
        {monom: coeff for monom, coeff in p.iterterms() if monom[IX] >= n}
    )
    return divide_by_x_power(kept, n)


def _shift_images(spec, n, exact):
    R = spec.ring
    X, Y, Z, T, U = (gen(R, name) for name in "XYZTU")
    phi_z = Z + X ** n * U
    phi_y = Y + _x_quotient(substitute(spec.P, {"Z": phi_z}) - spec.P, spec.d, exact)
    phi_t = T + _x_quotient(
        substitute(spec.Q, {"Y": phi_y, "Z": phi_z}) - spec.Q, spec.e, exact
    )
    return {"x": X, "y": phi_y, "z": phi_z, "t": phi_t}


def expmap_canonical(spec):
    """phi(z) = z + x^(d+e)*U with phi(y), phi(t) forced by the relations."""
    phi = ExpMap(spec, _shift_images(spec, spec.d + spec.e, exact=True))
    report = verify_expmap(phi)
    if not report.passed:
        raise ExpMapError(
            "canonical map on {} fails {}".format(spec, ", ".join(report.failed()))
        )
    return phi


def expmap_from_shift(spec, n):
    """phi(z) = z + x^n*U, images truncated to polynomials; only n >= d+e
    gives an exponential map."""
    return ExpMap(spec, _shift_images(spec, n, exact=False))


def identity_expmap(spec):
    return ExpMap(spec, {})


def verify_expmap(phi):
    spec = phi.spec
    R = spec.ring
    U, V = gen(R, "U"), gen(R, "V")
    report = Report("exponential map on {}".format(spec))

    names = sorted(set(phi.images) | {"x", "y", "z", "t"}, key=GENERATORS.index)
    phi_v = phi.assignment("V")
    for name in names:
        generator = SurfaceElement(spec, gen(R, name.upper()))
        image = phi.image(name)

        at_zero = SurfaceElement(spec, evaluate_at(image, "U", 0))
        report.add(
            "axiom-i:" + name,
            at_zero == generator,
            "" if at_zero == generator else "phi({})|U=0 = {}".format(name, at_zero),
        )

        nested = SurfaceElement(spec, substitute(image, phi_v))
        combined = SurfaceElement(spec, substitute(image, {"U": U + V}))
        report.add(
            "axiom-ii:" + name,
            nested == combined,
            "" if nested == combined else "phi_V(phi_U({})) differs from phi_(U+V)".format(name),
        )

    for label, relation in zip(("p", "q"), spec.relations()):
        residue = phi.apply(relation)
        report.add(
            "relation:" + label,
            residue.is_zero(),
            "" if residue.is_zero() else "residue {}".format(residue),
        )
    return report


def is_invariant(phi, el):
    image = phi.apply(el)
    u_degree = image.laurent.degree_in("U")
    if u_degree == float("-inf"):
        u_degree = 0
    return InvariantReport(el, image == el, int(u_degree))


def extend_to_A(phi):
    """Adds w -> w - x*U and re-verifies on the five generators."""
    R = phi.spec.ring
    X, W, U = (gen(R, name) for name in "XWU")
    images = {name: image.expr for name, image in phi.images.items()}
    images["w"] = W - X * U
    extended = ExpMap(phi.spec, images)
    report = verify_expmap(extended)
    if not report.passed:
        raise ExpMapError("extension to A fails {}".format(", ".join(report.failed())))
    return extended


def _random_x_polynomial(spec, rng, max_degree=3):
    X = gen(spec.ring, "X")
    p = spec.ring.zero
    for k in range(int(rng.integers(0, max_degree + 1)) + 1):
        p += (X ** k).mul_ground(spec.field.convert(int(rng.integers(-3, 4))))
    return SurfaceElement(spec, p if p else spec.ring.one)


def _random_yzt_element(spec, rng, max_tries=100):
    """Random element whose expression involves y, z or t."""
    for _ in range(max_tries):
        el = random_element(spec, rng)
        if not uses_only(el.expr, ("X",)):
            return el
    raise ExpMapError("could not sample an element outside k[x]")


def _factor_pair(spec, rng):
    """Two factors that both involve y, z or t."""
    a = _random_yzt_element(spec, rng)
    shape = int(rng.integers(0, 3))
    if shape == 0:
        b = _random_yzt_element(spec, rng)
    elif shape == 1:
        b = a * _random_x_polynomial(spec, rng)
    else:
        b = _random_yzt_element(spec, rng) * _random_x_polynomial(spec, rng)
    return a, b


def makar_limanov_spot_check(spec, random_state=None, n_samples=20):
    """x is invariant and y, z, t are not under the canonical maps on B, D
    and C; invariant products of sampled pairs have invariant factors."""
    rng = np.random.default_rng(random_state)
    report = Report("invariants of {}".format(spec))
    for label, ring_spec in (
        ("B", spec),
        ("D", spec.graded_spec()),
        ("C", spec.leading_spec()),
    ):
        phi = expmap_canonical(ring_spec)
        x, y, z, t = ring_spec.generators("xyzt")
        report.add(label + ":x-invariant", is_invariant(phi, x).is_invariant)
        if spec.mlc:
            for name, el in (("y", y), ("z", z), ("t", t)):
                inv = is_invariant(phi, el)
                report.add(
                    "{}:{}-not-invariant".format(label, name),
                    not inv.is_invariant,
                    "u-degree {}".format(inv.u_degree),
                )

    phi = expmap_canonical(spec)
    closed = True
    n_pairs = 0
    n_invariant = 0
    for _ in range(n_samples):
        a, b = _factor_pair(spec, rng)
        if a.is_zero() or b.is_zero():
            continue
        n_pairs += 1
        product_invariant = is_invariant(phi, a * b).is_invariant
        factors_invariant = (
            is_invariant(phi, a).is_invariant and is_invariant(phi, b).is_invariant
        )
        n_invariant += product_invariant
        # the ring of invariants is factorially closed in a domain
        if product_invariant != factors_invariant:
            closed = False
    report.add(
        "B:factorial-closure",
        closed,
        "{} pairs, {} invariant products".format(n_pairs, n_invariant),
    )
    logger.debug("spot check on %s: %s", spec, report.failed())
    return report
