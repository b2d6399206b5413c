# Author: Simon Blanke
# Email: simon.blanke@yahoo.com
# License: MIT License

import numpy as np

from .errors import ZeroElementError
from .expmap import expmap_canonical, verify_expmap
from .report import Report
from .surface import SurfaceElement, random_element


class GradedElement:
    """A homogeneous Laurent slice, read as an element of D (kind "B") or of
    C (kind "D") through that ring's own Laurent embedding."""

    def __init__(self, spec, laurent, degree, kind):
        self.spec = spec
        self.laurent = laurent
        self.degree = degree
        self.kind = kind

    def __mul__(self, other):
        return GradedElement(
            self.spec,
            self.laurent * other.laurent,
            self.degree + other.degree,
            self.kind,
        )

    def __pow__(self, n):
        return GradedElement(self.spec, self.laurent ** n, self.degree * n, self.kind)

    def __eq__(self, other):
        if isinstance(other, SurfaceElement):
            return self.laurent == other.laurent
        return isinstance(other, GradedElement) and self.laurent == other.laurent

    def __hash__(self):
        return hash(self.laurent)

    def __repr__(self):
        return "GradedElement({}, degree={})".format(self.laurent, self.degree)


def _nonzero(el):
    if el.is_zero():
        raise ZeroElementError("the zero element has no filtration degree")


def filt_degree_B(el):
    _nonzero(el)
    return int(-el.laurent.ord_x())


def rho_B(el, graded_spec=None):
    _nonzero(el)
    graded_spec = graded_spec or el.spec.graded_spec()
    return GradedElement(graded_spec, el.laurent.lowest_x_slice(), filt_degree_B(el), "B")


def filt_degree_D(el):
    _nonzero(el)
    return int(el.laurent.top_z())


def rho_D(el, leading_spec=None):
    _nonzero(el)
    leading_spec = leading_spec or el.spec.leading_spec()
    return GradedElement(leading_spec, el.laurent.top_z_slice(), filt_degree_D(el), "D")


def _relation_checks(report, prefix, spec, images):
    x, y, z, t = images
    P, Q = spec.P, spec.Q
    lhs_p = x ** spec.d * y
    rhs_p = SurfaceElement(spec, P)
    report.add(prefix + ":relation-p", lhs_p == rhs_p)
    lhs_q = x ** spec.e * t
    report.add(prefix + ":relation-q", lhs_q == SurfaceElement(spec, Q))


def verify_graded_relations(spec, random_state=None, n_pairs=100):
    rng = np.random.default_rng(random_state)
    D = spec.graded_spec()
    C = spec.leading_spec()
    report = Report("associated graded rings of {}".format(spec), data={"D": repr(D), "C": repr(C)})

    b_gens = spec.generators("xyzt")
    d_gens = D.generators("xyzt")
    c_gens = C.generators("xyzt")

    rho_b = [rho_B(g, D) for g in b_gens]
    for name, image, target in zip("xyzt", rho_b, d_gens):
        report.add("gr-B:generator-" + name, image == target)
    _relation_checks(report, "gr-B", D, rho_b)

    rho_d = [rho_D(g, C) for g in d_gens]
    for name, image, target in zip("xyzt", rho_d, c_gens):
        report.add("gr-D:generator-" + name, image == target)
    _relation_checks(report, "gr-D", C, rho_d)

    degrees_b = [filt_degree_B(g) for g in b_gens]
    expected_b = [-1, spec.d, 0, spec.d * spec.s + spec.e]
    report.add("degrees-B", degrees_b == expected_b, "x,y,z,t -> {}".format(degrees_b))
    degrees_d = [filt_degree_D(g) for g in d_gens[1:]]
    expected_d = [spec.r, 1, spec.r * spec.s]
    report.add("degrees-D", degrees_d == expected_d, "y,z,t -> {}".format(degrees_d))

    multiplicative_b = True
    multiplicative_d = True
    for _ in range(n_pairs):
        a = random_element(spec, rng)
        b = random_element(spec, rng)
        if a.is_zero() or b.is_zero():
            continue
        ab = a * b
        multiplicative_b = multiplicative_b and (
            rho_B(ab, D) == rho_B(a, D) * rho_B(b, D)
            and filt_degree_B(ab) == filt_degree_B(a) + filt_degree_B(b)
        )
        a_ = random_element(D, rng)
        b_ = random_element(D, rng)
        if a_.is_zero() or b_.is_zero():
            continue
        ab_ = a_ * b_
        multiplicative_d = multiplicative_d and (
            rho_D(ab_, C) == rho_D(a_, C) * rho_D(b_, C)
            and filt_degree_D(ab_) == filt_degree_D(a_) + filt_degree_D(b_)
        )
    report.add("multiplicative-B", multiplicative_b)
    report.add("multiplicative-D", multiplicative_d)

    for label, ring_spec in (("D", D), ("C", C)):
        report.add("expmap-" + label, verify_expmap(expmap_canonical(ring_spec)).passed)
    return report
