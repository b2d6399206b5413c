# Author: Simon Blanke
# Email: simon.blanke@yahoo.com
# License: MIT License

import logging
from dataclasses import dataclass
from functools import reduce

from sympy.polys.orderings import lex
from sympy.polys.rings import ring

from .errors import (
    FieldMismatchError,
    NotDivisibleError,
    NotTriangularError,
    RelationNotKilledError,
    SeedNotExtendableError,
    SpecError,
    UnsupportedFieldError,
)
from .fields import RATIONALS
from .parser import ELEMENT_DISPLAY, ELEMENT_NAMES, parse_scalar, poly_parse, poly_print
from .polynomials import (
    coefficient_in,
    degree_in,
    divide_by_x_power,
    evaluate_at,
    gen,
    rational_roots,
    scale,
    substitute,
    univariate_coeffs,
    universe,
    uses_only,
)
from .report import Report
from .surface import (
    SurfaceElement,
    SurfaceSpec,
    divide_exact_x,
    express_in_R,
    reduce_mod_x,
)


logger = logging.getLogger(__name__)

TUPLE_NAMES = ("d", "e", "r", "s")


@dataclass(frozen=True)
class IsoData:
    """lambda, gamma in k^*, delta in k[X], f in k[X,Z], h in k[X,Y,Z].

    tau, nu, kappa and g are derived from a surface, never stored.
    """

    lam: object
    gamma: object
    delta: object
    f: object
    h: object

    def __post_init__(self):
        if not self.lam or not self.gamma:
            raise SpecError("lambda and gamma must be nonzero")
        if not uses_only(self.delta, ("X",)):
            raise SpecError("delta may only involve X")
        if not uses_only(self.f, ("X", "Z")):
            raise SpecError("f may only involve X and Z")
        if not uses_only(self.h, ("X", "Y", "Z")):
            raise SpecError("h may only involve X, Y and Z")

    @property
    def domain(self):
        return self.f.ring.domain

    def tau(self, spec):
        return self.gamma ** spec.r

    def nu(self, spec):
        return self.domain.quo(self.tau(spec), self.lam ** spec.d)

    def kappa(self, spec):
        return self.nu(spec) ** spec.s

    def g(self, spec):
        return scale(self.f, self.domain.quo(self.domain.one, self.lam ** spec.d))

    @classmethod
    def identity(cls, field=RATIONALS):
        R = universe(field)
        return cls(field.one, field.one, R.zero, R.zero, R.zero)

    @classmethod
    def from_dict(cls, data, field=RATIONALS):
        if not isinstance(data, dict):
            raise SpecError("iso data must be a JSON object")
        missing = [k for k in ("lambda", "gamma", "delta", "f", "h") if k not in data]
        if missing:
            raise SpecError("iso data misses {}".format(", ".join(missing)))
        return cls(
            parse_scalar(data["lambda"], field),
            parse_scalar(data["gamma"], field),
            poly_parse(data["delta"], field, ("X",), ELEMENT_NAMES),
            poly_parse(data["f"], field, ("X", "Z"), ELEMENT_NAMES),
            poly_parse(data["h"], field, ("X", "Y", "Z"), ELEMENT_NAMES),
        )

    def to_dict(self, field=RATIONALS):
        return {
            "lambda": field.format(self.lam),
            "gamma": field.format(self.gamma),
            "delta": poly_print(self.delta),
            "f": poly_print(self.f),
            "h": poly_print(self.h),
        }


class Morphism:
    """source -> target, given by the images of x, y, z, t over the target."""

    def __init__(self, source, target, images, check=True):
        if source.field != target.field:
            raise FieldMismatchError("morphism between surfaces over different fields")
        missing = [name for name in "xyzt" if name not in images]
        if missing:
            raise SpecError("images missing for {}".format(", ".join(missing)))
        self.source = source
        self.target = target
        self.images = {}
        for name in "xyzt":
            image = images[name]
            if isinstance(image, SurfaceElement):
                image = image.expr
            self.images[name] = SurfaceElement(target, image)
        self.inverse = None
        if check:
            self.check_relations()

    def assignment(self):
        return {name.upper(): image.expr for name, image in self.images.items()}

    def apply(self, el):
        expr = el.expr if isinstance(el, SurfaceElement) else el
        return SurfaceElement(self.target, substitute(expr, self.assignment()))

    def relation_residues(self):
        return [
            (label, self.apply(relation))
            for label, relation in zip(("p", "q"), self.source.relations())
        ]

    def check_relations(self):
        for label, residue in self.relation_residues():
            if not residue.is_zero():
                raise RelationNotKilledError(label, str(residue))

    def to_dict(self):
        return {
            name: poly_print(image.expr, ELEMENT_DISPLAY)
            for name, image in self.images.items()
        }

    def __repr__(self):
        return "Morphism({} -> {}, {})".format(self.source, self.target, self.to_dict())


def compose(outer, inner):
    """outer after inner."""
    if inner.target != outer.source:
        raise SpecError("morphisms are not composable")
    images = {name: outer.apply(image) for name, image in inner.images.items()}
    return Morphism(inner.source, outer.target, images, check=False)


def is_identity(morphism):
    if morphism.source != morphism.target:
        return False
    R = morphism.source.ring
    return all(
        morphism.images[name] == SurfaceElement(morphism.source, gen(R, name.upper()))
        for name in "xyzt"
    )


def _split_linear(expr, var, rest_vars):
    if degree_in(expr, var) != 1:
        raise NotTriangularError("image is not linear in {}".format(var))
    lead = coefficient_in(expr, var, 1)
    if not lead.is_ground or not lead:
        raise NotTriangularError("coefficient of {} is not a nonzero scalar".format(var))
    scalar = lead.const()
    rest = expr - gen(expr.ring, var).mul_ground(scalar)
    if not uses_only(rest, rest_vars):
        raise NotTriangularError("image of {} has unexpected variables".format(var.lower()))
    return scalar, rest


def invert_triangular(morphism):
    """Inverse of x -> lam*x, z -> gamma*z + delta(x), y -> nu*y + g(x,z),
    t -> theta*t + h(x,y,z)."""
    R = morphism.source.ring
    domain = R.domain
    X, Y, Z, T = (gen(R, name) for name in "XYZT")
    exprs = {name: image.expr for name, image in morphism.images.items()}

    lam, rest = _split_linear(exprs["x"], "X", ())
    if rest:
        raise NotTriangularError("image of x is not a scalar multiple of x")
    gamma, delta = _split_linear(exprs["z"], "Z", ("X",))
    nu, g = _split_linear(exprs["y"], "Y", ("X", "Z"))
    theta, h = _split_linear(exprs["t"], "T", ("X", "Y", "Z"))

    def inv(c):
        return domain.quo(domain.one, c)

    back_x = X.mul_ground(inv(lam))
    back_z = (Z - substitute(delta, {"X": back_x})).mul_ground(inv(gamma))
    back_y = (Y - substitute(g, {"X": back_x, "Z": back_z})).mul_ground(inv(nu))
    back_t = (
        T - substitute(h, {"X": back_x, "Y": back_y, "Z": back_z})
    ).mul_ground(inv(theta))
    images = {"x": back_x, "y": back_y, "z": back_z, "t": back_t}
    return Morphism(morphism.target, morphism.source, images)


def _attach_inverse(morphism):
    inverse = invert_triangular(morphism)
    if not (is_identity(compose(morphism, inverse)) and is_identity(compose(inverse, morphism))):
        raise ArithmeticError("triangular inverse does not compose to the identity")
    morphism.inverse = inverse
    inverse.inverse = morphism
    return morphism


def invariants_tuple(spec):
    return (spec.d, spec.e, spec.r, spec.s)


class NonIsomorphismReport:
    def __init__(self, first, second):
        self.first = invariants_tuple(first)
        self.second = invariants_tuple(second)
        self.differing = [
            name
            for name, a, b in zip(TUPLE_NAMES, self.first, self.second)
            if a != b
        ]
        if not (first.mlc and second.mlc):
            self.verdict = "refused"
        elif self.differing:
            self.verdict = "not isomorphic"
        else:
            self.verdict = "inconclusive"

    @property
    def certified(self):
        return self.verdict == "not isomorphic"

    def to_dict(self):
        return {
            "first": list(self.first),
            "second": list(self.second),
            "differing": self.differing,
            "verdict": self.verdict,
        }

    def render(self):
        text = "tuples {} vs {}: {}".format(self.first, self.second, self.verdict)
        if self.differing:
            text += " (differ in {})".format(", ".join(self.differing))
        return text


def compare_invariants(first, second):
    return NonIsomorphismReport(first, second)


def build_iso(first, second, data):
    """psi: B_second -> B_first for data with
    P2(lam*X, gamma*Z + delta) = tau*P1 + X^d*f and
    Q2(lam*X, nu*Y + g, gamma*Z + delta) = kappa*Q1 + X^e*h."""
    if invariants_tuple(first) != invariants_tuple(second):
        raise SpecError(
            "invariant tuples differ: {} vs {}".format(
                invariants_tuple(first), invariants_tuple(second)
            )
        )
    R = first.ring
    X, Y, Z, T = (gen(R, name) for name in "XYZT")
    domain = R.domain
    lam_e = domain.quo(domain.one, data.lam ** first.e)
    images = {
        "x": X.mul_ground(data.lam),
        "z": Z.mul_ground(data.gamma) + data.delta,
        "y": Y.mul_ground(data.nu(first)) + data.g(first),
        "t": (T.mul_ground(data.kappa(first)) + data.h).mul_ground(lam_e),
    }
    psi = Morphism(second, first, images)
    logger.debug("built isomorphism %s", psi)
    return _attach_inverse(psi)


def target_from_iso_data(first, data):
    """The surface B_second for which data satisfies the isomorphism conditions."""
    if degree_in(data.f, "Z") >= first.r:
        raise SpecError("deg_Z f must stay below r = {}".format(first.r))
    if degree_in(data.h, "Y") >= first.s:
        raise SpecError("deg_Y h must stay below s = {}".format(first.s))
    R = first.ring
    domain = R.domain
    X, Y, Z = (gen(R, name) for name in "XYZ")

    def inv(c):
        return domain.quo(domain.one, c)

    back_x = X.mul_ground(inv(data.lam))
    back_z = (Z - substitute(data.delta, {"X": back_x})).mul_ground(inv(data.gamma))
    g = substitute(data.g(first), {"X": back_x, "Z": back_z})
    back_y = (Y - g).mul_ground(inv(data.nu(first)))

    point = {"X": back_x, "Y": back_y, "Z": back_z}
    P2 = substitute(first.P, point).mul_ground(data.tau(first)) + back_x ** first.d * substitute(
        data.f, point
    )
    Q2 = substitute(first.Q, point).mul_ground(data.kappa(first)) + back_x ** first.e * substitute(
        data.h, point
    )
    return SurfaceSpec(first.d, first.e, P2, Q2, first.field)


class FiberSolutions(list):
    """(gamma, delta0) candidates; unconstrained when every gamma works."""

    def __init__(self, candidates, unconstrained=False):
        super().__init__(candidates)
        self.unconstrained = unconstrained


def solve_fiber_conditions(first, second):
    """Solutions of P2(0, gamma*Z + delta0) = gamma^r * P1(0,Z) with gamma != 0.

    Over Q only rational gamma are found; over F_p every gamma is tried.
    """
    if first.field != second.field:
        raise FieldMismatchError("surfaces over different fields")
    if first.r != second.r:
        return FiberSolutions([])
    r = first.r
    field = first.field
    domain = field.domain
    p = field.characteristic
    if p and r % p == 0:
        raise UnsupportedFieldError(
            "characteristic {} divides r = {}, delta0 is not determined".format(p, r)
        )

    p1 = univariate_coeffs(first.P0, "Z")
    p2 = univariate_coeffs(second.P0, "Z")
    alpha = p1.get(r - 1, domain.zero)
    beta = p2.get(r - 1, domain.zero)
    inv_r = domain.quo(domain.one, domain.convert(r))

    def delta0(gamma):
        return (gamma * alpha - beta) * inv_r

    def holds(gamma):
        R = first.ring
        Z = gen(R, "Z")
        shifted = substitute(second.P0, {"Z": Z.mul_ground(gamma) + R(delta0(gamma))})
        return shifted == first.P0.mul_ground(gamma ** r)

    if p:
        candidates = [domain.convert(k) for k in range(1, p)]
        solutions = [(c, delta0(c)) for c in candidates if holds(c)]
        return FiberSolutions(solutions, unconstrained=len(solutions) == p - 1)

    S, G, Zs = ring("G,Z", domain, lex)
    d0 = (G * alpha - beta) * inv_r
    lhs = sum((S(c) * (G * Zs + d0) ** k for k, c in p2.items()), S.zero)
    rhs = G ** r * sum((S(c) * Zs ** k for k, c in p1.items()), S.zero)
    difference = lhs - rhs

    constraints = {}
    for (g_exp, z_exp), coeff in difference.iterterms():
        constraints.setdefault(z_exp, {})[g_exp] = coeff
    if not constraints:
        one = domain.one
        return FiberSolutions([(one, delta0(one)), (-one, delta0(-one))], unconstrained=True)

    U, Gu = ring("G", domain, lex)
    polys = [U.from_dict({(k,): c for k, c in cs.items()}) for cs in constraints.values()]
    common = reduce(lambda a, b: a.gcd(b), polys)
    roots = rational_roots({k[0]: c for k, c in common.iterterms()}, domain)
    solutions = [(g, delta0(g)) for g in roots if g and holds(g)]
    logger.debug("fiber constraints %s give %s", common, solutions)
    return FiberSolutions(solutions)


def auto_from_seed(spec, lam, lam2, mu2):
    """Extends x -> lam*x, z -> lam2*z + mu2(x) to an automorphism of B, or
    raises SeedNotExtendableError."""
    field = spec.field
    R = spec.ring
    domain = R.domain
    lam = field.convert(lam)
    lam2 = field.convert(lam2)
    if isinstance(mu2, str):
        mu2 = poly_parse(mu2, field, ("X",), ELEMENT_NAMES)
    if not lam or not lam2:
        raise SpecError("lambda and lambda2 must be nonzero")
    if not uses_only(mu2, ("X",)):
        raise SpecError("mu2 may only involve X")

    X, Y, Z, T = (gen(R, name) for name in "XYZT")
    tau = lam2 ** spec.r
    psi_x = X.mul_ground(lam)
    psi_z = Z.mul_ground(lam2) + mu2
    F = substitute(spec.P, {"X": psi_x, "Z": psi_z}) - spec.P.mul_ground(tau)
    try:
        f = divide_by_x_power(F, spec.d)
    except NotDivisibleError:
        raise SeedNotExtendableError(
            "P(lam*x, lam2*z + mu2) - tau*P is not divisible by x^{}".format(spec.d)
        ) from None

    lam_d = domain.quo(domain.one, lam ** spec.d)
    nu = tau * lam_d
    psi_y = Y.mul_ground(nu) + f.mul_ground(lam_d)
    kappa = nu ** spec.s
    H = substitute(spec.Q, {"X": psi_x, "Y": psi_y, "Z": psi_z}) - spec.Q.mul_ground(kappa)
    try:
        h = divide_exact_x(SurfaceElement(spec, H), spec.e, subring="R").expr
    except NotDivisibleError:
        raise SeedNotExtendableError(
            "Q(psi(x), psi(y), psi(z)) - kappa*Q is not divisible by x^{} in k[x,y,z]".format(
                spec.e
            )
        ) from None
    lam_e = domain.quo(domain.one, lam ** spec.e)
    psi_t = (T.mul_ground(kappa) + h).mul_ground(lam_e)

    images = {"x": psi_x, "y": psi_y, "z": psi_z, "t": psi_t}
    return _attach_inverse(Morphism(spec, spec, images))


def _scalar_multiple_of(laurent, var):
    """c with laurent = c*var, or None."""
    if not laurent.is_polynomial():
        return None
    terms = list(laurent.numer.iterterms())
    if len(terms) != 1:
        return None
    monom, coeff = terms[0]
    if monom != gen(laurent.ring, var).LM:
        return None
    return coeff


def verify_auto_properties(psi):
    spec = psi.source
    if psi.target != spec:
        raise SpecError("automorphism checks need source == target")
    field = spec.field
    R = spec.ring
    report = Report("automorphism of {}".format(spec))

    lam = _scalar_multiple_of(psi.images["x"].laurent, "X")
    report.add("2-x-image", lam is not None and bool(lam), "psi(x) = lambda*x")

    lz = psi.images["z"].laurent
    z_ok = (
        lz.is_polynomial()
        and uses_only(lz.numer, ("X", "Z"))
        and degree_in(lz.numer, "Z") == 1
        and coefficient_in(lz.numer, "Z", 1).is_ground
    )
    report.add("1-z-image", z_ok, "psi(z) = lambda2*z + mu2(x)")

    if lam and z_ok:
        lam2 = coefficient_in(lz.numer, "Z", 1).const()
        tau = lam2 ** spec.r
        F = substitute(spec.P, {"X": psi.images["x"].expr, "Z": lz.numer}) - spec.P.mul_ground(tau)
        try:
            divide_by_x_power(F, spec.d)
            divisible = True
        except NotDivisibleError:
            divisible = False
        report.add("3-x-power", divisible, "x^d divides P(psi(x), psi(z)) - tau*P")
    else:
        report.add("3-x-power", False, "needs the x and z images")

    ly = psi.images["y"].laurent
    y_image = spec.laurent_images()["Y"]
    nu = ly.coefficient((-spec.d, 0, spec.r, 0, 0, 0, 0))
    residual = ly - y_image * R(nu)
    y_ok = bool(nu) and residual.is_polynomial() and uses_only(residual.numer, ("X", "Z"))
    report.add("4-y-image", y_ok, "psi(y) = nu*y + g(x,z)")

    H = substitute(
        spec.Q,
        {name.upper(): psi.images[name].expr for name in "xyz"},
    ) - spec.Q.mul_ground(nu ** spec.s)
    try:
        divide_exact_x(SurfaceElement(spec, H), spec.e, subring="R")
        q_ok = True
    except NotDivisibleError:
        q_ok = False
    report.add("5-q-compatibility", q_ok, "x^e divides psi(Q) - nu^s*Q in k[x,y,z]")

    # A/xA is free over k[Y,Z]/(P(0,Z), Q(0,Y,Z)) in T, so a is read off mod x
    t_mod_x = reduce_mod_x(psi.images["t"])
    a = None
    if degree_in(t_mod_x, "T") == 1 and coefficient_in(t_mod_x, "T", 1).is_ground:
        a = coefficient_in(t_mod_x, "T", 1).const()
    t_ok = False
    b = None
    if a:
        rest = psi.images["t"] - SurfaceElement(spec, gen(R, "T").mul_ground(a))
        try:
            b = poly_print(express_in_R(rest), ELEMENT_DISPLAY)
            t_ok = True
        except NotDivisibleError:
            t_ok = False
    report.add("6-t-image", t_ok, "psi(t) = a*t + b(x,y,z)")

    report.data = {
        "lambda": field.format(lam) if lam is not None else "-",
        "a": field.format(a) if a else "-",
        "b": b if b is not None else "-",
    }
    return report


def danielewski_to_standard(n, f, field=RATIONALS):
    """x^n*v = f(x,z) rewritten as X*Y - P(Z), X^(n-1)*T - Y - f1(X,Z) with
    P monic."""
    if isinstance(f, str):
        f = poly_parse(f, field, ("X", "Z"), ELEMENT_NAMES)
    if not isinstance(n, int) or n < 2:
        raise SpecError("n must be an integer >= 2")
    if not uses_only(f, ("X", "Z")):
        raise SpecError("f may only involve X and Z")
    f0 = evaluate_at(f, "X", 0)
    if not f0:
        raise SpecError("f(0,Z) vanishes, X divides f")
    if degree_in(f, "Z") < 2:
        raise SpecError("deg_Z f must be at least 2")
    lead = coefficient_in(f0, "Z", degree_in(f0, "Z")).const()
    inv = f.ring.domain.quo(f.ring.domain.one, lead)
    f1 = divide_by_x_power(f - f0, 1)
    Y = gen(f.ring, "Y")
    return SurfaceSpec(1, n - 1, f0.mul_ground(inv), Y + f1.mul_ground(inv), field)
