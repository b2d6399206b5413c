# Author: Simon Blanke
# Email: simon.blanke@yahoo.com
# License: MIT License

import json
import logging

import numpy as np

from .errors import FieldMismatchError, NotDivisibleError, SpecError
from .fields import RATIONALS, CoefficientField
from .laurent import LaurentPoly
from .parser import ELEMENT_DISPLAY, ELEMENT_NAMES, poly_parse, poly_print
from .polynomials import (
    IT,
    VARIABLES,
    IX,
    IY,
    IW,
    coefficient_in,
    degree_in,
    divide_by_x_power,
    evaluate_at,
    formal_derivative,
    gen,
    is_monic_in,
    multivar_divide,
    substitute,
    universe,
    uses_only,
    x_adic_split,
)


logger = logging.getLogger(__name__)

MAX_X_DIVISIONS = 64


class SurfaceSpec:
    """B = k[X,Y,Z,T] / (X^d*Y - P(X,Z), X^e*T - Q(X,Y,Z))."""

    def __init__(self, d, e, P, Q, field=RATIONALS):
        if isinstance(P, str):
            P = poly_parse(P, field, allowed_vars=("X", "Z"))
        if isinstance(Q, str):
            Q = poly_parse(Q, field, allowed_vars=("X", "Y", "Z"))
        if not hasattr(P, "ring") or not hasattr(Q, "ring"):
            raise SpecError("P and Q must be polynomials or polynomial strings")
        if P.ring != universe(field) or Q.ring != universe(field):
            raise FieldMismatchError("P and Q must have coefficients in {}".format(field))

        if not isinstance(d, int) or not isinstance(e, int) or d < 1 or e < 1:
            raise SpecError("d and e must be positive integers, got {}, {}".format(d, e))
        if not uses_only(P, ("X", "Z")):
            raise SpecError("P may only involve X and Z")
        if not uses_only(Q, ("X", "Y", "Z")):
            raise SpecError("Q may only involve X, Y and Z")

        r = degree_in(P, "Z")
        s = degree_in(Q, "Y")
        if r < 1:
            raise SpecError("r = deg_Z P must be at least 1")
        if s < 1:
            raise SpecError("s = deg_Y Q must be at least 1")
        if not is_monic_in(P, "Z"):
            raise SpecError("P must be monic in Z (leading coefficient exactly 1)")
        if not is_monic_in(Q, "Y"):
            raise SpecError("Q must be monic in Y (leading coefficient exactly 1)")

        self.d = d
        self.e = e
        self.P = P
        self.Q = Q
        self.r = int(r)
        self.s = int(s)
        self.field = field
        self.ring = universe(field)

        self._images = None

    @property
    def double(self):
        return self.r >= 2 and self.s >= 2

    @property
    def mlc(self):
        r, s, e = self.r, self.s, self.e
        return (r >= 2 and s >= 2) or (r >= 2 and s == 1) or (r == 1 and s >= 2 and e >= 2)

    @property
    def P0(self):
        return evaluate_at(self.P, "X", 0)

    @property
    def Q0(self):
        return evaluate_at(self.Q, "X", 0)

    @property
    def p_tilde(self):
        return divide_by_x_power(self.P - self.P0, 1)

    @property
    def q_tilde(self):
        return divide_by_x_power(self.Q - self.Q0, 1)

    @property
    def P_prime0(self):
        return formal_derivative(self.P0, "Z")

    @property
    def Q_prime0(self):
        return formal_derivative(self.Q0, "Y")

    def relations(self):
        X, Y, T = (gen(self.ring, name) for name in "XYT")
        return X ** self.d * Y - self.P, X ** self.e * T - self.Q

    def graded_spec(self):
        """D, presented by X^d*Y - P(0,Z), X^e*T - Y^s."""
        return SurfaceSpec(self.d, self.e, self.P0, gen(self.ring, "Y") ** self.s, self.field)

    def leading_spec(self):
        """C, presented by X^d*Y - Z^r, X^e*T - Y^s."""
        Y, Z = gen(self.ring, "Y"), gen(self.ring, "Z")
        return SurfaceSpec(self.d, self.e, Z ** self.r, Y ** self.s, self.field)

    def sibling(self, e):
        return SurfaceSpec(self.d, e, self.P, self.Q, self.field)

    def laurent_images(self):
        """Images of Y and T in k[X, X^-1, Z]."""
        if self._images is None:
            y = LaurentPoly(self.P, self.d)
            t = substitute(self.Q, {"Y": y}) * LaurentPoly(self.ring.one, self.e)
            self._images = {"Y": y, "T": t}
        return self._images

    def element(self, expr):
        return SurfaceElement(self, expr)

    def generators(self, names="xyztw"):
        return [SurfaceElement(self, gen(self.ring, name.upper())) for name in names]

    def to_dict(self):
        return {
            "field": self.field.to_json(),
            "d": self.d,
            "e": self.e,
            "P": poly_print(self.P),
            "Q": poly_print(self.Q),
        }

    @classmethod
    def from_dict(cls, data, field=None):
        if not isinstance(data, dict):
            raise SpecError("a surface spec must be a JSON object")
        missing = [key for key in ("d", "e", "P", "Q") if key not in data]
        if missing:
            raise SpecError("surface spec misses {}".format(", ".join(missing)))
        if "field" in data:
            declared = CoefficientField.from_json(data["field"])
            if field is not None and field != declared:
                raise FieldMismatchError(
                    "spec declares {} but {} was requested".format(declared, field)
                )
            field = declared
        elif field is None:
            field = RATIONALS
        return cls(data["d"], data["e"], data["P"], data["Q"], field)

    def __eq__(self, other):
        return isinstance(other, SurfaceSpec) and (
            self.field,
            self.d,
            self.e,
            self.P,
            self.Q,
        ) == (other.field, other.d, other.e, other.P, other.Q)

    def __hash__(self):
        return hash((self.field, self.d, self.e, self.P, self.Q))

    def __repr__(self):
        return "B({}, {}, {}, {})".format(
            self.d, self.e, poly_print(self.P), poly_print(self.Q)
        )


def surface_new(d, e, P, Q, field=RATIONALS):
    return SurfaceSpec(d, e, P, Q, field)


def load_spec(path, field=None):
    with open(path) as fh:
        data = json.load(fh)
    return SurfaceSpec.from_dict(data, field)


def save_spec(spec, path):
    with open(path, "w") as fh:
        json.dump(spec.to_dict(), fh, indent=2)


class SurfaceElement:
    """An element of B (or A = B[w]) as an expression, compared via its Laurent image."""

    def __init__(self, spec, expr):
        if isinstance(expr, str):
            expr = poly_parse(expr, spec.field, names=ELEMENT_NAMES)
        elif not hasattr(expr, "ring"):
            expr = spec.ring(expr)
        if expr.ring != spec.ring:
            raise FieldMismatchError("element and surface use different fields")
        self.spec = spec
        self.expr = expr
        self.laurent = embed_expr(spec, expr)

    def _coerce(self, other):
        if isinstance(other, SurfaceElement):
            if other.spec != self.spec:
                raise SpecError("elements of different surfaces")
            return other
        return SurfaceElement(self.spec, other)

    def __add__(self, other):
        return SurfaceElement(self.spec, self.expr + self._coerce(other).expr)

    __radd__ = __add__

    def __sub__(self, other):
        return SurfaceElement(self.spec, self.expr - self._coerce(other).expr)

    def __rsub__(self, other):
        return SurfaceElement(self.spec, self._coerce(other).expr - self.expr)

    def __neg__(self):
        return SurfaceElement(self.spec, -self.expr)

    def __mul__(self, other):
        return SurfaceElement(self.spec, self.expr * self._coerce(other).expr)

    __rmul__ = __mul__

    def __pow__(self, n):
        return SurfaceElement(self.spec, self.expr ** n)

    def __eq__(self, other):
        return elem_equal(self, self._coerce(other))

    def __hash__(self):
        return hash(self.laurent)

    def is_zero(self):
        return not self.laurent

    def __str__(self):
        return poly_print(self.expr, ELEMENT_DISPLAY)

    def __repr__(self):
        return "SurfaceElement({})".format(self)


def embed_expr(spec, expr):
    return substitute(expr, spec.laurent_images())


def embed_laurent(el):
    return el.laurent


def elem_equal(a, b):
    if a.spec != b.spec:
        raise SpecError("elements of different surfaces")
    return a.laurent == b.laurent


def elem_add(a, b):
    return a + b


def elem_mul(a, b):
    return a * b


class NormalForm:
    """Expansion g = f0(x,z) + sum a_ij(z) x^i y^j + sum b_il(z) x^i t^l
    + sum c_ijl(z) x^i y^j t^l, stratified by the degree in w.

    Components map index tuples to polynomials: f0[w] in k[X,Z], a[(w,i,j)],
    b[(w,i,l)] and c[(w,i,j,l)] in k[Z] (other variables ride along).
    """

    def __init__(self, spec, expr):
        self.spec = spec
        self.expr = expr
        self.f0 = {}
        self.a = {}
        self.b = {}
        self.c = {}
        for monom, coeff in expr.iterterms():
            i, j, l, w = monom[IX], monom[IY], monom[IT], monom[IW]
            if j == 0 and l == 0:
                family, key, keep = self.f0, w, (IX,)
            elif l == 0:
                family, key, keep = self.a, (w, i, j), ()
            elif j == 0:
                family, key, keep = self.b, (w, i, l), ()
            else:
                family, key, keep = self.c, (w, i, j, l), ()
            residual = tuple(
                k if idx not in (IX, IY, IT, IW) or idx in keep else 0
                for idx, k in enumerate(monom)
            )
            part = family.setdefault(key, {})
            part[residual] = coeff
        for family in (self.f0, self.a, self.b, self.c):
            for key in family:
                family[key] = spec.ring.from_dict(family[key])

    def within_bounds(self):
        d, e = self.spec.d, self.spec.e
        return (
            all(i < d and j > 0 for (_, i, j) in self.a)
            and all(i < e and l > 0 for (_, i, l) in self.b)
            and all(i < min(d, e) and j > 0 and l > 0 for (_, i, j, l) in self.c)
        )

    def expand(self):
        return SurfaceElement(self.spec, self.expr)

    def __eq__(self, other):
        return isinstance(other, NormalForm) and self.expr == other.expr

    def __hash__(self):
        return hash(self.expr)

    def __str__(self):
        return poly_print(self.expr, ELEMENT_DISPLAY)


def _rewrite_monomial(spec, monom, coeff, powers):
    """One batch of x^d*y -> P (preferred) or x^e*t -> Q, or None if irreducible."""
    a, j, l = monom[IX], monom[IY], monom[IT]
    if j and a >= spec.d:
        k = min(j, a // spec.d)
        residual = (a - k * spec.d, j - k) + monom[2:]
        return powers("P", k).mul_term((residual, coeff))
    if l and a >= spec.e:
        k = min(l, a // spec.e)
        residual = (a - k * spec.e,) + monom[1:IT] + (l - k,) + monom[IT + 1 :]
        return powers("Q", k).mul_term((residual, coeff))
    return None


def normalize(el):
    spec = el.spec
    cache = {}

    def powers(name, k):
        if (name, k) not in cache:
            base = spec.P if name == "P" else spec.Q
            cache[(name, k)] = base ** k
        return cache[(name, k)]

    done = {}
    pending = el.expr
    rounds = 0
    while pending:
        rounds += 1
        following = spec.ring.zero
        for monom, coeff in pending.iterterms():
            rewritten = _rewrite_monomial(spec, monom, coeff, powers)
            if rewritten is None:
                done[monom] = done.get(monom, spec.ring.domain.zero) + coeff
            else:
                following += rewritten
        pending = following
    logger.debug("normal form reached after %d rewrite rounds", rounds)
    return NormalForm(spec, spec.ring.from_dict(done))


def reduce_mod_x(el):
    """Canonical image in A/xA = (k[Y,Z]/(P(0,Z), Q(0,Y,Z)))[T,W]."""
    spec = el.spec
    c0 = evaluate_at(el.expr, "X", 0)
    _, remainder = multivar_divide(c0, [spec.Q0, spec.P0])
    return remainder


def divide_exact_x(el, n=1, subring="A"):
    """q with x^n * q = el, built from P(0,z) = x*(x^(d-1)*y - p~) and
    Q(0,y,z) = x*(x^(e-1)*t - q~).

    subring="R" only uses the first relation, so T-free inputs give T-free
    quotients.
    """
    spec = el.spec
    if n < 0 or n > MAX_X_DIVISIONS:
        raise SpecError("x-division exponent must lie in [0, {}]".format(MAX_X_DIVISIONS))
    if subring not in ("A", "R"):
        raise SpecError("subring must be 'A' or 'R'")

    R = spec.ring
    X, Y, T = (gen(R, name) for name in "XYT")
    p_factor = X ** (spec.d - 1) * Y - spec.p_tilde
    q_factor = X ** (spec.e - 1) * T - spec.q_tilde
    divisors = [spec.Q0, spec.P0] if subring == "A" else [spec.P0]

    expr = el.expr
    for step in range(n):
        c0, rest = x_adic_split(expr)
        quotients, remainder = multivar_divide(c0, divisors)
        if remainder:
            raise NotDivisibleError(
                "element is not divisible by x^{} (residue {} mod x at step {})".format(
                    n, poly_print(remainder, ELEMENT_DISPLAY), step + 1
                ),
                residue=remainder,
            )
        if subring == "A":
            u, v = quotients
            expr = rest + u * q_factor + v * p_factor
        else:
            expr = rest + quotients[0] * p_factor

    quotient = SurfaceElement(spec, expr)
    if quotient.laurent * LaurentPoly(X ** n) != el.laurent:
        raise ArithmeticError("x-division produced an inconsistent quotient")
    return quotient


def express_in_R(el):
    """el as a T-free expression in k[x,y,z]; NotDivisibleError if el lies
    outside that subring."""
    spec = el.spec
    X = gen(spec.ring, "X")
    k = max(degree_in(el.expr, "T"), 0)
    n = spec.e * k
    # x^(e*k) * el with every x^e*t replaced by Q
    lifted = spec.ring.zero
    for j in range(k + 1):
        lifted += coefficient_in(el.expr, "T", j) * spec.Q ** j * X ** (n - spec.e * j)
    return divide_exact_x(SurfaceElement(spec, lifted), n, subring="R").expr


def random_element(spec, rng, n_terms=4, max_exp=2, variables="XYZT", coeff_range=3):
    """Random free-algebra expression, for property checks."""
    if not isinstance(rng, np.random.Generator):
        rng = np.random.default_rng(rng)
    positions = [VARIABLES.index(v) for v in variables]
    terms = {}
    for _ in range(n_terms):
        monom = [0] * 7
        for pos in positions:
            monom[pos] = int(rng.integers(0, max_exp + 1))
        coeff = int(rng.integers(-coeff_range, coeff_range + 1))
        if coeff == 0:
            coeff = 1
        terms[tuple(monom)] = spec.field.convert(coeff)
    return SurfaceElement(spec, spec.ring.from_dict(terms))
