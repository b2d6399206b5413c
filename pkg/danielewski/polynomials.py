# Author: Simon Blanke
# Email: simon.blanke@yahoo.com
# License: MIT License

import logging
from functools import lru_cache
from math import lcm

from sympy import divisors
from sympy.polys.orderings import lex
from sympy.polys.rings import ring

from .errors import FieldMismatchError, NotDivisibleError
from .fields import CoefficientField


logger = logging.getLogger(__name__)

VARIABLES = ("X", "Y", "Z", "T", "W", "U", "V")
INDEX = {name: i for i, name in enumerate(VARIABLES)}
IX, IY, IZ, IT, IW, IU, IV = range(len(VARIABLES))

NEG_INF = float("-inf")


@lru_cache(maxsize=None)
def _universe(characteristic):
    R, *_ = ring(VARIABLES, CoefficientField(characteristic).domain, lex)
    return R


def universe(field):
    """Sparse polynomial ring k[X,Y,Z,T,W,U,V] with lex order X > Y > ... > V."""
    return _universe(field.characteristic)


def field_of(p):
    return CoefficientField(p.ring.domain.characteristic())


def gen(R, name):
    return R.gens[INDEX[name]]


def _index(var):
    if isinstance(var, str):
        return INDEX[var]
    return var


def _same_ring(a, b):
    if a.ring != b.ring:
        raise FieldMismatchError(
            "coefficient fields differ: {} and {}".format(
                a.ring.domain, b.ring.domain
            )
        )


def poly_add(a, b):
    _same_ring(a, b)
    return a + b


def poly_mul(a, b):
    _same_ring(a, b)
    return a * b


def degree_in(p, var):
    if not p:
        return NEG_INF
    i = _index(var)
    return max(monom[i] for monom in p.itermonoms())


def variables_of(p):
    used = set()
    for monom in p.itermonoms():
        used.update(VARIABLES[i] for i, k in enumerate(monom) if k)
    return used


def uses_only(p, names):
    return variables_of(p) <= set(names)


def coefficient_in(p, var, k):
    """Coefficient of var^k, as a polynomial in the remaining variables."""
    return p.coeff_wrt(_index(var), k)


def canonical(p):
    """The same polynomial without stored zero coefficients."""
    return p.ring.from_dict(dict(p.iterterms()))


def formal_derivative(p, var):
    return canonical(p.diff(_index(var)))


def evaluate_at(p, var, value):
    """Set one variable to a scalar; the result stays in the same ring."""
    i = _index(var)
    value = p.ring.domain.convert(value)
    terms = {}
    for monom, coeff in p.iterterms():
        n = monom[i]
        if n:
            coeff = coeff * value ** n
            monom = monom[:i] + (0,) + monom[i + 1 :]
        terms[monom] = terms.get(monom, p.ring.domain.zero) + coeff
    return p.ring.from_dict(terms)


def x_adic_split(p):
    """p = c0 + X*rest with c0 free of X."""
    c0 = {}
    rest = {}
    for monom, coeff in p.iterterms():
        if monom[IX]:
            rest[(monom[IX] - 1,) + monom[1:]] = coeff
        else:
            c0[monom] = coeff
    return p.ring.from_dict(c0), p.ring.from_dict(rest)


def divide_by_x_power(p, n):
    if n == 0:
        return p
    terms = {}
    for monom, coeff in p.iterterms():
        if monom[IX] < n:
            raise NotDivisibleError(
                "polynomial is not divisible by X^{}".format(n), residue=p
            )
        terms[(monom[IX] - n,) + monom[1:]] = coeff
    return p.ring.from_dict(terms)


def scale(p, scalar):
    return p.mul_ground(p.ring.domain.convert(scalar))


def _power(cache, i, image, n):
    key = (i, n)
    if key not in cache:
        if n == 1:
            cache[key] = image
        else:
            cache[key] = _power(cache, i, image, n - 1) * image
    return cache[key]


def _grouped_terms(p, indices):
    groups = {}
    for monom, coeff in p.iterterms():
        key = tuple(monom[i] for i in indices)
        residual = list(monom)
        for i in indices:
            residual[i] = 0
        groups.setdefault(key, {})[tuple(residual)] = coeff
    return groups


def substitute(p, assignment):
    """Simultaneous substitution var -> image.

    Images are polynomials of the same ring or LaurentPoly values; with any
    Laurent image the result is a LaurentPoly. Variables without an image
    stay fixed.
    """
    from .laurent import LaurentPoly, laurent_sum

    images = {_index(var): image for var, image in assignment.items()}
    laurent = any(isinstance(image, LaurentPoly) for image in images.values())
    if laurent:
        images = {
            i: image if isinstance(image, LaurentPoly) else LaurentPoly(image)
            for i, image in images.items()
        }
    for image in images.values():
        if image.ring != p.ring:
            raise FieldMismatchError("substitution images live in another ring")

    indices = sorted(images)
    cache = {}
    parts = []
    for key, residual in _grouped_terms(p, indices).items():
        part = p.ring.from_dict(residual)
        factor = None
        for i, n in zip(indices, key):
            if n:
                power = _power(cache, i, images[i], n)
                factor = power if factor is None else factor * power
        if laurent:
            part = LaurentPoly(part)
        parts.append(part if factor is None else factor * part)

    if laurent:
        return laurent_sum(parts, p.ring)
    return sum(parts, p.ring.zero)


def multivar_divide(p, divisors_):
    """Division with remainder in lex order; returns (quotients, remainder)."""
    divisors_ = list(divisors_)
    if not p:
        return [p.ring.zero] * len(divisors_), p.ring.zero
    quotients, remainder = p.div(divisors_)
    return quotients, remainder


def leading_coefficient_in(p, var):
    return coefficient_in(p, var, degree_in(p, var))


def is_monic_in(p, var):
    if not p:
        return False
    return leading_coefficient_in(p, var) == p.ring.one


def univariate_coeffs(p, var):
    """{exponent: scalar} for a polynomial involving only var."""
    i = _index(var)
    coeffs = {}
    for monom, coeff in p.iterterms():
        coeffs[monom[i]] = coeff
    return coeffs


def _evaluate_univariate(coeffs, value):
    total = 0
    for k, c in coeffs.items():
        total += c * value ** k
    return total


def rational_roots(coeffs, domain):
    """Rational roots of sum c_k T^k (coefficients in QQ), sorted."""
    coeffs = {k: c for k, c in coeffs.items() if c}
    if not coeffs:
        raise ValueError("the zero polynomial has every root")
    low = min(coeffs)
    coeffs = {k - low: c for k, c in coeffs.items()}
    top = max(coeffs)

    roots = [domain.zero] if low > 0 else []
    if top == 0:
        return roots

    common = lcm(*(int(domain.denom(c)) for c in coeffs.values()))
    integral = {k: int(domain.numer(c * common)) for k, c in coeffs.items()}

    candidates = set()
    for p_ in divisors(abs(integral[0])):
        for q_ in divisors(abs(integral[top])):
            candidates.add(domain(p_, q_))
            candidates.add(-domain(p_, q_))
    for candidate in sorted(candidates):
        if _evaluate_univariate(integral, candidate) == 0:
            roots.append(candidate)
    return sorted(roots)
