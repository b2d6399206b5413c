# Author: Simon Blanke
# Email: simon.blanke@yahoo.com
# License: MIT License

from .errors import ExponentBoundError
from .polynomials import IX, IZ, NEG_INF, VARIABLES


EXPONENT_BOUND = 10 ** 6


def _x_tail(p):
    return min(monom[IX] for monom in p.itermonoms())


def _shift_x(p, n):
    """Multiply by X^n, n may be negative when every term allows it."""
    if n == 0:
        return p
    return p.ring.from_dict(
        {(monom[IX] + n,) + monom[1:]: coeff for monom, coeff in p.iterterms()}
    )


class LaurentPoly:
    """numer * X^(-shift), kept with X not dividing numer whenever shift > 0.

    Only X may carry negative exponents. Values are immutable.
    """

    __slots__ = ("numer", "shift")

    def __init__(self, numer, shift=0):
        if not numer:
            shift = 0
        elif shift < 0:
            numer = _shift_x(numer, -shift)
            shift = 0
        elif shift > 0:
            common = min(shift, _x_tail(numer))
            if common:
                numer = _shift_x(numer, -common)
                shift -= common
        if shift > EXPONENT_BOUND or (
            numer and max(m[IX] for m in numer.itermonoms()) > EXPONENT_BOUND
        ):
            raise ExponentBoundError(
                "X exponent beyond {} in Laurent arithmetic".format(EXPONENT_BOUND)
            )
        self.numer = numer
        self.shift = shift

    @property
    def ring(self):
        return self.numer.ring

    @classmethod
    def monomial(cls, R, x_exp):
        if x_exp >= 0:
            return cls(R.gens[IX] ** x_exp)
        return cls(R.one, -x_exp)

    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            return other
        return LaurentPoly(self.ring(other))

    def __add__(self, other):
        other = self._coerce(other)
        shift = max(self.shift, other.shift)
        numer = _shift_x(self.numer, shift - self.shift) + _shift_x(
            other.numer, shift - other.shift
        )
        return LaurentPoly(numer, shift)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(-self.numer, self.shift)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        return LaurentPoly(self.numer * other.numer, self.shift + other.shift)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative powers of Laurent polynomials")
        return LaurentPoly(self.numer ** n, self.shift * n)

    def __bool__(self):
        return bool(self.numer)

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            try:
                other = self._coerce(other)
            except (TypeError, ValueError, NotImplementedError):
                return NotImplemented
        return self.shift == other.shift and self.numer == other.numer

    def __hash__(self):
        return hash((self.numer, self.shift))

    def terms(self):
        """[(exponents, coeff)] with the true (possibly negative) X exponent."""
        return [
            ((monom[IX] - self.shift,) + monom[1:], coeff)
            for monom, coeff in sorted(self.numer.iterterms(), reverse=True)
        ]

    def is_polynomial(self):
        return self.shift == 0

    def to_poly(self):
        if self.shift:
            raise ValueError("Laurent polynomial has negative X exponents")
        return self.numer

    def ord_x(self):
        if not self:
            return float("inf")
        return _x_tail(self.numer) - self.shift

    def top_z(self):
        if not self:
            return NEG_INF
        return max(monom[IZ] for monom in self.numer.itermonoms())

    def degree_in(self, var):
        if not self:
            return NEG_INF
        i = VARIABLES.index(var)
        if i == IX:
            return max(m[IX] for m in self.numer.itermonoms()) - self.shift
        return max(m[i] for m in self.numer.itermonoms())

    def coefficient(self, exponents):
        """Coefficient of the monomial with the given true exponents."""
        monom = (exponents[IX] + self.shift,) + tuple(exponents[1:])
        if monom[IX] < 0:
            return self.ring.domain.zero
        return self.numer.get(monom, self.ring.domain.zero)

    def x_slice(self, order):
        terms = {
            monom: coeff
            for monom, coeff in self.numer.iterterms()
            if monom[IX] - self.shift == order
        }
        return LaurentPoly(self.ring.from_dict(terms), self.shift)

    def z_slice(self, degree):
        terms = {
            monom: coeff
            for monom, coeff in self.numer.iterterms()
            if monom[IZ] == degree
        }
        return LaurentPoly(self.ring.from_dict(terms), self.shift)

    def lowest_x_slice(self):
        return self.x_slice(self.ord_x())

    def top_z_slice(self):
        return self.z_slice(self.top_z())

    def evaluate(self, var, value):
        from .polynomials import evaluate_at

        if var == "X":
            raise ValueError("cannot evaluate a Laurent polynomial in X")
        return LaurentPoly(evaluate_at(self.numer, var, value), self.shift)

    def __str__(self):
        from .parser import format_terms

        return format_terms(self.terms(), self.ring)

    def __repr__(self):
        return "LaurentPoly({})".format(self)


def laurent_sum(parts, R):
    parts = [part for part in parts if part]
    if not parts:
        return LaurentPoly(R.zero)
    shift = max(part.shift for part in parts)
    numer = R.zero
    for part in parts:
        numer += _shift_x(part.numer, shift - part.shift)
    return LaurentPoly(numer, shift)
