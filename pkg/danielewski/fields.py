# Author: Simon Blanke
# Email: simon.blanke@yahoo.com
# License: MIT License

import re

from sympy import isprime
from sympy.polys.domains import QQ, FF

from .errors import CoefficientError, UnsupportedFieldError


_literal = re.compile(r"^\s*([+-]?)\s*(\d+)\s*(?:/\s*(\d+))?\s*$")


class CoefficientField:
    """The coefficient field k: the rationals or a prime field F_p."""

    def __init__(self, characteristic=0):
        if isinstance(characteristic, bool) or not isinstance(characteristic, (int, str)):
            raise UnsupportedFieldError(
                "characteristic must be an integer, got {!r}".format(characteristic)
            )
        try:
            characteristic = int(characteristic)
        except ValueError:
            raise UnsupportedFieldError(
                "characteristic must be an integer, got {!r}".format(characteristic)
            )
        if characteristic == 0:
            self.domain = QQ
        elif characteristic > 1 and isprime(characteristic):
            self.domain = FF(characteristic, symmetric=False)
        else:
            raise UnsupportedFieldError(
                "characteristic {} is neither 0 nor a prime".format(
                    characteristic
                )
            )
        self.characteristic = characteristic

    @classmethod
    def from_json(cls, value):
        if value == "Q":
            return cls(0)
        if isinstance(value, dict) and list(value.keys()) == ["Fp"]:
            return cls(value["Fp"])
        raise UnsupportedFieldError("unknown field descriptor {!r}".format(value))

    @classmethod
    def from_cli(cls, text):
        if text == "Q":
            return cls(0)
        if text.startswith("Fp:") and text[3:].isdigit():
            return cls(int(text[3:]))
        raise UnsupportedFieldError("expected Q or Fp:<p>, got {!r}".format(text))

    def to_json(self):
        if self.characteristic == 0:
            return "Q"
        return {"Fp": self.characteristic}

    @property
    def zero(self):
        return self.domain.zero

    @property
    def one(self):
        return self.domain.one

    def literal(self, numer, denom=1):
        numer = self.domain.convert(int(numer))
        denom = self.domain.convert(int(denom))
        if not denom:
            raise CoefficientError(
                "literal denominator vanishes in {}".format(self)
            )
        return self.domain.quo(numer, denom)

    def convert(self, value):
        """Domain element from an int, a domain element or a text like -1/4."""
        if isinstance(value, str):
            match = _literal.match(value)
            if match is None:
                raise CoefficientError("not a scalar literal: {!r}".format(value))
            sign, numer, denom = match.groups()
            scalar = self.literal(numer, denom or 1)
            return -scalar if sign == "-" else scalar
        if isinstance(value, int):
            return self.domain.convert(value)
        return self.domain.convert(value)

    def inverse(self, value):
        if not value:
            raise ZeroDivisionError("inverse of zero in {}".format(self))
        return self.domain.quo(self.domain.one, value)

    def is_negative(self, value):
        if self.characteristic:
            return False
        return value < 0

    def format(self, value):
        if self.characteristic:
            return str(int(value))
        numer = int(self.domain.numer(value))
        denom = int(self.domain.denom(value))
        if denom == 1:
            return str(numer)
        return "{}/{}".format(numer, denom)

    def __eq__(self, other):
        return (
            isinstance(other, CoefficientField)
            and self.characteristic == other.characteristic
        )

    def __hash__(self):
        return hash(("CoefficientField", self.characteristic))

    def __repr__(self):
        if self.characteristic == 0:
            return "Q"
        return "F_{}".format(self.characteristic)


RATIONALS = CoefficientField(0)
