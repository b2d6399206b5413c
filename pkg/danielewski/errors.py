# Author: Simon Blanke
# Email: simon.blanke@yahoo.com
# License: MIT License


class DanielewskiError(Exception):
    pass


class InputError(DanielewskiError):
    """Malformed or inconsistent user input. The cli exits with code 2."""


class MathError(DanielewskiError):
    """A mathematical construction or check failed. The cli exits with code 1."""


class PolySyntaxError(InputError):
    def __init__(self, msg, text="", position=None):
        self.text = text
        self.position = position
        if position is not None:
            msg = "{} (at position {})".format(msg, position)
        super().__init__(msg)


class UnknownVariableError(PolySyntaxError):
    pass


class CoefficientError(PolySyntaxError):
    pass


class SpecError(InputError, ValueError):
    pass


class FieldMismatchError(InputError):
    pass


class UnsupportedFieldError(InputError):
    pass


class ZeroElementError(InputError, ValueError):
    pass


class NotDivisibleError(MathError):
    def __init__(self, msg, residue=None):
        self.residue = residue
        super().__init__(msg)


class NotUnitError(MathError):
    pass


class RelationNotKilledError(MathError):
    def __init__(self, relation, residue):
        self.relation = relation
        self.residue = residue
        super().__init__(
            "relation {} is not killed, residue {}".format(relation, residue)
        )


class SeedNotExtendableError(MathError):
    pass


class NotTriangularError(MathError):
    pass


class ExponentBoundError(MathError):
    pass


class ExpMapError(MathError):
    pass
