"""Exception types raised by the library.

Every domain error carries a stable ``code`` (the class name) so the command
line front end can report it as a structured JSON object.
"""


class HeckePoincareError(Exception):
    """Base class for all domain errors."""

    @property
    def code(self):
        return type(self).__name__

    def to_json(self):
        return {"type": self.code, "message": str(self)}


class ZeroConstantTerm(HeckePoincareError, ZeroDivisionError):
    pass


class InsufficientPrecision(HeckePoincareError, ValueError):
    pass


class InvalidShape(HeckePoincareError, ValueError):
    pass


class WeightMismatch(HeckePoincareError, ValueError):
    pass


class IndexOutOfRange(HeckePoincareError, IndexError):
    pass


class NonIntegralDimension(HeckePoincareError, ValueError):
    pass


class NegativeDimension(HeckePoincareError, ValueError):
    pass


class MismatchedParameter(HeckePoincareError, ValueError):
    pass
