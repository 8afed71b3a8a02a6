"""Exception types shared across the package."""


class AlexpolyError(Exception):
    """Base class for all errors raised by this package."""


class NotDivisible(AlexpolyError):
    """Exact polynomial division has no quotient over the integers."""


class NonIntegerExponent(AlexpolyError):
    """A half power of t appeared where only integer powers are allowed."""


class NotSquare(AlexpolyError):
    """A determinant-like operation received a non-square matrix."""


class ShapeMismatch(AlexpolyError):
    """Matrix or list dimensions do not line up."""


class NotUnimodular(AlexpolyError):
    """A basis-change matrix does not have determinant +-1."""


class PreconditionViolated(AlexpolyError):
    """Input data lacks the structure the operation requires."""


class InvalidDocument(AlexpolyError):
    """A JSON input document is malformed or has the wrong kind."""
