"""Exception hierarchy.

``ValidationError`` subclasses signal bad input (CLI exit code 2);
``InternalError`` subclasses signal an engine bug caught by a consistency
check (CLI exit code 3).
"""


class CircleInvError(Exception):
    pass


class ValidationError(CircleInvError):
    pass


class InternalError(CircleInvError):
    pass


class ZeroDenominator(ValidationError):
    pass


class PoleAtZero(ValidationError):
    pass


class ZeroFunction(ValidationError):
    pass


class Empty(ValidationError):
    pass


class Unstable(ValidationError):
    pass


class NotCoprime(ValidationError):
    pass


class NonInvertibleDenominator(ValidationError):
    pass


class RepeatedVariables(ValidationError):
    pass


class ZeroBase(ValidationError):
    pass


class CombinatorialExplosion(ValidationError):
    pass


class OutOfRange(ValidationError):
    pass


class DegreeOverflow(ValidationError):
    pass


class InternalInvariantViolation(InternalError):
    pass


class OracleMismatch(InternalError):
    pass
