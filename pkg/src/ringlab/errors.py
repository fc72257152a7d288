"""Exception hierarchy shared by all ringlab modules.

Three tiers matter to callers (and to the CLI's exit codes): parse-time
errors, domain/precondition errors, and desk-scale resource limits.
"""


class AlgebraError(Exception):
    """Base class for all precondition and domain violations."""


class ResourceLimitError(AlgebraError):
    """A desk-scale size limit was exceeded."""


class ParseError(AlgebraError):
    """Syntax error in a polynomial expression, with source position."""

    def __init__(self, message: str, position: int | None = None, token: str | None = None):
        self.position = position
        self.token = token
        if position is not None:
            message = f"position {position}: {message}"
        super().__init__(message)


class UnknownVariable(ParseError):
    pass


class BadCoefficient(ParseError):
    pass


class InvalidDomain(AlgebraError):
    pass


class DomainMismatch(AlgebraError):
    pass


class DivisionByZero(AlgebraError):
    pass


class NoInverse(AlgebraError):
    pass


class RingMismatch(AlgebraError):
    pass


class NotUnivariate(AlgebraError):
    pass


class ZeroPolynomial(AlgebraError):
    pass


class UnsupportedDomain(AlgebraError):
    pass


class InvalidIdeal(AlgebraError):
    pass


class NotAChain(AlgebraError):
    pass


class InseparableCase(AlgebraError):
    pass


class ZeroIdeal(AlgebraError):
    pass


class NotEnoughVariables(AlgebraError):
    pass


class DegenerateWindow(AlgebraError):
    pass


class NotBivariate(AlgebraError):
    pass


class OutOfRange(ResourceLimitError):
    pass


class TooLarge(ResourceLimitError):
    pass
