"""Exceptions raised by kaucher.

Every domain error derives from :class:`KaucherError`, so callers (and the command line)
can tell a mathematical refusal apart from a bug.
"""


class KaucherError(ValueError):
    pass


class ImproperEndpoints(KaucherError):
    """Endpoints do not describe a classical interval (lo > hi, or not finite)."""


class DomainError(KaucherError):
    """An operation was applied outside the set it is defined on."""


class NotInvertible(KaucherError, ZeroDivisionError):
    pass


class RatioConditionFailed(KaucherError):
    """The endpoint ratios rule out this kind of division, another one applies."""


class CenteredDivisor(KaucherError, ZeroDivisionError):
    """Division by a zero-containing interval whose center is 0."""


class DegenerateDivisor(KaucherError, ZeroDivisionError):
    pass


class PreconditionFailed(KaucherError):
    def __init__(self, inequality: str, message: str = ""):
        super().__init__(message or f"precondition violated: {inequality}")
        self.inequality = inequality


class UnsupportedDivision(KaucherError):
    pass


class Infeasible(KaucherError):
    pass


class NumericalPivot(KaucherError, ArithmeticError):
    pass


class ParseError(KaucherError):
    def __init__(self, message: str, token: str = "", position: int = -1):
        if position >= 0:
            message = f"{message} (at position {position}: {token!r})"
        elif token:
            message = f"{message}: {token!r}"
        super().__init__(message)
        self.token = token
        self.position = position
