"""Exact and Euclidean division of interval classes.

For ``Y`` and ``X`` we look for ``Z`` with ``Y = X • Z`` (exact division), and when there is none,
for a quotient and a remainder with ``Y = X • Z + R`` where the remainder is as small as possible:

 * positive intervals: exact when ``y2 / y1 >= x2 / x1``, otherwise a point quotient and a point
   remainder with minimal center (:func:`euclid_positive`)
 * intervals containing 0: exact under the ratio conditions of :func:`div_exact_zero_containing`,
   otherwise a non-invertible quotient and remainder of minimal length (:func:`euclid_zero_containing`)

:func:`divide` picks the applicable one.
"""
import logging
from dataclasses import dataclass
from typing import Callable, List, Optional

from .core import ZERO, GClass, X2, add, scalar_mul, sub
from .embedding import bullet
from .errors import (
    CenteredDivisor,
    DegenerateDivisor,
    DomainError,
    PreconditionFailed,
    RatioConditionFailed,
    UnsupportedDivision,
)
from .utils import is_zero, resolve

logger = logging.getLogger("kaucher.division")


@dataclass(frozen=True)
class DivisionResult:
    quotient: GClass
    remainder: GClass
    exact: bool
    method: str = ""

    def reconstruct(self, divisor: GClass) -> GClass:
        """``divisor • quotient + remainder``, which gives back the dividend"""
        return add(bullet(divisor, self.quotient), self.remainder)


def _require_proper(name: str, a: GClass):
    if not a.is_proper:
        raise DomainError(f"{name} should be a proper class, got {a}")


def _scaled_tol(tol: Optional[float], *values: float) -> float:
    return resolve(tol) * max(1.0, *(abs(v) for v in values))


def div_exact_positive(y: GClass, x: GClass, tol: Optional[float] = None) -> GClass:
    """Z with ``X • Z == Y`` for ``X = [x1, x2]``, ``0 < x1`` and ``Y = [y1, y2]``, ``0 <= y1``."""
    _require_proper("divisor", x)
    _require_proper("dividend", y)
    x1, x2, y1, y2 = x.inf, x.sup, y.inf, y.sup
    if x1 <= resolve(tol):
        raise DomainError(f"divisor {x} should be a positive interval with a positive left endpoint")
    if y1 < -resolve(tol):
        raise DomainError(f"dividend {y} should be an interval of non-negative numbers")
    # y2 / y1 >= x2 / x1, multiplied out so that y1 == 0 is allowed
    if y2 * x1 - x2 * y1 < -_scaled_tol(tol, y2 * x1, x2 * y1):
        raise RatioConditionFailed(f"{y} / {x}: y2/y1 < x2/x1, there is no exact quotient")
    return GClass(max(y1, 0.0) / x1, y2 / x2)


def div_exact_zero_containing(y: GClass, x: GClass, tol: Optional[float] = None) -> GClass:
    """Z with ``X • Z == Y`` for ``X = [-x1, x2]`` and ``Y = [-y1, y2]``, all of x1, x2, y1, y2 positive."""
    _require_proper("divisor", x)
    _require_proper("dividend", y)
    x1, x2, y1, y2 = -x.inf, x.sup, -y.inf, y.sup
    tol_ = resolve(tol)
    if min(x1, x2) <= tol_ or min(y1, y2) <= tol_:
        raise DomainError(f"{y} / {x}: both intervals should contain 0 in their interior")
    denominator = x1**2 - x2**2
    if abs(x1 - x2) <= _scaled_tol(tol, x1, x2):
        raise CenteredDivisor(f"the center of the divisor {x} is 0")
    z2 = (x1 * y1 - x2 * y2) / denominator
    z3 = (x1 * y2 - x2 * y1) / denominator
    if z2 < -tol_ or z3 < -tol_:
        raise RatioConditionFailed(f"{y} / {x}: the ratio conditions for an exact quotient do not hold")
    return GClass(-max(z3, 0.0), max(z2, 0.0))


def euclid_positive(y: GClass, x: GClass, tol: Optional[float] = None) -> DivisionResult:
    """``Y = X • Z + R`` with Z and R point classes, R of minimal center.

    For ``X = [x1, x2]``, ``Y = [y1, y2]`` non-negative with ``x1 / x2 < y1 / y2``.
    """
    _require_proper("divisor", x)
    _require_proper("dividend", y)
    x1, x2, y1, y2 = x.inf, x.sup, y.inf, y.sup
    if x1 < -resolve(tol) or y1 < -resolve(tol):
        raise DomainError(f"{y} / {x}: both intervals should consist of non-negative numbers")
    if is_zero(x2 - x1, _scaled_tol(tol, x1, x2)):
        raise DegenerateDivisor(f"divisor {x} is a point, its length is 0")
    # x1 / x2 < y1 / y2
    if not x1 * y2 < y1 * x2 - _scaled_tol(tol, x1 * y2, y1 * x2):
        raise RatioConditionFailed(f"{y} / {x}: x1/x2 >= y1/y2, divide exactly instead")
    z = (y2 - y1) / (x2 - x1)
    r = (x2 * y1 - x1 * y2) / (x2 - x1)
    return DivisionResult(scalar_mul(z, X2), scalar_mul(r, X2), exact=False, method="euclid_positive")


def euclid_zero_containing(y: GClass, x: GClass, tol: Optional[float] = None) -> DivisionResult:
    """``Y = X • Z + R`` with R of minimal length, for ``X = [-x1, x2]``, ``Y = [-y1, y2]``.

    Requires x1, x2, y1, y2 > 0, ``x1 > x2``, ``x1 / x2 > y2 / y1`` and ``x1 / x2 < y1 / y2``.
    """
    _require_proper("divisor", x)
    _require_proper("dividend", y)
    x1, x2, y1, y2 = -x.inf, x.sup, -y.inf, y.sup
    tol_ = resolve(tol)
    checks = [
        ("x1 > 0", x1 > tol_),
        ("x2 > 0", x2 > tol_),
        ("y1 > 0", y1 > tol_),
        ("y2 > 0", y2 > tol_),
        ("x1 > x2", x1 - x2 > _scaled_tol(tol, x1, x2)),
        # the ratio conditions, multiplied out
        ("x1/x2 > y2/y1", x1 * y1 - x2 * y2 > _scaled_tol(tol, x1 * y1, x2 * y2)),
        ("x1/x2 < y1/y2", x2 * y1 - x1 * y2 > _scaled_tol(tol, x2 * y1, x1 * y2)),
    ]
    for inequality, holds in checks:
        if not holds:
            raise PreconditionFailed(inequality, f"{y} / {x}: precondition violated: {inequality}")
    quotient = GClass(-y2 / x1, 0.0)
    remainder = GClass(-(x1 * y1 - x2 * y2) / x1, 0.0)
    return DivisionResult(quotient, remainder, exact=False, method="euclid_zero_containing")


def remainder_for(y: GClass, x: GClass, quotient: GClass) -> GClass:
    """The remainder a given quotient leaves: ``Y - X • quotient``"""
    return sub(y, bullet(x, quotient))


def _exact(f: Callable[[GClass, GClass, Optional[float]], GClass], name: str) -> Callable[[GClass, GClass, Optional[float]], DivisionResult]:
    def division(y: GClass, x: GClass, tol: Optional[float] = None) -> DivisionResult:
        return DivisionResult(f(y, x, tol), ZERO, exact=True, method=name)

    division.__name__ = name
    return division


def divide(y: GClass, x: GClass, tol: Optional[float] = None, euclidean: bool = True) -> DivisionResult:
    """Divide `y` by `x`, exactly when possible and Euclidean otherwise.

    With ``euclidean=False`` only an exact quotient is accepted.
    """
    if not (x.is_proper and y.is_proper):
        raise UnsupportedDivision(f"division of {y} by {x}: only proper classes can be divided")
    tol_ = resolve(tol)
    attempts: List[Callable[[GClass, GClass, Optional[float]], DivisionResult]]
    if x.inf >= -tol_ and y.inf >= -tol_:
        attempts = [_exact(div_exact_positive, "exact_positive"), euclid_positive]
    elif x.inf < -tol_ < tol_ < x.sup and y.inf < -tol_ < tol_ < y.sup:
        attempts = [_exact(div_exact_zero_containing, "exact_zero_containing"), euclid_zero_containing]
    else:
        raise UnsupportedDivision(f"division of {y} by {x} is not supported for this combination of signs")
    if not euclidean:
        attempts = attempts[:1]

    failures = []
    for attempt in attempts:
        try:
            result = attempt(y, x, tol)
        except (RatioConditionFailed, PreconditionFailed, DomainError) as e:
            logger.info("divide: %s does not apply to %s / %s: %s", getattr(attempt, "__name__", attempt), y, x, e)
            failures.append(str(e))
            continue
        logger.info("divide: %s / %s via %s", y, x, result.method)
        return result
    raise UnsupportedDivision(f"no division of {y} by {x} applies: " + "; ".join(failures))
