"""The 4-dimensional commutative associative algebra A4.

On the basis ``e1, e2, e3, e4`` the product is::

    x * y = (x1 y1 + x4 y4, x2 y2 + x3 y3, x3 y2 + x2 y3, x4 y1 + x1 y4)

so A4 splits into the two ideals spanned by ``(e1, e4)`` and ``(e2, e3)``, each a copy of the
split-complex numbers. The unit is ``e1 + e2``.
"""
import logging
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np
from typing_extensions import Literal

from .errors import DomainError, NotInvertible
from .utils import all_finite, leq, resolve

logger = logging.getLogger("kaucher.algebra4")

Shape = Literal["positive", "straddling", "negative"]


@dataclass(frozen=True)
class A4Element:
    x1: float
    x2: float
    x3: float
    x4: float

    def __post_init__(self):
        values = (float(self.x1), float(self.x2), float(self.x3), float(self.x4))
        if not all_finite(*values):
            raise DomainError(f"A4 coordinates should be finite, got {values!r}")
        for name, value in zip(("x1", "x2", "x3", "x4"), values):
            object.__setattr__(self, name, value)

    @property
    def delta(self) -> float:
        return (self.x1**2 - self.x4**2) * (self.x2**2 - self.x3**2)

    def as_tuple(self) -> Tuple[float, float, float, float]:
        return (self.x1, self.x2, self.x3, self.x4)

    def as_array(self) -> np.ndarray:
        return np.array(self.as_tuple())

    def __mul__(self, other: "A4Element") -> "A4Element":
        return a4_mul(self, other)

    def __add__(self, other: "A4Element") -> "A4Element":
        return a4_linear(1.0, self, 1.0, other)

    def __sub__(self, other: "A4Element") -> "A4Element":
        return a4_linear(1.0, self, -1.0, other)

    def __neg__(self) -> "A4Element":
        return A4Element(-self.x1, -self.x2, -self.x3, -self.x4)

    def __rmul__(self, alpha: float) -> "A4Element":
        return a4_linear(alpha, self, 0.0, ZERO)

    def __str__(self):
        from .text import format_a4

        return format_a4(self)


ZERO = A4Element(0, 0, 0, 0)
UNIT = A4Element(1, 1, 0, 0)
E1 = A4Element(1, 0, 0, 0)
E2 = A4Element(0, 1, 0, 0)
E3 = A4Element(0, 0, 1, 0)
E4 = A4Element(0, 0, 0, 1)


def a4_mul(x: A4Element, y: A4Element) -> A4Element:
    return A4Element(
        x.x1 * y.x1 + x.x4 * y.x4,
        x.x2 * y.x2 + x.x3 * y.x3,
        x.x3 * y.x2 + x.x2 * y.x3,
        x.x4 * y.x1 + x.x1 * y.x4,
    )


def a4_linear(alpha: float, x: A4Element, beta: float, y: A4Element) -> A4Element:
    return A4Element(
        alpha * x.x1 + beta * y.x1,
        alpha * x.x2 + beta * y.x2,
        alpha * x.x3 + beta * y.x3,
        alpha * x.x4 + beta * y.x4,
    )


def _singular_threshold(x: A4Element, tol: Optional[float]) -> float:
    scale = max(abs(v) for v in x.as_tuple())
    return resolve(tol) * max(1.0, scale**2)


def a4_is_invertible(x: A4Element, tol: Optional[float] = None) -> bool:
    threshold = _singular_threshold(x, tol)
    return abs(x.x1**2 - x.x4**2) > threshold and abs(x.x2**2 - x.x3**2) > threshold


def a4_inverse(x: A4Element, tol: Optional[float] = None) -> A4Element:
    """The inverse, ``x * a4_inverse(x) == UNIT``.

    The (x1, x4) and (x2, x3) blocks invert independently: ``(a, b)^-1 = (a, -b) / (a^2 - b^2)``.
    """
    if not a4_is_invertible(x, tol):
        raise NotInvertible(f"{x} is not invertible (delta = {x.delta!r})")
    d14 = x.x1**2 - x.x4**2
    d23 = x.x2**2 - x.x3**2
    return A4Element(x.x1 / d14, x.x2 / d23, -x.x3 / d23, -x.x4 / d14)


def a4_shapes(x: A4Element, tol: Optional[float] = None) -> Tuple[Shape, ...]:
    """The zero-patterns `x` matches: (•,•,0,0), (0,•,•,0) and (0,0,•,•)

    An element with more zeros (like ``(0, 2, 0, 0)``) matches several.
    """
    zero = [abs(v) <= resolve(tol) for v in x.as_tuple()]
    shapes = []
    if zero[2] and zero[3]:
        shapes.append("positive")
    if zero[0] and zero[3]:
        shapes.append("straddling")
    if zero[0] and zero[1]:
        shapes.append("negative")
    return tuple(shapes)  # type: ignore


def a4_leq(x: A4Element, y: A4Element, tol: Optional[float] = None) -> Optional[bool]:
    """The partial order on images of intervals.

    Returns True/False when the pair of shapes is one the order is defined for, and None when the
    elements are not comparable. The rules are tried in order, the first whose shapes match decides.
    """
    x_shapes, y_shapes = a4_shapes(x, tol), a4_shapes(y, tol)
    for left, right in _ORDER_RULES:
        if left in x_shapes and right in y_shapes:
            return _ORDER_RULES[(left, right)](x, y, tol)
    return None


_ORDER_RULES = {
    ("positive", "positive"): lambda x, y, tol: leq(y.x1, x.x1, tol) and leq(x.x2, y.x2, tol),
    ("positive", "straddling"): lambda x, y, tol: leq(x.x2, y.x2, tol),
    ("straddling", "straddling"): lambda x, y, tol: leq(x.x3, y.x3, tol) and leq(x.x2, y.x2, tol),
    ("negative", "straddling"): lambda x, y, tol: leq(x.x3, y.x3, tol),
    ("negative", "negative"): lambda x, y, tol: leq(x.x3, y.x3, tol) and leq(y.x4, x.x4, tol),
}
