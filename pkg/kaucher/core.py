"""Intervals and the group of interval classes.

Pairs of classical intervals ``(x, y)`` are identified when ``x + t == y + z`` for ``(z, t)``.
Every class is stored by its invariant coordinates ``(inf, sup) = (x.lo - y.lo, x.hi - y.hi)``, which
turns the quotient construction into componentwise arithmetic on the plane:

 * ``inf < sup`` -- the class of ``(A, 0)``, a *positive* class
 * ``inf > sup`` -- the class of ``(0, A)``, a *negative* class
 * ``inf == sup`` -- the class of a point ``(α, 0)``

Note that multiplication by a negative scalar is componentwise too, so it flips a positive class into a
negative one, unlike classical interval scaling which swaps the endpoints.
"""
import logging
import math
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np
from typing_extensions import Literal

from .errors import DomainError, ImproperEndpoints
from .utils import get_tolerance, is_zero, leq, resolve, set_tolerance, tolerance  # noqa: F401

logger = logging.getLogger("kaucher.core")

SignKind = Literal["positive", "negative", "scalar", "zero"]
Point = Tuple[float, float]


@dataclass(frozen=True)
class ProperInterval:
    """A classical closed interval ``[lo, hi]`` with ``lo <= hi``"""

    lo: float
    hi: float

    def __post_init__(self):
        lo, hi = float(self.lo), float(self.hi)
        if not (math.isfinite(lo) and math.isfinite(hi)):
            raise ImproperEndpoints(f"interval endpoints should be finite, got [{lo!r}, {hi!r}]")
        if lo > hi:
            raise ImproperEndpoints(f"left endpoint {lo!r} is larger than right endpoint {hi!r}")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    @property
    def width(self) -> float:
        return self.hi - self.lo

    @property
    def midpoint(self) -> float:
        return (self.hi + self.lo) / 2

    def is_point(self, tol: Optional[float] = None) -> bool:
        return is_zero(self.width, tol)

    def contains_point(self, x: float) -> bool:
        return self.lo <= x <= self.hi

    def contains(self, other: "ProperInterval") -> bool:
        return self.lo <= other.lo and other.hi <= self.hi

    def __add__(self, other: "ProperInterval") -> "ProperInterval":
        return ProperInterval(self.lo + other.lo, self.hi + other.hi)


@dataclass(frozen=True)
class GClass:
    """An element of the group of interval classes, in canonical coordinates.

    There is no ordering constraint between `inf` and `sup`; see the module docstring.
    """

    inf: float
    sup: float

    def __post_init__(self):
        inf, sup = float(self.inf), float(self.sup)
        if not (math.isfinite(inf) and math.isfinite(sup)):
            raise DomainError(f"class coordinates should be finite, got ({inf!r}, {sup!r})")
        object.__setattr__(self, "inf", inf)
        object.__setattr__(self, "sup", sup)

    @property
    def is_proper(self) -> bool:
        return self.inf <= self.sup

    def __add__(self, other: "GClass") -> "GClass":
        return add(self, other)

    def __sub__(self, other: "GClass") -> "GClass":
        return sub(self, other)

    def __neg__(self) -> "GClass":
        return neg(self)

    def __rmul__(self, alpha: float) -> "GClass":
        return scalar_mul(alpha, self)

    def __str__(self):
        from .text import format_class

        return format_class(self)


ZERO = GClass(0.0, 0.0)
# basis of the vector space: every class is u1 * X1 + u2 * X2
X1 = GClass(0.0, 1.0)
X2 = GClass(1.0, 1.0)


@dataclass(frozen=True)
class SignClass:
    kind: SignKind
    alpha: float = 0.0

    @property
    def is_positive(self) -> bool:
        return self.kind == "positive"

    @property
    def is_negative(self) -> bool:
        return self.kind == "negative"

    def is_nonnegative(self) -> bool:
        """Positive, Zero, or a point class with a non-negative value"""
        return self.kind in ("positive", "zero") or (self.kind == "scalar" and self.alpha >= 0)

    def __str__(self):
        if self.kind == "scalar":
            return f"scalar({self.alpha!r})"
        return self.kind


@dataclass(frozen=True)
class Parallelogram:
    vertices: Tuple[Point, Point, Point, Point]

    def is_parallelogram(self, tol: float = 1e-12) -> bool:
        """Opposite sides are parallel and of equal length"""
        a, b, c, d = (np.array(v) for v in self.vertices)
        return bool(np.allclose(b - a, c - d, atol=tol) and np.allclose(d - a, c - b, atol=tol))

    def contains(self, point: Point) -> bool:
        """True if `point` lies strictly inside."""
        return bool(self.contains_points(np.array([point]))[0])

    def contains_points(self, points: np.ndarray) -> np.ndarray:
        """Vectorized strict interior test for an (n, 2) array of points."""
        points = np.asarray(points, dtype=float)
        vertices = np.array(self.vertices, dtype=float)
        edges = np.roll(vertices, -1, axis=0) - vertices
        orientation = np.sign(edges[0, 0] * edges[1, 1] - edges[0, 1] * edges[1, 0])
        inside = np.ones(len(points), dtype=bool)
        for vertex, edge in zip(vertices, edges):
            rel = points - vertex
            cross = edge[0] * rel[:, 1] - edge[1] * rel[:, 0]
            inside &= orientation * cross > 0
        return inside


def interval(lo: float, hi: float) -> ProperInterval:
    return ProperInterval(lo, hi)


def to_class(x: ProperInterval) -> GClass:
    """The class of ``(X, 0)``"""
    return GClass(x.lo, x.hi)


def class_of_pair(x: ProperInterval, y: ProperInterval) -> GClass:
    """The class of the formal difference ``(x, y)``"""
    return GClass(x.lo - y.lo, x.hi - y.hi)


def canonical_pair(a: GClass, tol: Optional[float] = None) -> Tuple[ProperInterval, ProperInterval]:
    """The canonical representative: ``(A, 0)`` for positive and point classes, ``(0, A)`` for negative ones."""
    zero = ProperInterval(0.0, 0.0)
    sign = sign_of(a, tol)
    if sign.kind in ("scalar", "zero"):
        return ProperInterval(sign.alpha, sign.alpha), zero
    if sign.is_positive:
        return ProperInterval(a.inf, a.sup), zero
    return zero, ProperInterval(-a.inf, -a.sup)


def add(a: GClass, b: GClass) -> GClass:
    return GClass(a.inf + b.inf, a.sup + b.sup)


def neg(a: GClass) -> GClass:
    return GClass(-a.inf, -a.sup)


def sub(a: GClass, b: GClass) -> GClass:
    return GClass(a.inf - b.inf, a.sup - b.sup)


def scalar_mul(alpha: float, a: GClass) -> GClass:
    # componentwise for every sign of alpha: (-1) * (A, 0) is (0, A)
    return GClass(alpha * a.inf, alpha * a.sup)


def sign_of(a: GClass, tol: Optional[float] = None) -> SignClass:
    tol = resolve(tol)
    if abs(a.inf - a.sup) <= tol:
        if abs(a.inf) <= tol and abs(a.sup) <= tol:
            return SignClass("zero")
        return SignClass("scalar", a.inf)
    if a.inf < a.sup:
        return SignClass("positive")
    return SignClass("negative")


def length(a: GClass) -> float:
    return abs(a.sup - a.inf)


def center(a: GClass) -> float:
    return (a.inf + a.sup) / 2


def basis_coordinates(a: GClass) -> Tuple[float, float]:
    """Coordinates ``(u1, u2)`` with ``a == u1 * X1 + u2 * X2``"""
    return a.sup - a.inf, a.inf


def from_basis_coordinates(u1: float, u2: float) -> GClass:
    return add(scalar_mul(u1, X1), scalar_mul(u2, X2))


def norm(a: GClass) -> float:
    return length(a) + abs(center(a))


def distance(a: GClass, b: GClass) -> float:
    return norm(sub(a, b))


def close(a: GClass, b: GClass, tol: Optional[float] = None) -> bool:
    tol = resolve(tol)
    return abs(a.inf - b.inf) <= tol and abs(a.sup - b.sup) <= tol


def geq(a: GClass, b: GClass, tol: Optional[float] = None) -> bool:
    """``a >= b`` iff ``a - b`` is the class of some ``(K, 0)``"""
    return sign_of(sub(a, b), tol).is_nonnegative()


def is_nonnegative(a: GClass, tol: Optional[float] = None) -> bool:
    return geq(a, ZERO, tol)


def ball_contains(x0: GClass, eps: float, x: GClass) -> bool:
    """Membership of `x` in the open ball of radius `eps` around `x0`"""
    if eps <= 0:
        raise DomainError(f"ball radius should be positive, not {eps!r}")
    return distance(x, x0) < eps


def neighborhood_vertices(x0: GClass, eps: float, tol: Optional[float] = None) -> Parallelogram:
    """The ball around a positive class, drawn in the endpoint plane, is this parallelogram."""
    if eps <= 0:
        raise DomainError(f"neighborhood radius should be positive, not {eps!r}")
    if not sign_of(x0, tol).is_positive or not leq(0.0, x0.inf, tol):
        raise DomainError(f"neighborhoods are drawn for positive classes with inf >= 0, not {x0!r}")
    a, b = x0.inf, x0.sup
    return Parallelogram(
        (
            (a - eps, b - eps),
            (a + eps / 2, b - eps / 2),
            (a + eps, b + eps),
            (a - eps / 2, b + eps / 2),
        )
    )


def limit_of(sequence: Sequence[GClass], tol: float = 1e-9, tail: int = 4) -> GClass:
    """Estimate the limit of a Cauchy sequence of classes.

    The last `tail` elements should be within `tol` of each other; the last one is returned.
    """
    if len(sequence) < 2:
        raise DomainError("need at least two elements to judge convergence")
    window: List[GClass] = list(sequence[-tail:])
    spread = max(distance(p, q) for p in window for q in window)
    if spread > tol:
        raise DomainError(f"sequence is not Cauchy within {tol!r}: its tail spreads over {spread!r}")
    return window[-1]


def sum_classes(classes: Iterable[GClass]) -> GClass:
    total = ZERO
    for a in classes:
        total = add(total, a)
    return total
