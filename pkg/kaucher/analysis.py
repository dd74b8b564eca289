"""Continuity and differentiability of functions on interval classes, checked by sampling.

The probes do not prove anything: they evaluate a function on a documented grid of points around
a base class and report what the samples show. Grid points are independent, so an
:class:`concurrent.futures.Executor` can be passed to evaluate them in parallel; results are reduced
in grid order, which keeps reports identical whatever the evaluation order.
"""
import csv
import io
import logging
import math
from concurrent.futures import Executor
from dataclasses import dataclass, field
from typing import Callable, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .core import ZERO, GClass, X2, add, basis_coordinates, distance, norm, scalar_mul, sub
from .embedding import bullet
from .errors import DomainError
from .text import format_number
from .utils import get_tolerance, tolerance

logger = logging.getLogger("kaucher.analysis")

ClassFunction = Callable[[GClass], GClass]


def identity(a: GClass) -> GClass:
    return a


def q2(a: GClass) -> GClass:
    """The square of the interval, taken on its canonical representative.

    ``[a, b] -> [a², b²]`` when ``0 <= a``, ``[b², a²]`` when ``b <= 0`` and ``[0, max(a², b²)]``
    otherwise; the class of ``(0, K)`` has the same square as the class of ``(K, 0)``.
    """
    lo, hi = (a.inf, a.sup) if a.is_proper else (-a.inf, -a.sup)
    if lo >= 0:
        return GClass(lo**2, hi**2)
    if hi <= 0:
        return GClass(hi**2, lo**2)
    return GClass(0.0, max(lo**2, hi**2))


def power(a: GClass, n: int) -> GClass:
    """``a`` to the power `n` under the bullet product, with ``a⁰ = X2``"""
    if n < 0:
        raise DomainError(f"power should be non-negative, not {n!r}")
    result = X2
    for _ in range(n):
        result = bullet(a, result)
    return result


def poly_eval(coeffs: Sequence[float], x: GClass) -> GClass:
    """``a0 X2 + a1 X + a2 X² + ...`` for ``coeffs = (a0, a1, a2, ...)``"""
    total = ZERO
    monomial = X2
    for i, coefficient in enumerate(coeffs):
        if i > 0:
            monomial = bullet(x, monomial)
        total = add(total, scalar_mul(coefficient, monomial))
    return total


def polynomial(coeffs: Sequence[float]) -> ClassFunction:
    coeffs = tuple(coeffs)

    def f(x: GClass) -> GClass:
        return poly_eval(coeffs, x)

    return f


def components(f: ClassFunction) -> Tuple[Callable[[GClass], float], Callable[[GClass], float]]:
    """The real functions f1, f2 with ``f(X) = f1(X) X1 + f2(X) X2``"""

    def f1(x: GClass) -> float:
        return basis_coordinates(f(x))[0]

    def f2(x: GClass) -> float:
        return basis_coordinates(f(x))[1]

    return f1, f2


def unit_direction(theta: float) -> GClass:
    """The direction at angle `theta` in the (Δinf, Δsup) plane, scaled to norm 1"""
    d = GClass(math.cos(theta), math.sin(theta))
    return scalar_mul(1 / norm(d), d)


def sector_directions(theta_lo: float, theta_hi: float, count: int) -> List[GClass]:
    """`count` unit directions with angles spread over the open sector (theta_lo, theta_hi)"""
    step = (theta_hi - theta_lo) / count
    return [unit_direction(theta_lo + (k + 0.5) * step) for k in range(count)]


def circle_directions(count: int = 64) -> List[GClass]:
    return [unit_direction(2 * math.pi * k / count) for k in range(count)]


@dataclass(frozen=True)
class SamplingGrid:
    """Where :func:`continuity_probe` looks: points at `fractions` of the candidate radius along
    `directions`, for candidate radii ``eps * ratio**k``, ``k = 0 .. steps``."""

    directions: Tuple[GClass, ...] = field(default_factory=lambda: tuple(circle_directions(64)))
    fractions: Tuple[float, ...] = (0.25, 0.5, 0.75, 0.999)
    ratio: float = 0.5
    steps: int = 40

    def ladder(self, eps: float) -> List[float]:
        return [eps * self.ratio**k for k in range(self.steps + 1)]

    def points(self, x0: GClass, eta: float) -> List[GClass]:
        return [add(x0, scalar_mul(fraction * eta, d)) for d in self.directions for fraction in self.fractions]


@dataclass(frozen=True)
class ContinuityResult:
    eps: float
    eta: Optional[float]
    samples: int

    @property
    def found(self) -> bool:
        return self.eta is not None


def _map(f: Callable, items: Iterable, executor: Optional[Executor]) -> list:
    if executor is None:
        return [f(item) for item in items]
    # the tolerance is per thread, workers get the caller's
    tol = get_tolerance()

    def call(item):
        with tolerance(tol):
            return f(item)

    return list(executor.map(call, items))


def continuity_probe(
    f: ClassFunction, x0: GClass, eps: float, grid: Optional[SamplingGrid] = None, executor: Optional[Executor] = None
) -> ContinuityResult:
    """The largest η on the grid's ladder for which every sample within η of `x0` maps within `eps` of ``f(x0)``."""
    if eps <= 0:
        raise DomainError(f"eps should be positive, not {eps!r}")
    grid = grid or SamplingGrid()
    fx0 = f(x0)
    samples = 0

    def gap(x: GClass) -> float:
        return distance(f(x), fx0)

    for eta in grid.ladder(eps):
        points = grid.points(x0, eta)
        samples += len(points)
        inside = [x for x in points if distance(x, x0) < eta]
        if all(g < eps for g in _map(gap, inside, executor)):
            logger.info("continuity at %s for eps=%r: eta=%r (%d samples)", x0, eps, eta, samples)
            return ContinuityResult(eps, eta, samples)
        logger.debug("continuity at %s for eps=%r: eta=%r fails", x0, eps, eta)
    logger.info("continuity at %s for eps=%r: no eta found", x0, eps)
    return ContinuityResult(eps, None, samples)


class DifferentialCandidate:
    """The linear map ``X -> 2 X0 • X``, candidate differential of the square at X0"""

    def __init__(self, x0: GClass):
        self.x0 = x0

    def __call__(self, x: GClass) -> GClass:
        return scalar_mul(2.0, bullet(self.x0, x))

    def is_linear_on(self, a: GClass, b: GClass, alpha: float = 2.5, tol: float = 1e-9) -> bool:
        """Additivity and homogeneity on `a` and `b`"""
        additive = distance(self(add(a, b)), add(self(a), self(b))) <= tol
        homogeneous = distance(self(scalar_mul(alpha, a)), scalar_mul(alpha, self(a))) <= tol
        return additive and homogeneous

    def __repr__(self):
        return f"DifferentialCandidate({self.x0})"


def differential_candidate(x0: GClass) -> DifferentialCandidate:
    return DifferentialCandidate(x0)


@dataclass(frozen=True)
class ProbeReport:
    radii: List[float]
    worst_ratio: List[float]
    witness: List[GClass]

    def __post_init__(self):
        if not (len(self.radii) == len(self.worst_ratio) == len(self.witness)):
            raise ValueError("radii, worst_ratio and witness should have equal length")

    def to_csv(self) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["radius", "worst_ratio", "witness_inf", "witness_sup"])
        for radius, ratio, witness in zip(self.radii, self.worst_ratio, self.witness):
            writer.writerow([format_number(radius), format_number(ratio), format_number(witness.inf), format_number(witness.sup)])
        return buffer.getvalue()


def geometric_radii(largest: float = 1e-2, smallest: float = 1e-6, count: int = 5) -> List[float]:
    return [float(r) for r in np.geomspace(largest, smallest, count)]


def diff_probe(
    f: ClassFunction,
    x0: GClass,
    linear: ClassFunction,
    radii: Optional[Sequence[float]] = None,
    directions: Optional[Sequence[GClass]] = None,
    executor: Optional[Executor] = None,
) -> ProbeReport:
    """For every radius t, the largest ``||f(X) - f(X0) - L(X - X0)|| / ||X - X0||`` over ``X = X0 + t d``."""
    radii = list(geometric_radii() if radii is None else radii)
    directions = list(circle_directions(64) if directions is None else directions)
    if any(t <= 0 for t in radii) or any(a <= b for a, b in zip(radii, radii[1:])):
        raise DomainError(f"radii should be positive and strictly decreasing, got {radii!r}")
    if not directions:
        raise DomainError("need at least one direction")
    fx0 = f(x0)

    def ratio(x: GClass) -> float:
        step = sub(x, x0)
        residual = sub(sub(f(x), fx0), linear(step))
        return norm(residual) / norm(step)

    worst: List[float] = []
    witnesses: List[GClass] = []
    for t in radii:
        points = [add(x0, scalar_mul(t, d)) for d in directions]
        ratios = _map(ratio, points, executor)
        index = int(np.argmax(ratios))
        worst.append(float(ratios[index]))
        witnesses.append(points[index])
        logger.debug("diff_probe at %s: radius %r, worst ratio %r at %s", x0, t, ratios[index], points[index])
    return ProbeReport(radii, worst, witnesses)
