"""Embedding interval classes into A4, and the product it induces.

Working with intervals goes in three steps: translate into A4 (:func:`lift`), compute there, and
come back (:func:`lower`). ``lift`` is ``phi_bar``, the odd extension of the interval embedding
``phi``; ``lower`` is ``psi``, which reads the class off the R-invariant key ``(x1 - x3, x2 - x4)``.
The :func:`bullet` product is defined on every pair of classes this way.
"""
import logging
from dataclasses import dataclass
from typing import Callable, Optional

from .algebra4 import A4Element, a4_mul
from .core import GClass, ProperInterval
from .errors import DomainError
from .utils import leq, resolve

logger = logging.getLogger("kaucher.embedding")


@dataclass(frozen=True)
class A4ClassKey:
    """The invariants of an R-class: ``u = x1 - x3`` and ``v = x2 - x4``"""

    u: float
    v: float


def classical_mul(x: ProperInterval, y: ProperInterval) -> ProperInterval:
    products = (x.lo * y.lo, x.lo * y.hi, x.hi * y.lo, x.hi * y.hi)
    return ProperInterval(min(products), max(products))


def phi(x: ProperInterval) -> A4Element:
    if x.lo >= 0:
        return A4Element(x.lo, x.hi, 0, 0)
    if x.hi <= 0:
        return A4Element(0, 0, -x.lo, -x.hi)
    return A4Element(0, x.hi, -x.lo, 0)


def phi_bar(a: GClass) -> A4Element:
    if a.is_proper:
        return phi(ProperInterval(a.inf, a.sup))
    # a is the class of (0, K)
    return -phi(ProperInterval(-a.inf, -a.sup))


def r_key(x: A4Element) -> A4ClassKey:
    return A4ClassKey(x.x1 - x.x3, x.x2 - x.x4)


def r_equivalent(x: A4Element, y: A4Element, tol: Optional[float] = None) -> bool:
    tol = resolve(tol)
    kx, ky = r_key(x), r_key(y)
    return abs(kx.u - ky.u) <= tol and abs(kx.v - ky.v) <= tol


def psi(x: A4Element) -> GClass:
    key = r_key(x)
    return GClass(key.u, key.v)


lift = phi_bar
lower = psi


def in_phi_bar_image(x: A4Element, tol: Optional[float] = None) -> bool:
    image = phi_bar(psi(x))
    tol = resolve(tol)
    return all(abs(p - q) <= tol for p, q in zip(image.as_tuple(), x.as_tuple()))


def through_a4(f: Callable[..., A4Element], *classes: GClass) -> GClass:
    """Apply an operation on A4 to interval classes and bring the result back"""
    return psi(f(*(phi_bar(a) for a in classes)))


def bullet(a: GClass, b: GClass) -> GClass:
    """The product of two classes, computed in A4.

    It agrees with the classical interval product unless both operands are intervals containing 0,
    in which case it returns the enclosure ``[x1 y2 + x2 y1, x2 y2 + x1 y1]``.
    """
    return through_a4(a4_mul, a, b)


def contains(outer: GClass, inner: GClass, tol: Optional[float] = None) -> bool:
    if not (outer.is_proper and inner.is_proper):
        raise DomainError(f"containment is defined between proper classes, got {outer} and {inner}")
    return leq(outer.inf, inner.inf, tol) and leq(inner.sup, outer.sup, tol)


def straddles_zero(a: GClass) -> bool:
    """True for a proper class whose interval contains 0 in its interior"""
    return a.is_proper and a.inf < 0 < a.sup


def universal_product(x: ProperInterval, y: ProperInterval) -> GClass:
    """The product :func:`bullet` gives for two intervals that both contain 0."""
    return GClass(x.lo * y.hi + x.hi * y.lo, x.hi * y.hi + x.lo * y.lo)
