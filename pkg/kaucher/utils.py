import contextlib
import math
import os
import threading
from typing import Iterator, Optional

DEFAULT_TOLERANCE = float(os.environ.get("KAUCHER_TOL", "1e-12"))

# the active tolerance is per thread, so a `tolerance(...)` block never leaks into other threads
local = threading.local()
_default_tolerance = DEFAULT_TOLERANCE


def get_tolerance() -> float:
    """The absolute tolerance used for equality tests in canonicalization and sign classification."""
    return getattr(local, "tolerance", _default_tolerance)


def set_tolerance(value: float) -> None:
    """Set the process wide default tolerance (threads without a `tolerance` block use it)."""
    global _default_tolerance
    _default_tolerance = _check_tolerance(value)


@contextlib.contextmanager
def tolerance(value: float) -> Iterator[float]:
    """Use another tolerance for the current thread while inside the block"""
    previous = getattr(local, "tolerance", None)
    local.tolerance = _check_tolerance(value)
    try:
        yield local.tolerance
    finally:
        if previous is None:
            del local.tolerance
        else:
            local.tolerance = previous


def _check_tolerance(value: float) -> float:
    value = float(value)
    if not math.isfinite(value) or value < 0:
        raise ValueError(f"tolerance should be a finite non-negative number, not {value!r}")
    return value


def resolve(tol: Optional[float]) -> float:
    return get_tolerance() if tol is None else tol


def is_zero(x: float, tol: Optional[float] = None) -> bool:
    return abs(x) <= resolve(tol)


def is_close(a: float, b: float, tol: Optional[float] = None) -> bool:
    return abs(a - b) <= resolve(tol)


def leq(a: float, b: float, tol: Optional[float] = None) -> bool:
    """a <= b, allowing b to fall short by the tolerance"""
    return a <= b + resolve(tol)


def rel_close(a: float, b: float, rel: float, abs_tol: float = 0.0) -> bool:
    return abs(a - b) <= max(rel * max(abs(a), abs(b)), abs_tol)


def all_finite(*values: float) -> bool:
    return all(math.isfinite(v) for v in values)
