"""Generalized interval arithmetic

 * core -- the group of interval classes, its norm and neighborhoods
 * algebra4 -- the algebra A4 intervals embed into
 * embedding -- the embedding and the bullet product it induces
 * division -- exact and Euclidean division
 * analysis -- polynomials, continuity and differentiability probes
 * linprog -- the simplex method with interval right-hand sides

"""

from . import _version
from . import logging  # noqa: F401

__version__ = _version.__version__
from .algebra4 import A4Element, a4_inverse, a4_is_invertible, a4_leq, a4_mul
from .analysis import continuity_probe, diff_probe, poly_eval, q2
from .core import (
    X1,
    X2,
    ZERO,
    GClass,
    ProperInterval,
    add,
    canonical_pair,
    class_of_pair,
    distance,
    get_tolerance,
    interval,
    neg,
    norm,
    scalar_mul,
    set_tolerance,
    sign_of,
    sub,
    to_class,
    tolerance,
)
from .division import DivisionResult, divide
from .embedding import bullet, phi, phi_bar, psi
from .linprog import IntervalLP, LPSolution, solve
from .text import evaluate, format_class, parse_class

__all__ = [
    "__version__",
    "GClass",
    "ProperInterval",
    "ZERO",
    "X1",
    "X2",
    "interval",
    "to_class",
    "class_of_pair",
    "canonical_pair",
    "add",
    "neg",
    "sub",
    "scalar_mul",
    "sign_of",
    "norm",
    "distance",
    "get_tolerance",
    "set_tolerance",
    "tolerance",
    "A4Element",
    "a4_mul",
    "a4_inverse",
    "a4_is_invertible",
    "a4_leq",
    "phi",
    "phi_bar",
    "psi",
    "bullet",
    "DivisionResult",
    "divide",
    "q2",
    "poly_eval",
    "continuity_probe",
    "diff_probe",
    "IntervalLP",
    "LPSolution",
    "solve",
    "evaluate",
    "format_class",
    "parse_class",
]
