"""Linear programming over interval classes with an extended simplex method.

The problem is ``max Σ c_i X_i`` subject to ``A X (<= or =) B`` where ``A`` and ``c`` are real and the
right-hand sides ``B_j`` are non-negative interval classes. Pivoting follows the classical tableau
method, except for the choice of the leaving row: it minimises ``l(B_j) / a_jk`` (length of the
right-hand side over the pivot column entry), which is what keeps every right-hand side a positive
class after the row operations.

Ties on that ratio are broken by ``inf(B_j) / a_jk`` (the classical ratio test), then by the lowest
row index. Entering columns are chosen by the largest positive objective coefficient, lowest index first.
"""
import json
import logging
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np
import pydantic
from typing_extensions import Literal

from .core import ZERO, GClass, add, length, scalar_mul, sign_of, sub, sum_classes
from .errors import DomainError, Infeasible, NumericalPivot
from .utils import resolve

logger = logging.getLogger("kaucher.linprog")

Sense = Literal["<=", "="]
Status = Literal["optimal", "unbounded", "infeasible", "iteration_limit"]


@dataclass(frozen=True)
class IntervalLP:
    A: np.ndarray
    B: List[GClass]
    c: np.ndarray
    senses: List[Sense] = field(default_factory=list)

    def __post_init__(self):
        A = np.atleast_2d(np.asarray(self.A, dtype=float))
        c = np.asarray(self.c, dtype=float)
        senses = list(self.senses) or ["<="] * A.shape[0]
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "B", list(self.B))
        object.__setattr__(self, "senses", senses)
        p, n = A.shape
        if len(self.B) != p:
            raise DomainError(f"{p} constraint rows but {len(self.B)} right-hand sides")
        if c.shape != (n,):
            raise DomainError(f"objective should have {n} coefficients, got shape {c.shape}")
        if len(senses) != p or any(s not in ("<=", "=") for s in senses):
            raise DomainError(f"senses should be '<=' or '=' for each of the {p} rows, got {senses!r}")

    @property
    def shape(self) -> Tuple[int, int]:
        return self.A.shape  # type: ignore

    def variable_names(self) -> List[str]:
        n = self.shape[1]
        slacks = [f"s{i + 1}" for i, sense in enumerate(self.senses) if sense == "<="]
        return [f"x{j + 1}" for j in range(n)] + slacks


@dataclass(frozen=True)
class Tableau:
    coefficients: np.ndarray
    rhs: List[GClass]
    objective: np.ndarray
    basis: List[int]
    iteration: int = 0
    names: List[str] = field(default_factory=list)

    def copy(self) -> "Tableau":
        return replace(self, coefficients=self.coefficients.copy(), rhs=list(self.rhs), objective=self.objective.copy(), basis=list(self.basis))

    def assignment(self) -> Dict[str, GClass]:
        """Basic variables take their right-hand side, the others are zero"""
        values = {name: ZERO for name in self.names}
        for row, column in enumerate(self.basis):
            values[self.names[column]] = self.rhs[row]
        return values


@dataclass(frozen=True)
class PivotSelection:
    kind: Literal["pivot", "no_improving_column", "unbounded"]
    row: int = -1
    col: int = -1


@dataclass
class LPSolution:
    status: Status
    assignment: Dict[str, GClass] = field(default_factory=dict)
    objective_value: GClass = ZERO
    iterations: int = 0
    trace: List[Tuple[int, int]] = field(default_factory=list)


def _check_rhs(rhs: Sequence[GClass], tol: Optional[float]):
    for j, b in enumerate(rhs):
        if not sign_of(b, _rhs_tol(b, tol)).is_nonnegative():
            raise NumericalPivot(f"right-hand side {j} = {b} is not a non-negative class")


def _rhs_tol(b: GClass, tol: Optional[float]) -> float:
    return resolve(tol) * max(1.0, abs(b.inf), abs(b.sup))


def standardize(lp: IntervalLP, tol: Optional[float] = None) -> Tableau:
    """The initial tableau: a slack column for every '<=' row, the basis made of slacks and identity columns"""
    tol_ = resolve(tol)
    for j, b in enumerate(lp.B):
        sign = sign_of(b, tol)
        if not sign.is_nonnegative():
            raise Infeasible(f"right-hand side {j} = {b} is not a non-negative class")
        if b.inf < -tol_:
            raise DomainError(f"right-hand side {j} = {b} should have a non-negative left endpoint")
    p, n = lp.shape
    slack_rows = [i for i, sense in enumerate(lp.senses) if sense == "<="]
    slacks = np.zeros((p, len(slack_rows)))
    for k, i in enumerate(slack_rows):
        slacks[i, k] = 1.0
    coefficients = np.hstack([lp.A, slacks])
    objective = np.concatenate([lp.c, np.zeros(len(slack_rows))])
    basis = []
    for i in range(p):
        if lp.senses[i] == "<=":
            basis.append(n + slack_rows.index(i))
        else:
            basis.append(_identity_column(coefficients, i, tol_))
    tableau = Tableau(coefficients, list(lp.B), objective, basis, names=lp.variable_names())
    # the objective row holds reduced costs, so basic columns start at zero
    for row, column in enumerate(basis):
        if objective[column] != 0:
            tableau = _eliminate_objective(tableau, row, column)
    logger.info("standardize: %d rows, %d columns, basis %r", p, coefficients.shape[1], basis)
    return tableau


def _identity_column(coefficients: np.ndarray, row: int, tol: float) -> int:
    unit = np.zeros(coefficients.shape[0])
    unit[row] = 1.0
    for column in range(coefficients.shape[1]):
        if np.allclose(coefficients[:, column], unit, atol=tol, rtol=0):
            return column
    raise DomainError(f"equality row {row} has no identity column to start the basis from")


def _eliminate_objective(t: Tableau, row: int, column: int) -> Tableau:
    objective = t.objective - t.objective[column] * t.coefficients[row]
    return replace(t, objective=objective)


def select_pivot(t: Tableau, tol: Optional[float] = None) -> PivotSelection:
    tol_ = resolve(tol)
    candidates = np.flatnonzero(t.objective > tol_)
    if len(candidates) == 0:
        return PivotSelection("no_improving_column")
    # argmax returns the lowest index among equal maxima
    col = int(candidates[np.argmax(t.objective[candidates])])
    column = t.coefficients[:, col]
    rows = [j for j in range(len(t.rhs)) if column[j] > tol_]
    if not rows:
        return PivotSelection("unbounded", col=col)
    ratios = {j: length(t.rhs[j]) / column[j] for j in rows}
    best = min(ratios.values())
    tied = [j for j in rows if ratios[j] - best <= tol_ * max(1.0, abs(best))]
    row = min(tied, key=lambda j: (t.rhs[j].inf / column[j], j))
    return PivotSelection("pivot", row=row, col=col)


def apply_pivot(t: Tableau, row: int, col: int, tol: Optional[float] = None) -> Tableau:
    """Make `col` basic in `row`: the pivot row is divided by the pivot, the others get ``l_j - a_jk l_i``."""
    pivot = t.coefficients[row, col]
    if pivot <= resolve(tol):
        raise NumericalPivot(f"pivot a[{row},{col}] = {pivot!r} is too small")
    coefficients = t.coefficients.copy()
    rhs = list(t.rhs)
    coefficients[row] = coefficients[row] / pivot
    rhs[row] = scalar_mul(1 / pivot, rhs[row])
    for j in range(len(rhs)):
        if j == row:
            continue
        factor = coefficients[j, col]
        if factor != 0:
            coefficients[j] = coefficients[j] - factor * coefficients[row]
            rhs[j] = sub(rhs[j], scalar_mul(factor, rhs[row]))
    objective = t.objective - t.objective[col] * coefficients[row]
    basis = list(t.basis)
    basis[row] = col
    _check_rhs(rhs, tol)
    return replace(t, coefficients=coefficients, rhs=rhs, objective=objective, basis=basis, iteration=t.iteration + 1)


def objective(lp: IntervalLP, assignment: Dict[str, GClass]) -> GClass:
    n = lp.shape[1]
    return sum_classes(scalar_mul(lp.c[j], assignment[f"x{j + 1}"]) for j in range(n))


def feasibility_residual(lp: IntervalLP, assignment: Dict[str, GClass]) -> float:
    """Largest endpoint residual of ``A X - B`` (slacks included)"""
    p, n = lp.shape
    worst = 0.0
    slack = 0
    for i in range(p):
        lhs = sum_classes(scalar_mul(lp.A[i, j], assignment[f"x{j + 1}"]) for j in range(n))
        if lp.senses[i] == "<=":
            slack += 1
            lhs = add(lhs, assignment[f"s{slack}"])
        residual = sub(lhs, lp.B[i])
        worst = max(worst, abs(residual.inf), abs(residual.sup))
    return worst


def solve(lp: IntervalLP, max_iter: int = 100, tol: Optional[float] = None) -> LPSolution:
    try:
        t = standardize(lp, tol)
    except Infeasible as e:
        logger.info("solve: infeasible: %s", e)
        return LPSolution("infeasible")
    trace: List[Tuple[int, int]] = []
    status: Status = "iteration_limit"
    while t.iteration < max_iter:
        selection = select_pivot(t, tol)
        if selection.kind == "no_improving_column":
            status = "optimal"
            break
        if selection.kind == "unbounded":
            logger.info("solve: column %d is unbounded", selection.col)
            status = "unbounded"
            break
        logger.info("solve: iteration %d, pivot on row %d column %d", t.iteration, selection.row, selection.col)
        t = apply_pivot(t, selection.row, selection.col, tol)
        trace.append((selection.row, selection.col))
        logger.debug("solve: rhs %s, objective row %r", [str(b) for b in t.rhs], t.objective)
    else:
        if select_pivot(t, tol).kind == "no_improving_column":
            status = "optimal"
    assignment = t.assignment()
    return LPSolution(status, assignment, objective(lp, assignment), t.iteration, trace)


# JSON problem and solution formats


class ClassModel(pydantic.BaseModel):
    inf: float
    sup: float

    def to_class(self) -> GClass:
        return GClass(self.inf, self.sup)

    @classmethod
    def from_class(cls, a: GClass) -> "ClassModel":
        return cls(inf=a.inf, sup=a.sup)


class ConstraintModel(pydantic.BaseModel):
    coeffs: List[float]
    sense: Sense = "<="
    rhs: ClassModel


class ProblemModel(pydantic.BaseModel):
    maximize: List[float]
    constraints: List[ConstraintModel]
    max_iter: int = 100

    @pydantic.model_validator(mode="after")
    def _check_shape(self) -> "ProblemModel":
        for i, constraint in enumerate(self.constraints):
            if len(constraint.coeffs) != len(self.maximize):
                raise ValueError(f"constraint {i} has {len(constraint.coeffs)} coefficients, the objective has {len(self.maximize)}")
        return self

    def to_lp(self) -> IntervalLP:
        return IntervalLP(
            A=np.array([constraint.coeffs for constraint in self.constraints], dtype=float),
            B=[constraint.rhs.to_class() for constraint in self.constraints],
            c=np.array(self.maximize, dtype=float),
            senses=[constraint.sense for constraint in self.constraints],
        )


class SolutionModel(pydantic.BaseModel):
    status: Status
    variables: Dict[str, ClassModel]
    objective: ClassModel
    iterations: int
    trace: List[Tuple[int, int]]

    @classmethod
    def from_solution(cls, solution: LPSolution) -> "SolutionModel":
        return cls(
            status=solution.status,
            variables={name: ClassModel.from_class(value) for name, value in solution.assignment.items()},
            objective=ClassModel.from_class(solution.objective_value),
            iterations=solution.iterations,
            trace=list(solution.trace),
        )


def load_problem(source: Union[str, Path]) -> ProblemModel:
    """Read a problem from a JSON file, or from a JSON string"""
    if isinstance(source, Path) or not source.lstrip().startswith("{"):
        source = Path(source).read_text(encoding="utf-8")
    try:
        return ProblemModel.model_validate_json(source)
    except pydantic.ValidationError as e:
        raise DomainError(f"invalid problem: {e}") from e


def dump_solution(solution: LPSolution) -> str:
    return json.dumps(SolutionModel.from_solution(solution).model_dump(), indent=2) + "\n"
