"""Pairwise-comparison weighting.

Judgment matrices on the 1-9 scale, principal-eigenvector weights via power
iteration, and Saaty consistency diagnostics (lambda_max, CI, CR).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np

from .errors import (
    ConvergenceError,
    DomainError,
    MissingRandomIndexError,
    StructuralError,
)

# Random consistency indices for matrix orders 1..10 (Saaty's constants).
RANDOM_INDEX: dict[int, float] = {
    1: 0.0, 2: 0.0, 3: 0.58, 4: 0.90, 5: 1.12,
    6: 1.24, 7: 1.32, 8: 1.41, 9: 1.45, 10: 1.49,
}

SCALE_MIN = 1.0 / 9.0
SCALE_MAX = 9.0

RECIPROCITY_RTOL = 1e-9

POWER_TOL = 1e-12
POWER_MAX_ITER = 10_000

# Judgments with CR above this are conventionally considered too inconsistent;
# reported as a warning, never a hard failure.
CR_WARN_THRESHOLD = 0.1


def _default_labels(n: int) -> tuple[str, ...]:
    return tuple(f"c{i + 1}" for i in range(n))


@dataclass(frozen=True, eq=False)
class PairwiseMatrix:
    """Square reciprocal judgment matrix on the 1-9 scale.

    ``entries[i][j] > 1`` means criterion i is more important than j.
    Construction rejects structurally impossible input (non-square shape,
    non-positive entries); the reciprocity/diagonal/range invariants are
    checked separately by :func:`validate_matrix`.
    """

    entries: np.ndarray
    labels: tuple[str, ...] = ()

    def __post_init__(self):
        entries = np.asarray(self.entries, dtype=float)
        if entries.ndim != 2 or entries.shape[0] != entries.shape[1]:
            raise StructuralError(
                f"judgment matrix must be square, got shape {entries.shape}"
            )
        n = entries.shape[0]
        if n < 2:
            raise StructuralError("judgment matrix needs at least 2 criteria")
        if not np.all(np.isfinite(entries)) or np.any(entries <= 0.0):
            raise StructuralError("judgment matrix entries must be positive and finite")
        labels = tuple(str(x) for x in self.labels) if self.labels else _default_labels(n)
        if len(labels) != n:
            raise StructuralError(f"expected {n} labels, got {len(labels)}")
        entries = entries.copy()
        entries.setflags(write=False)
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "labels", labels)

    @property
    def n(self) -> int:
        return self.entries.shape[0]

    @classmethod
    def from_upper(cls, upper: Sequence[float], labels: Sequence[str] = ()) -> "PairwiseMatrix":
        """Build a full matrix from the row-major upper triangle.

        The diagonal is set to 1 and the lower triangle is completed with
        exact reciprocals, matching the usual printed form of a judgment
        matrix.
        """
        upper = [float(v) for v in upper]
        # n(n-1)/2 entries above the diagonal
        n = int(round((1 + (1 + 8 * len(upper)) ** 0.5) / 2))
        if n * (n - 1) // 2 != len(upper):
            raise StructuralError(
                f"{len(upper)} entries do not form an upper triangle of any order"
            )
        m = np.ones((n, n))
        k = 0
        for i in range(n):
            for j in range(i + 1, n):
                if upper[k] <= 0:
                    raise StructuralError("judgment matrix entries must be positive and finite")
                m[i, j] = upper[k]
                m[j, i] = 1.0 / upper[k]
                k += 1
        return cls(m, tuple(labels))


@dataclass(frozen=True)
class CellViolation:
    """One failed invariant check, located by cell."""

    row: int
    col: int
    reason: str  # "diagonal" | "reciprocity" | "range"
    message: str


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violations: tuple[CellViolation, ...]


@dataclass(frozen=True)
class WeightVector:
    """Per-criterion weights, strictly positive and summing to 1."""

    weights: tuple[float, ...]
    labels: tuple[str, ...]

    def __post_init__(self):
        weights = tuple(float(w) for w in self.weights)
        labels = tuple(str(x) for x in self.labels) if self.labels else _default_labels(len(weights))
        if len(labels) != len(weights):
            raise DomainError(f"expected {len(weights)} labels, got {len(labels)}")
        if any(not np.isfinite(w) or w <= 0.0 for w in weights):
            raise DomainError("weights must all be positive")
        total = sum(weights)
        if abs(total - 1.0) > 1e-9:
            raise DomainError(f"weights must sum to 1, got {total!r}")
        object.__setattr__(self, "weights", weights)
        object.__setattr__(self, "labels", labels)

    @classmethod
    def normalized(cls, values: Sequence[float], labels: Sequence[str] = ()) -> "WeightVector":
        """Scale positive values to sum 1."""
        arr = np.asarray(list(values), dtype=float)
        total = arr.sum()
        if not np.all(np.isfinite(arr)) or np.any(arr <= 0.0) or total <= 0.0:
            raise DomainError("weights must all be positive")
        arr = arr / total
        return cls(tuple(arr.tolist()), tuple(labels))

    def as_array(self) -> np.ndarray:
        return np.asarray(self.weights, dtype=float)

    def __getitem__(self, label: str) -> float:
        return self.weights[self.labels.index(label)]


@dataclass(frozen=True)
class ConsistencyReport:
    """Saaty consistency diagnostics for a judgment matrix."""

    lambda_max: float
    ci: float
    cr: float
    ri: float
    iterations: int
    converged: bool

    @property
    def acceptable(self) -> bool:
        """Conventional CR <= 0.1 rule; advisory only."""
        return self.cr <= CR_WARN_THRESHOLD


def validate_matrix(matrix: PairwiseMatrix) -> ValidationReport:
    """Check the diagonal, reciprocity and 1/9..9 range invariants.

    Structural problems (non-square, non-positive) are raised at matrix
    construction; everything checkable cell-by-cell lands in the report.
    """
    m = matrix.entries
    n = matrix.n
    violations: list[CellViolation] = []
    for i in range(n):
        if m[i, i] != 1.0:
            violations.append(CellViolation(
                i, i, "diagonal", f"diagonal entry ({i},{i}) is {m[i, i]!r}, must be 1"))
    for i in range(n):
        for j in range(i + 1, n):
            recip = 1.0 / m[i, j]
            if abs(m[j, i] - recip) > RECIPROCITY_RTOL * max(abs(recip), abs(m[j, i])):
                violations.append(CellViolation(
                    j, i, "reciprocity",
                    f"entry ({j},{i}) is {m[j, i]!r}, expected 1/{m[i, j]!r}"))
    lo = SCALE_MIN * (1.0 - 1e-12)
    hi = SCALE_MAX * (1.0 + 1e-12)
    for i in range(n):
        for j in range(n):
            if i != j and not (lo <= m[i, j] <= hi):
                violations.append(CellViolation(
                    i, j, "range",
                    f"entry ({i},{j}) is {m[i, j]!r}, outside [1/9, 9]"))
    return ValidationReport(ok=not violations, violations=tuple(violations))


def _require_valid(matrix: PairwiseMatrix) -> None:
    report = validate_matrix(matrix)
    if not report.ok:
        first = report.violations[0]
        raise DomainError(
            f"invalid judgment matrix ({len(report.violations)} violation(s)); "
            f"first: {first.message}",
            code=f"invalid_matrix_{first.reason}",
        )


def _power_iteration(entries: np.ndarray) -> tuple[np.ndarray, int, bool]:
    """Dominant eigenvector by power iteration with sum-normalization.

    Starts from the uniform vector; stops when the largest componentwise
    change drops below POWER_TOL.
    """
    n = entries.shape[0]
    w = np.full(n, 1.0 / n)
    for it in range(1, POWER_MAX_ITER + 1):
        nxt = entries @ w
        nxt /= nxt.sum()
        delta = float(np.max(np.abs(nxt - w)))
        w = nxt
        if delta < POWER_TOL:
            return w, it, True
    return w, POWER_MAX_ITER, False


def principal_weights(matrix: PairwiseMatrix) -> WeightVector:
    """Principal right eigenvector of the judgment matrix, sum-normalized."""
    _require_valid(matrix)
    w, iterations, converged = _power_iteration(matrix.entries)
    if not converged:
        raise ConvergenceError(
            f"power iteration did not converge within {POWER_MAX_ITER} iterations",
            last_iterate=w,
        )
    return WeightVector(tuple(w.tolist()), matrix.labels)


def consistency(
    matrix: PairwiseMatrix,
    weights: WeightVector | None = None,
    *,
    random_index: Mapping[int, float] | None = None,
) -> ConsistencyReport:
    """Consistency diagnostics for ``matrix`` at its principal weights.

    ``weights`` defaults to ``principal_weights(matrix)``. The random-index
    table covers orders up to 10; pass ``random_index`` overrides for larger
    matrices.
    """
    _require_valid(matrix)
    n = matrix.n
    w_est, iterations, converged = _power_iteration(matrix.entries)
    w = w_est if weights is None else weights.as_array()
    w = w / w.sum()
    lambda_max = float((matrix.entries @ w).sum())

    ri_table = dict(RANDOM_INDEX)
    if random_index:
        ri_table.update({int(k): float(v) for k, v in random_index.items()})

    if n <= 2:
        # 1x1 and 2x2 reciprocal matrices are consistent by construction.
        return ConsistencyReport(lambda_max, 0.0, 0.0, ri_table.get(n, 0.0),
                                 iterations, converged)
    if n not in ri_table:
        raise MissingRandomIndexError(
            f"no random index for order {n}; supply random_index overrides")
    ri = ri_table[n]
    ci = (lambda_max - n) / (n - 1)
    cr = ci / ri if ri > 0 else 0.0
    return ConsistencyReport(lambda_max, ci, cr, ri, iterations, converged)
