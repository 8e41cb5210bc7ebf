"""Impact-dimension analysis.

Pearson correlations, a cyclic Jacobi eigensolver, principal-component
loadings with Kaiser retention, varimax rotation, and variance-explained
reporting with display-level loading suppression.
"""

from __future__ import annotations

from dataclasses import dataclass
import numpy as np

from .errors import ConvergenceError, DomainError, StructuralError

JACOBI_OFF_TOL = 1e-12
JACOBI_MAX_SWEEPS = 100

VARIMAX_TOL = 1e-8
VARIMAX_MAX_ITER = 1000

SUPPRESSION_DEFAULT = 0.5


@dataclass(frozen=True, eq=False)
class DataMatrix:
    """Observations (rows) by variables (columns), no missing cells."""

    values: np.ndarray
    variable_labels: tuple[str, ...] = ()

    def __post_init__(self):
        values = np.asarray(self.values, dtype=float)
        if values.ndim != 2:
            raise StructuralError(f"data must be 2-dimensional, got shape {values.shape}")
        rows, cols = values.shape
        if rows < 3 or cols < 2:
            raise DomainError(f"need at least 3 observations and 2 variables, got {rows}x{cols}")
        if not np.all(np.isfinite(values)):
            raise DomainError("data contains missing or non-finite cells")
        labels = (tuple(str(x) for x in self.variable_labels)
                  or tuple(f"v{i + 1}" for i in range(cols)))
        if len(labels) != cols:
            raise StructuralError(f"expected {cols} variable labels, got {len(labels)}")
        values = values.copy()
        values.setflags(write=False)
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "variable_labels", labels)

    @classmethod
    def from_snapshot(cls, snapshot) -> "DataMatrix":
        """Articles as observations, profile metrics as variables."""
        cols = [snapshot.column(m) for m in snapshot.profile]
        return cls(np.array(cols, dtype=float).T, tuple(snapshot.profile))


@dataclass(frozen=True, eq=False)
class LoadingMatrix:
    """Variables-by-factors loadings from a correlation-based extraction."""

    loadings: np.ndarray
    factor_labels: tuple[str, ...] = ()
    variable_labels: tuple[str, ...] = ()

    def __post_init__(self):
        loadings = np.asarray(self.loadings, dtype=float)
        if loadings.ndim != 2:
            raise StructuralError(f"loadings must be 2-dimensional, got {loadings.shape}")
        nvar, nfac = loadings.shape
        if np.any(np.abs(loadings) > 1.0 + 1e-9):
            raise DomainError("loadings must lie in [-1, 1]")
        if np.any((loadings ** 2).sum(axis=1) > 1.0 + 1e-9):
            raise DomainError("per-variable communality cannot exceed 1")
        factor_labels = (tuple(str(x) for x in self.factor_labels)
                         or tuple(f"factor{i + 1}" for i in range(nfac)))
        variable_labels = (tuple(str(x) for x in self.variable_labels)
                           or tuple(f"v{i + 1}" for i in range(nvar)))
        if len(factor_labels) != nfac or len(variable_labels) != nvar:
            raise StructuralError("label counts do not match the loading shape")
        loadings = loadings.copy()
        loadings.setflags(write=False)
        object.__setattr__(self, "loadings", loadings)
        object.__setattr__(self, "factor_labels", factor_labels)
        object.__setattr__(self, "variable_labels", variable_labels)

    @property
    def n_factors(self) -> int:
        return self.loadings.shape[1]

    def communalities(self) -> np.ndarray:
        return (self.loadings ** 2).sum(axis=1)


@dataclass(frozen=True, eq=False)
class FactorReport:
    """Rotated loadings plus variance shares and the display mask."""

    loadings: LoadingMatrix
    variance_explained: tuple[float, ...]  # percent, per factor
    total_variance: float  # percent
    suppressed: np.ndarray  # True where |loading| < threshold (display only)
    suppression_threshold: float
    retention_rule: str


def correlation_matrix(data: DataMatrix) -> np.ndarray:
    """Pearson correlations between variables; symmetric with unit diagonal."""
    values = data.values
    for j, label in enumerate(data.variable_labels):
        col = values[:, j]
        if float(col.max()) == float(col.min()):
            raise DomainError(f"variable {label!r} is constant; correlation undefined",
                              code="degenerate_variable")
    r = np.corrcoef(values, rowvar=False)
    r = np.clip((r + r.T) / 2.0, -1.0, 1.0)
    np.fill_diagonal(r, 1.0)
    return r


def eigen_sym(matrix: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Eigendecomposition of a symmetric matrix by cyclic Jacobi rotations.

    Returns eigenvalues in descending order and the matching orthonormal
    eigenvectors as columns. Each eigenvector's largest-magnitude component
    is made positive so results are deterministic.
    """
    a = np.asarray(matrix, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise StructuralError(f"matrix must be square, got shape {a.shape}")
    scale = max(1.0, float(np.max(np.abs(a)))) if a.size else 1.0
    if float(np.max(np.abs(a - a.T))) > 1e-9 * scale:
        raise StructuralError("matrix is not symmetric")

    n = a.shape[0]
    a = (a + a.T) / (2.0 * scale)
    v = np.eye(n)
    converged = False
    for _ in range(JACOBI_MAX_SWEEPS):
        off = np.sqrt(np.sum(np.tril(a, -1) ** 2) * 2.0)
        if off < JACOBI_OFF_TOL:
            converged = True
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) < 1e-300:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = np.sign(theta) / (abs(theta) + np.hypot(theta, 1.0)) if theta != 0 \
                    else 1.0 / (abs(theta) + np.hypot(theta, 1.0))
                c = 1.0 / np.hypot(t, 1.0)
                s = t * c
                # two-sided rotation in the (p, q) plane
                col_p, col_q = a[:, p].copy(), a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p, row_q = a[p, :].copy(), a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                a[p, q] = a[q, p] = 0.0
                vp, vq = v[:, p].copy(), v[:, q].copy()
                v[:, p] = c * vp - s * vq
                v[:, q] = s * vp + c * vq
    else:
        converged = np.sqrt(np.sum(np.tril(a, -1) ** 2) * 2.0) < JACOBI_OFF_TOL
    if not converged:
        raise ConvergenceError(
            f"Jacobi sweeps did not reduce the off-diagonal below {JACOBI_OFF_TOL} "
            f"within {JACOBI_MAX_SWEEPS} sweeps")

    eigenvalues = np.diag(a) * scale
    order = np.argsort(-eigenvalues, kind="stable")
    eigenvalues = eigenvalues[order]
    vectors = v[:, order]
    for j in range(n):
        k = int(np.argmax(np.abs(vectors[:, j])))
        if vectors[k, j] < 0:
            vectors[:, j] = -vectors[:, j]
    return eigenvalues, vectors


def _varimax_criterion(b: np.ndarray) -> float:
    """Raw varimax criterion: summed variance of squared loadings per factor."""
    d = b.shape[0]
    sq = b ** 2
    return float(np.sum(sq ** 2) - np.sum(sq.sum(axis=0) ** 2) / d)


def varimax_rotation(loadings: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Kaiser-normalized varimax via successive pairwise planar rotations.

    Returns ``(rotated, rotation)`` with ``rotated = loadings @ rotation``
    and ``rotation`` orthogonal. Columns are sign-flipped so each column's
    largest-magnitude loading is positive, then ordered by variance
    explained.
    """
    a = np.asarray(loadings, dtype=float)
    nvar, nfac = a.shape
    rot = np.eye(nfac)
    if nfac >= 2:
        h = np.sqrt((a ** 2).sum(axis=1))
        h[h == 0.0] = 1.0
        b = a / h[:, None]
        crit = _varimax_criterion(b)
        for _ in range(VARIMAX_MAX_ITER):
            for i in range(nfac - 1):
                for j in range(i + 1, nfac):
                    x, y = b[:, i], b[:, j]
                    u = x ** 2 - y ** 2
                    w = 2.0 * x * y
                    num = 2.0 * (u @ w) - 2.0 * u.sum() * w.sum() / nvar
                    den = (u @ u) - (w @ w) - (u.sum() ** 2 - w.sum() ** 2) / nvar
                    phi = 0.25 * np.arctan2(num, den)
                    if abs(phi) < 1e-15:
                        continue
                    c, s = np.cos(phi), np.sin(phi)
                    bi, bj = b[:, i].copy(), b[:, j].copy()
                    b[:, i] = c * bi + s * bj
                    b[:, j] = -s * bi + c * bj
                    ri, rj = rot[:, i].copy(), rot[:, j].copy()
                    rot[:, i] = c * ri + s * rj
                    rot[:, j] = -s * ri + c * rj
            new_crit = _varimax_criterion(b)
            if new_crit - crit < VARIMAX_TOL:
                crit = new_crit
                break
            crit = new_crit

    rotated = a @ rot
    for j in range(nfac):
        k = int(np.argmax(np.abs(rotated[:, j])))
        if rotated[k, j] < 0:
            rotated[:, j] = -rotated[:, j]
            rot[:, j] = -rot[:, j]
    order = np.argsort(-(rotated ** 2).sum(axis=0), kind="stable")
    return rotated[:, order], rot[:, order]


def varimax(loadings: LoadingMatrix) -> LoadingMatrix:
    """Varimax-rotate a loading matrix; single-factor input passes through."""
    if loadings.n_factors < 2:
        return loadings
    rotated, _ = varimax_rotation(loadings.loadings)
    return LoadingMatrix(rotated, loadings.factor_labels, loadings.variable_labels)


def fit_factors(
    data: DataMatrix,
    n_factors: int | None = None,
    suppression_threshold: float = SUPPRESSION_DEFAULT,
) -> FactorReport:
    """Principal-component extraction with varimax rotation.

    Factors are retained by the Kaiser rule (eigenvalue > 1) unless a fixed
    ``n_factors`` is given. Suppression affects the report mask only; the
    loadings keep full precision.
    """
    corr = correlation_matrix(data)
    eigenvalues, vectors = eigen_sym(corr)
    nvar = corr.shape[0]

    if n_factors is None:
        k = int(np.sum(eigenvalues > 1.0))
        rule = "kaiser(eigenvalue>1)"
    else:
        k = int(n_factors)
        rule = f"fixed({k})"
        if not 1 <= k <= nvar:
            raise DomainError(f"n_factors {k} outside 1..{nvar}")
    if k == 0:
        raise DomainError("retention rule kept no factors", code="empty_model")

    unrotated = vectors[:, :k] * np.sqrt(np.clip(eigenvalues[:k], 0.0, None))
    rotated, _ = varimax_rotation(unrotated) if k >= 2 else (unrotated, None)

    loadings = LoadingMatrix(rotated, variable_labels=data.variable_labels)
    shares = tuple(((rotated ** 2).sum(axis=0) / nvar * 100.0).tolist())
    return FactorReport(
        loadings=loadings,
        variance_explained=shares,
        total_variance=float(sum(shares)),
        suppressed=np.abs(rotated) < suppression_threshold,
        suppression_threshold=float(suppression_threshold),
        retention_rule=rule,
    )
