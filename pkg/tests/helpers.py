"""Shared generators and independent oracles for the test suite.

The oracles deliberately avoid the code paths they check: dense
eigendecomposition instead of power iteration, pure-python weighted sums
instead of the numpy scoring engine, characteristic-polynomial roots instead
of Jacobi sweeps.
"""

from datetime import date

import numpy as np

from alescore import ArticleMetrics, PairwiseMatrix, Snapshot

SAATY_VALUES = [float(k) for k in range(1, 10)] + [1.0 / k for k in range(2, 10)]


def random_reciprocal_matrix(rng: np.random.Generator, n: int) -> PairwiseMatrix:
    """Valid judgment matrix with random discrete scale entries."""
    m = np.ones((n, n))
    for i in range(n):
        for j in range(i + 1, n):
            v = rng.choice(SAATY_VALUES)
            m[i, j] = v
            m[j, i] = 1.0 / v
    return PairwiseMatrix(m)


def random_consistent_matrix(rng: np.random.Generator, n: int):
    """Fully consistent matrix entries[i][j] = v_i / v_j; returns (matrix, v)."""
    v = rng.uniform(1.0, 9.0, size=n)
    m = v[:, None] / v[None, :]
    return PairwiseMatrix(m), v


def eig_oracle(entries: np.ndarray):
    """Dense eigendecomposition oracle: (sum-normalized weights, lambda_max)."""
    vals, vecs = np.linalg.eig(np.asarray(entries, dtype=float))
    i = int(np.argmax(vals.real))
    w = np.abs(vecs[:, i].real)
    return w / w.sum(), float(vals[i].real)


def random_snapshot(rng: np.random.Generator, n_articles: int,
                    profile=("citeulike", "mendeley", "html_views", "pdf_downloads",
                             "citations", "facebook", "twitter"),
                    snapshot_date=date(2012, 10, 10),
                    publication_month="2012-06",
                    integral=False) -> Snapshot:
    articles = []
    for i in range(n_articles):
        if integral:
            values = {m: float(rng.integers(0, 500)) for m in profile}
        else:
            values = {m: float(rng.uniform(0.0, 1000.0)) for m in profile}
        articles.append(ArticleMetrics(
            doi=f"10.9999/test.{i:04d}",
            publication_month=publication_month,
            subject="testing",
            values=values,
        ))
    return Snapshot(snapshot_date=snapshot_date, articles=tuple(articles),
                    profile=tuple(profile))


def brute_force_ranking(snapshot: Snapshot, weights) -> list:
    """Pure-python weighted-sum oracle: [(doi, score)] in rank order.

    Normalization, weighting and the (descending score, ascending doi)
    tie-break are all re-implemented without numpy.
    """
    profile = list(snapshot.profile)
    cols = {m: [a.values[m] for a in snapshot.articles] for m in profile}
    lo = {m: min(cols[m]) for m in profile}
    hi = {m: max(cols[m]) for m in profile}
    w = {label: weight for label, weight in zip(weights.labels, weights.weights)}
    scored = []
    for a in snapshot.articles:
        s = 0.0
        for m in profile:
            if hi[m] == lo[m]:
                norm = 0.0
            else:
                norm = (a.values[m] - lo[m]) / (hi[m] - lo[m])
            s += w[m] * norm
        scored.append((a.doi, s))
    scored.sort(key=lambda t: (-t[1], t[0]))
    return scored


def char_poly_roots_3x3(m: np.ndarray) -> np.ndarray:
    """Eigenvalues of a symmetric 3x3 via its characteristic polynomial."""
    a, b, c = m[0]
    _, d, e = m[1]
    f = m[2, 2]
    # det(m - xI) expanded: -x^3 + tr x^2 - m2 x + det
    tr = a + d + f
    m2 = (a * d - b * b) + (a * f - c * c) + (d * f - e * e)
    det = a * (d * f - e * e) - b * (b * f - e * c) + c * (b * e - d * c)
    roots = np.roots([-1.0, tr, -m2, det])
    return np.sort(roots.real)[::-1]
