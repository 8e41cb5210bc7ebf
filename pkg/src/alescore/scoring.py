"""Composite scoring.

Min-max normalization of metric columns, weighted composite scores with
deterministic ranking, phase assignment by article age, and cohort selection.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from datetime import date
from types import MappingProxyType
from typing import Mapping, Sequence

import numpy as np

from .ahp import PairwiseMatrix, WeightVector, principal_weights
from .errors import CohortError, DomainError, ProfileError, TemporalError
from .presets import preset_weights

_MONTH_RE = re.compile(r"^(\d{4})-(\d{2})$")

# Small guard so that fraction*n products that are mathematically integral
# do not get pushed over the next integer by float rounding.
_CEIL_EPS = 1e-9


def _parse_month(value: str) -> tuple[int, int]:
    m = _MONTH_RE.match(value)
    if not m:
        raise DomainError(f"publication month {value!r} is not YYYY-MM")
    year, month = int(m.group(1)), int(m.group(2))
    if not 1 <= month <= 12:
        raise DomainError(f"publication month {value!r} has month out of range")
    return year, month


@dataclass(frozen=True)
class ArticleMetrics:
    """One article's metric values at a single observation date."""

    doi: str
    publication_month: str  # YYYY-MM
    subject: str
    values: Mapping[str, float]

    def __post_init__(self):
        if not self.doi:
            raise DomainError("doi must be non-empty")
        _parse_month(self.publication_month)
        vals = {str(k): float(v) for k, v in self.values.items()}
        for k, v in vals.items():
            if not math.isfinite(v) or v < 0.0:
                raise DomainError(f"metric {k!r} of {self.doi} is {v!r}, must be >= 0")
        object.__setattr__(self, "values", MappingProxyType(vals))


@dataclass(frozen=True)
class Snapshot:
    """All articles of a corpus observed at one date."""

    snapshot_date: date
    articles: tuple[ArticleMetrics, ...]
    profile: tuple[str, ...] = ()

    def __post_init__(self):
        articles = tuple(self.articles)
        if not articles:
            raise DomainError("snapshot must contain at least one article")
        seen = set()
        for a in articles:
            if a.doi in seen:
                raise DomainError(f"duplicate doi {a.doi!r} in snapshot",
                                  code="duplicate_doi")
            seen.add(a.doi)
        profile = tuple(self.profile) or tuple(articles[0].values.keys())
        for a in articles:
            if tuple(sorted(a.values.keys())) != tuple(sorted(profile)):
                raise ProfileError(
                    f"article {a.doi} metrics {sorted(a.values)} do not match "
                    f"profile {sorted(profile)}")
        object.__setattr__(self, "articles", articles)
        object.__setattr__(self, "profile", profile)

    def dois(self) -> tuple[str, ...]:
        return tuple(a.doi for a in self.articles)

    def column(self, metric: str) -> list[float]:
        if metric not in self.profile:
            raise ProfileError(f"metric {metric!r} not in profile {self.profile}")
        return [a.values[metric] for a in self.articles]


@dataclass(frozen=True)
class PhaseSchedule:
    """Month-age boundaries between phases plus per-phase retention fractions.

    ``boundaries`` of length k delimit k+1 phases; an age equal to a boundary
    belongs to the later phase.
    """

    boundaries: tuple[int, ...] = (6, 24, 60)
    selection_fractions: tuple[float, ...] = (0.8, 0.7, 0.5, 0.3)

    def __post_init__(self):
        bounds = tuple(int(b) for b in self.boundaries)
        fractions = tuple(float(f) for f in self.selection_fractions)
        if not bounds or bounds[0] <= 0 or any(b >= c for b, c in zip(bounds, bounds[1:])):
            raise DomainError("phase boundaries must be positive and strictly increasing")
        if len(fractions) != len(bounds) + 1:
            raise DomainError(
                f"{len(bounds)} boundaries delimit {len(bounds) + 1} phases, "
                f"got {len(fractions)} selection fractions")
        if any(not 0.0 < f <= 1.0 for f in fractions):
            raise DomainError("selection fractions must lie in (0, 1]")
        object.__setattr__(self, "boundaries", bounds)
        object.__setattr__(self, "selection_fractions", fractions)

    @property
    def phase_count(self) -> int:
        return len(self.boundaries) + 1

    def fraction_for(self, phase: int) -> float:
        if not 1 <= phase <= self.phase_count:
            raise DomainError(f"phase {phase} outside 1..{self.phase_count}")
        return self.selection_fractions[phase - 1]


DEFAULT_SCHEDULE = PhaseSchedule()


@dataclass(frozen=True)
class RankingRow:
    """One article's raw values, normalized values, score and rank."""

    doi: str
    values: Mapping[str, float]
    normalized: Mapping[str, float]
    score: float
    rank: int

    def __post_init__(self):
        object.__setattr__(self, "values", MappingProxyType(dict(self.values)))
        object.__setattr__(self, "normalized", MappingProxyType(dict(self.normalized)))


@dataclass(frozen=True)
class ScoredRanking:
    """Composite scores and deterministic ranks for one snapshot.

    ``rows`` are ordered by rank. ``phase`` is None when scoring was run with
    explicit weights outside any schedule.
    """

    snapshot_date: date
    weights: WeightVector
    rows: tuple[RankingRow, ...]
    normalization_bounds: Mapping[str, tuple[float, float]]
    phase: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(self.rows))
        object.__setattr__(
            self, "normalization_bounds",
            MappingProxyType({k: (float(lo), float(hi))
                              for k, (lo, hi) in dict(self.normalization_bounds).items()}))

    def dois(self) -> tuple[str, ...]:
        return tuple(r.doi for r in self.rows)

    def rank_of(self, doi: str) -> int:
        for r in self.rows:
            if r.doi == doi:
                return r.rank
        raise DomainError(f"doi {doi!r} not in ranking")


def normalize_column(values: Sequence[float]) -> list[float]:
    """Min-max normalize a metric column to [0, 1].

    The minimum maps to 0 and the maximum to 1. A column with no spread
    (max == min) carries no discriminating information and maps to all zeros.
    """
    if len(values) == 0:
        raise DomainError("cannot normalize an empty column")
    col = np.asarray(list(values), dtype=float)
    if not np.all(np.isfinite(col)) or np.any(col < 0.0):
        raise DomainError("metric values must be finite and >= 0")
    lo = float(col.min())
    hi = float(col.max())
    if hi == lo:
        return [0.0] * len(col)
    return ((col - lo) / (hi - lo)).tolist()


def composite_scores(
    snapshot: Snapshot,
    weights: WeightVector,
    *,
    phase: int | None = None,
) -> ScoredRanking:
    """Weighted sum of normalized metric columns, ranked descending.

    Ties break by ascending doi, so ranks are a deterministic permutation
    of 1..n for any input.
    """
    if tuple(weights.labels) != tuple(snapshot.profile):
        raise ProfileError(
            f"weight labels {list(weights.labels)} do not match snapshot "
            f"profile {list(snapshot.profile)}")

    bounds: dict[str, tuple[float, float]] = {}
    normalized: dict[str, list[float]] = {}
    for metric in snapshot.profile:
        col = snapshot.column(metric)
        bounds[metric] = (min(col), max(col))
        normalized[metric] = normalize_column(col)

    w = weights.as_array()
    scores = []
    for i, article in enumerate(snapshot.articles):
        norms = np.array([normalized[m][i] for m in snapshot.profile])
        scores.append(float(w @ norms))

    order = sorted(range(len(scores)),
                   key=lambda i: (-scores[i], snapshot.articles[i].doi))
    rows = []
    for rank, i in enumerate(order, start=1):
        article = snapshot.articles[i]
        rows.append(RankingRow(
            doi=article.doi,
            values=dict(article.values),
            normalized={m: normalized[m][i] for m in snapshot.profile},
            score=scores[i],
            rank=rank,
        ))
    return ScoredRanking(
        snapshot_date=snapshot.snapshot_date,
        weights=weights,
        rows=tuple(rows),
        normalization_bounds=bounds,
        phase=phase,
    )


def determine_phase(
    publication_month: str,
    as_of: date,
    schedule: PhaseSchedule = DEFAULT_SCHEDULE,
) -> int:
    """Phase of an article aged by whole calendar months at ``as_of``.

    Ages equal to a boundary belong to the later phase.
    """
    year, month = _parse_month(publication_month)
    age = (as_of.year - year) * 12 + (as_of.month - month)
    if age < 0:
        raise TemporalError(
            f"as_of {as_of.isoformat()} precedes publication month {publication_month}")
    phase = 1
    for b in schedule.boundaries:
        if age >= b:
            phase += 1
    return phase


def select_cohort_top(ranking: ScoredRanking, fraction: float) -> tuple[str, ...]:
    """Dois of the top ``ceil(fraction * n)`` rows, in rank order."""
    if not 0.0 < fraction <= 1.0:
        raise DomainError(f"selection fraction {fraction!r} outside (0, 1]")
    n = len(ranking.rows)
    keep = math.ceil(fraction * n - _CEIL_EPS)
    keep = max(1, min(n, keep))
    return tuple(r.doi for r in ranking.rows[:keep])


def score_pipeline(
    snapshot: Snapshot,
    as_of: date,
    schedule: PhaseSchedule = DEFAULT_SCHEDULE,
    matrix_override: PairwiseMatrix | None = None,
    *,
    publication_month: str | None = None,
) -> ScoredRanking:
    """Resolve the phase for the snapshot's cohort and score it.

    Weights come from the shipped presets for the resolved phase unless a
    judgment matrix override is given. Snapshots mixing publication months
    need an explicit ``publication_month`` cohort key.
    """
    if publication_month is None:
        months = {a.publication_month for a in snapshot.articles}
        if len(months) > 1:
            raise CohortError(
                f"snapshot mixes publication months {sorted(months)}; "
                "pass publication_month to pick the cohort")
        publication_month = months.pop()
    phase = determine_phase(publication_month, as_of, schedule)
    if matrix_override is not None:
        weights = principal_weights(matrix_override)
    else:
        weights = preset_weights(phase)
    return composite_scores(snapshot, weights, phase=phase)
