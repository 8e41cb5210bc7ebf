"""Rank trajectories across snapshots.

Aligns successive rankings per article, classifies first-to-last rank trends,
sums metric totals over time and exports bump-chart documents.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from datetime import date
from typing import Mapping, Sequence

from .errors import AlignmentError, DomainError
from .scoring import ScoredRanking, Snapshot


class Trend(enum.Enum):
    """First-vs-last rank movement, with its display color."""

    UPWARD = "upward"
    DOWNWARD = "downward"
    FLAT = "flat"

    @property
    def color(self) -> str:
        return _TREND_COLORS[self]


_TREND_COLORS = {Trend.UPWARD: "red", Trend.DOWNWARD: "green", Trend.FLAT: "yellow"}


@dataclass(frozen=True)
class TrajectoryPoint:
    snapshot_date: date
    phase: int | None
    score: float
    rank: int


@dataclass(frozen=True)
class RankTrajectory:
    """One article's (date, phase, score, rank) points in date order."""

    doi: str
    points: tuple[TrajectoryPoint, ...]

    def __post_init__(self):
        points = tuple(self.points)
        if any(p.rank < 1 for p in points):
            raise DomainError("ranks must be >= 1")
        dates = [p.snapshot_date for p in points]
        if any(a >= b for a, b in zip(dates, dates[1:])):
            raise DomainError("snapshot dates must be strictly increasing")
        object.__setattr__(self, "points", points)

    def ranks(self) -> tuple[int, ...]:
        return tuple(p.rank for p in self.points)


@dataclass(frozen=True)
class MetricTotalsSeries:
    """Per-metric corpus totals at each snapshot date."""

    metrics: tuple[str, ...]
    totals: Mapping[str, tuple[tuple[date, float], ...]]

    def __post_init__(self):
        object.__setattr__(self, "totals", dict(self.totals))


def trajectories(rankings: Sequence[ScoredRanking]) -> list[RankTrajectory]:
    """One trajectory per doi over an aligned, date-ordered ranking list."""
    if len(rankings) < 2:
        raise DomainError("need at least 2 rankings to build trajectories")
    dates = [r.snapshot_date for r in rankings]
    if any(a >= b for a, b in zip(dates, dates[1:])):
        raise DomainError("rankings must have strictly increasing snapshot dates")

    base = set(rankings[0].dois())
    for r in rankings[1:]:
        other = set(r.dois())
        if other != base:
            raise AlignmentError(
                "rankings do not cover the same articles",
                missing=base - other, extra=other - base)

    by_doi: dict[str, list[TrajectoryPoint]] = {doi: [] for doi in sorted(base)}
    for r in rankings:
        for row in r.rows:
            by_doi[row.doi].append(TrajectoryPoint(
                snapshot_date=r.snapshot_date, phase=r.phase,
                score=row.score, rank=row.rank))
    return [RankTrajectory(doi, tuple(points)) for doi, points in by_doi.items()]


def classify_trend(trajectory: RankTrajectory) -> Trend:
    """Compare last rank against first: smaller is upward, larger downward."""
    if len(trajectory.points) < 2:
        raise DomainError("trend needs a trajectory of length >= 2")
    first = trajectory.points[0].rank
    last = trajectory.points[-1].rank
    if last < first:
        return Trend.UPWARD
    if last > first:
        return Trend.DOWNWARD
    return Trend.FLAT


def metric_totals(snapshots: Sequence[Snapshot]) -> MetricTotalsSeries:
    """Sum each metric over all articles, per snapshot.

    Metrics absent from a snapshot's profile contribute 0 for that date.
    """
    if not snapshots:
        raise DomainError("need at least 1 snapshot")
    metrics: list[str] = []
    for s in snapshots:
        for m in s.profile:
            if m not in metrics:
                metrics.append(m)
    # fsum: exactly-rounded, so totals are invariant under article order
    totals = {
        m: tuple(
            (s.snapshot_date,
             math.fsum(s.column(m)) if m in s.profile else 0.0)
            for s in snapshots)
        for m in metrics
    }
    return MetricTotalsSeries(metrics=tuple(metrics), totals=totals)


def export_bumpchart(
    trajectory_list: Sequence[RankTrajectory],
    trends: Mapping[str, Trend],
) -> dict:
    """Bump-chart document: per-article rank series ordered by first rank.

    The output is a plain JSON-serializable dict that round-trips losslessly
    through ``json.dumps``/``json.loads``.
    """
    if not trajectory_list:
        raise DomainError("need at least one trajectory")
    doi_set = {t.doi for t in trajectory_list}
    trend_set = set(trends.keys())
    if doi_set != trend_set:
        raise AlignmentError("trend labels do not cover the trajectory articles",
                             missing=doi_set - trend_set, extra=trend_set - doi_set)

    axis = [(p.snapshot_date, p.phase) for p in trajectory_list[0].points]
    for t in trajectory_list:
        if [(p.snapshot_date, p.phase) for p in t.points] != axis:
            raise AlignmentError(f"trajectory {t.doi} has a different snapshot axis")

    ordered = sorted(trajectory_list, key=lambda t: t.points[0].rank)
    return {
        "kind": "bumpchart",
        "snapshots": [
            {"snapshot_date": d.isoformat(), "phase": phase}
            for d, phase in axis
        ],
        "articles": [
            {
                "doi": t.doi,
                "trend": trends[t.doi].value,
                "color": trends[t.doi].color,
                "ranks": list(t.ranks()),
                "scores": [p.score for p in t.points],
            }
            for t in ordered
        ],
    }
