"""File ingestion and result persistence.

Snapshots load from CSV or ALM-shaped JSON; judgment matrices from a small
JSON document; results persist as versioned, digest-stamped JSON documents.
"""

from __future__ import annotations

import csv
import hashlib
import json
from dataclasses import dataclass, field as dataclass_field
from datetime import date
from pathlib import Path
from typing import Mapping, Sequence

from . import __version__
from .ahp import ConsistencyReport, PairwiseMatrix, WeightVector
from .errors import SchemaError
from .factors import FactorReport
from .scoring import ArticleMetrics, ScoredRanking, Snapshot

REQUIRED_COLUMNS = ("doi", "publication_month", "subject", "snapshot_date")

RESULT_KINDS = ("weights", "ranking", "dynamics", "factor-report")


# ---------------------------------------------------------------------------
# judgment matrix files
# ---------------------------------------------------------------------------

def _parse_entry(value) -> float:
    """Accept 3, "3", "1/3" and "0.3333" entry forms."""
    if isinstance(value, (int, float)) and not isinstance(value, bool):
        return float(value)
    if isinstance(value, str):
        text = value.strip()
        if "/" in text:
            num, _, den = text.partition("/")
            try:
                return float(num) / float(den)
            except (ValueError, ZeroDivisionError) as exc:
                raise SchemaError(f"bad matrix entry {value!r}") from exc
        try:
            return float(text)
        except ValueError as exc:
            raise SchemaError(f"bad matrix entry {value!r}") from exc
    raise SchemaError(f"bad matrix entry {value!r}")


def parse_matrix_data(obj) -> PairwiseMatrix:
    """Build a PairwiseMatrix from a decoded matrix document."""
    if not isinstance(obj, dict):
        raise SchemaError("matrix document must be an object")
    if "n" not in obj or "labels" not in obj:
        missing = "n" if "n" not in obj else "labels"
        raise SchemaError(f"matrix document missing field {missing!r}")
    n = obj["n"]
    labels = obj["labels"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 2:
        raise SchemaError(f"matrix order n must be an integer >= 2, got {n!r}")
    if not isinstance(labels, list) or len(labels) != n:
        raise SchemaError(f"expected {n} labels")
    has_upper = "upper" in obj
    has_full = "full" in obj
    if has_upper == has_full:
        raise SchemaError("matrix document needs exactly one of 'upper' or 'full'")
    if has_upper:
        upper = obj["upper"]
        if not isinstance(upper, list) or len(upper) != n * (n - 1) // 2:
            raise SchemaError(
                f"'upper' must list the {n * (n - 1) // 2} entries above the diagonal")
        return PairwiseMatrix.from_upper([_parse_entry(v) for v in upper], labels)
    full = obj["full"]
    if (not isinstance(full, list) or len(full) != n
            or any(not isinstance(row, list) or len(row) != n for row in full)):
        raise SchemaError(f"'full' must be a {n}x{n} array")
    entries = [[_parse_entry(v) for v in row] for row in full]
    return PairwiseMatrix(entries, labels)


def parse_matrix_file(path: str | Path) -> PairwiseMatrix:
    path = Path(path)
    try:
        obj = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path}: not valid JSON: {exc}") from exc
    except OSError as exc:
        raise SchemaError(f"{path}: {exc}") from exc
    return parse_matrix_data(obj)


# ---------------------------------------------------------------------------
# snapshots
# ---------------------------------------------------------------------------

def _parse_iso_date(value, context: str) -> date:
    try:
        return date.fromisoformat(str(value))
    except ValueError as exc:
        raise SchemaError(f"{context}: bad date {value!r}") from exc


def _snapshot_from_records(records: Sequence[Mapping], source: str) -> Snapshot:
    """Shared assembly for CSV rows, JSON objects and inline API bodies."""
    if not records:
        raise SchemaError(f"{source}: no articles")
    first = records[0]
    for col in REQUIRED_COLUMNS:
        if col not in first:
            raise SchemaError(f"{source}: missing required column {col!r}",
                              code="missing_column")
    profile = tuple(k for k in first.keys() if k not in REQUIRED_COLUMNS)
    if not profile:
        raise SchemaError(f"{source}: no metric columns", code="missing_column")

    articles = []
    snapshot_date = None
    seen = set()
    for idx, rec in enumerate(records, start=1):
        for col in REQUIRED_COLUMNS:
            if col not in rec or rec[col] in (None, ""):
                raise SchemaError(f"{source}: row {idx} missing {col!r}",
                                  code="missing_column")
        if tuple(k for k in rec.keys() if k not in REQUIRED_COLUMNS) != profile:
            raise SchemaError(f"{source}: row {idx} metric columns differ from row 1")
        doi = str(rec["doi"])
        if doi in seen:
            raise SchemaError(f"{source}: duplicate doi {doi!r} at row {idx}",
                              code="duplicate_doi")
        seen.add(doi)
        row_date = _parse_iso_date(rec["snapshot_date"], f"{source}: row {idx}")
        if snapshot_date is None:
            snapshot_date = row_date
        elif row_date != snapshot_date:
            raise SchemaError(
                f"{source}: row {idx} snapshot_date {row_date} differs from "
                f"{snapshot_date}")
        values = {}
        for metric in profile:
            raw = rec[metric]
            try:
                v = float(raw)
            except (TypeError, ValueError) as exc:
                raise SchemaError(f"{source}: row {idx} metric {metric!r} is "
                                  f"{raw!r}, not a number", code="bad_value") from exc
            if v < 0:
                raise SchemaError(f"{source}: row {idx} metric {metric!r} is "
                                  f"negative ({v})", code="negative_value")
            values[metric] = v
        articles.append(ArticleMetrics(
            doi=doi,
            publication_month=str(rec["publication_month"]),
            subject=str(rec["subject"]),
            values=values,
        ))
    return Snapshot(snapshot_date=snapshot_date, articles=tuple(articles),
                    profile=profile)


def _infer_format(path: Path, format: str | None) -> str:
    if format:
        if format not in ("csv", "alm-json"):
            raise SchemaError(f"unknown snapshot format {format!r}")
        return format
    suffix = path.suffix.lower()
    if suffix == ".csv":
        return "csv"
    if suffix == ".json":
        return "alm-json"
    raise SchemaError(f"{path}: cannot infer format from extension {suffix!r}")


def parse_snapshot(path: str | Path, format: str | None = None) -> Snapshot:
    """Load a snapshot file (CSV or ALM-shaped JSON)."""
    path = Path(path)
    fmt = _infer_format(path, format)
    if fmt == "csv":
        try:
            with path.open(newline="", encoding="utf-8") as handle:
                reader = csv.reader(handle)
                try:
                    header = next(reader)
                except StopIteration:
                    raise SchemaError(f"{path}: empty file") from None
                rows = [dict(zip(header, row)) for row in reader if row]
        except OSError as exc:
            raise SchemaError(f"{path}: {exc}") from exc
        for col in REQUIRED_COLUMNS:
            if col not in header:
                raise SchemaError(f"{path}: missing required column {col!r}",
                                  code="missing_column")
        return _snapshot_from_records(rows, str(path))
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path}: not valid JSON: {exc}") from exc
    except OSError as exc:
        raise SchemaError(f"{path}: {exc}") from exc
    if not isinstance(data, list):
        raise SchemaError(f"{path}: expected a JSON list of article objects")
    return _snapshot_from_records(data, str(path))


def _format_value(v: float) -> str:
    # repr() round-trips doubles exactly; integral values print without ".0"
    return str(int(v)) if v == int(v) else repr(v)


def write_snapshot(snapshot: Snapshot, path: str | Path, format: str | None = None) -> None:
    """Write a snapshot so that parse_snapshot restores it exactly."""
    path = Path(path)
    fmt = _infer_format(path, format)
    if fmt == "csv":
        with path.open("w", newline="", encoding="utf-8") as handle:
            writer = csv.writer(handle)
            writer.writerow(list(REQUIRED_COLUMNS) + list(snapshot.profile))
            for a in snapshot.articles:
                writer.writerow(
                    [a.doi, a.publication_month, a.subject,
                     snapshot.snapshot_date.isoformat()]
                    + [_format_value(a.values[m]) for m in snapshot.profile])
        return
    records = [
        {
            "doi": a.doi,
            "publication_month": a.publication_month,
            "subject": a.subject,
            "snapshot_date": snapshot.snapshot_date.isoformat(),
            **{m: a.values[m] for m in snapshot.profile},
        }
        for a in snapshot.articles
    ]
    path.write_text(json.dumps(records, indent=2) + "\n", encoding="utf-8")


# ---------------------------------------------------------------------------
# result documents
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ResultDocument:
    """A persisted engine result: payload plus provenance."""

    kind: str
    payload: dict
    engine_version: str = __version__
    input_digests: Mapping[str, str] = dataclass_field(default_factory=dict)

    def __post_init__(self):
        if self.kind not in RESULT_KINDS:
            raise SchemaError(f"unknown result kind {self.kind!r}; "
                              f"expected one of {RESULT_KINDS}")
        object.__setattr__(self, "input_digests", dict(self.input_digests))


def file_digest(path: str | Path) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


def result_to_json(doc: ResultDocument) -> str:
    return json.dumps(
        {
            "kind": doc.kind,
            "engine_version": doc.engine_version,
            "input_digests": dict(sorted(doc.input_digests.items())),
            "payload": doc.payload,
        },
        indent=2, sort_keys=True,
    ) + "\n"


def write_result(doc: ResultDocument, path: str | Path) -> None:
    path = Path(path)
    try:
        path.write_text(result_to_json(doc), encoding="utf-8")
    except OSError as exc:
        raise SchemaError(f"{path}: {exc}") from exc


def read_result(path: str | Path) -> ResultDocument:
    path = Path(path)
    try:
        obj = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path}: not a valid result document: {exc}",
                          code="result_parse_error") from exc
    except OSError as exc:
        raise SchemaError(f"{path}: {exc}") from exc
    if not isinstance(obj, dict) or not {"kind", "payload"} <= set(obj):
        raise SchemaError(f"{path}: not a valid result document",
                          code="result_parse_error")
    return ResultDocument(
        kind=obj["kind"],
        payload=obj["payload"],
        engine_version=obj.get("engine_version", "unknown"),
        input_digests=obj.get("input_digests", {}),
    )


# ---------------------------------------------------------------------------
# payload serializers (shared by CLI and HTTP service)
# ---------------------------------------------------------------------------

def weights_payload(weights: WeightVector, report: ConsistencyReport | None = None,
                    phase: int | None = None) -> dict:
    payload = {
        "labels": list(weights.labels),
        "weights": list(weights.weights),
    }
    if phase is not None:
        payload["phase"] = phase
    if report is not None:
        payload["consistency"] = {
            "lambda_max": report.lambda_max,
            "ci": report.ci,
            "cr": report.cr,
            "ri": report.ri,
            "iterations": report.iterations,
            "converged": report.converged,
            "acceptable": report.acceptable,
        }
    return payload


def ranking_payload(ranking: ScoredRanking) -> dict:
    return {
        "snapshot_date": ranking.snapshot_date.isoformat(),
        "phase": ranking.phase,
        "weights": {
            "labels": list(ranking.weights.labels),
            "weights": list(ranking.weights.weights),
        },
        "normalization_bounds": {
            m: [lo, hi] for m, (lo, hi) in ranking.normalization_bounds.items()
        },
        "rows": [
            {
                "doi": r.doi,
                "rank": r.rank,
                "score": r.score,
                "values": dict(r.values),
                "normalized": dict(r.normalized),
            }
            for r in ranking.rows
        ],
    }


def factor_payload(report: FactorReport) -> dict:
    lm = report.loadings
    return {
        "variable_labels": list(lm.variable_labels),
        "factor_labels": list(lm.factor_labels),
        "loadings": [[float(v) for v in row] for row in lm.loadings],
        "suppressed": [[bool(v) for v in row] for row in report.suppressed],
        "suppression_threshold": report.suppression_threshold,
        "variance_explained": list(report.variance_explained),
        "total_variance": report.total_variance,
        "retention_rule": report.retention_rule,
    }


def dynamics_payload(trajectory_list, trends, chart: dict) -> dict:
    return {
        "trajectories": [
            {
                "doi": t.doi,
                "points": [
                    {
                        "snapshot_date": p.snapshot_date.isoformat(),
                        "phase": p.phase,
                        "score": p.score,
                        "rank": p.rank,
                    }
                    for p in t.points
                ],
            }
            for t in trajectory_list
        ],
        "trends": {
            doi: {"trend": trend.value, "color": trend.color}
            for doi, trend in sorted(trends.items())
        },
        "bumpchart": chart,
    }
