"""JSON-over-HTTP service backing the judgment-elicitation UI.

The corpus registry is read once at startup and never mutated; every
computation goes through the same functions the CLI uses, so both surfaces
return identical numbers for identical inputs.
"""

from __future__ import annotations

from datetime import date
from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from . import __version__
from .ahp import consistency, principal_weights, validate_matrix
from .dynamics import classify_trend, export_bumpchart, trajectories
from .errors import EngineError, SchemaError
from .io import (
    dynamics_payload,
    parse_matrix_data,
    parse_snapshot,
    ranking_payload,
    weights_payload,
    _snapshot_from_records,
)
from .scoring import Snapshot, composite_scores, score_pipeline
from .presets import preset_weights


def load_corpus(corpus_dir: str | Path) -> dict[str, Snapshot]:
    """Load every *.csv / *.json snapshot in the directory, keyed by stem."""
    corpus_dir = Path(corpus_dir)
    if not corpus_dir.is_dir():
        raise SchemaError(f"corpus directory {corpus_dir} does not exist")
    registry: dict[str, Snapshot] = {}
    for path in sorted(corpus_dir.iterdir()):
        if path.suffix.lower() in (".csv", ".json"):
            registry[path.stem] = parse_snapshot(path)
    return registry


def _error(status: int, code: str, detail: str, **extra) -> JSONResponse:
    return JSONResponse(status_code=status,
                        content={"error": code, "detail": detail,
                                 "engine_version": __version__, **extra})


def create_app(corpus_dir: str | Path | None = None, *,
               ui_dir: str | Path | None = None) -> FastAPI:
    app = FastAPI(title="alescore", version=__version__)
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["*"], allow_headers=["*"])

    registry: dict[str, Snapshot] = load_corpus(corpus_dir) if corpus_dir else {}
    app.state.registry = registry

    @app.exception_handler(EngineError)
    async def _engine_error(request: Request, exc: EngineError):
        return _error(400, exc.code, str(exc))

    @app.exception_handler(RequestValidationError)
    async def _malformed(request: Request, exc: RequestValidationError):
        return _error(400, "malformed_body", "request body is not valid JSON")

    def _get_snapshot(snapshot_id: str) -> Snapshot | None:
        return registry.get(snapshot_id)

    def _body_snapshot(body: dict) -> tuple[Snapshot | None, JSONResponse | None]:
        if "snapshot_id" in body:
            snapshot = _get_snapshot(str(body["snapshot_id"]))
            if snapshot is None:
                return None, _error(404, "unknown_snapshot",
                                    f"no snapshot {body['snapshot_id']!r} in corpus")
            return snapshot, None
        if "snapshot" in body:
            records = body["snapshot"]
            if not isinstance(records, list):
                return None, _error(400, "malformed_body",
                                    "inline snapshot must be a list of article objects")
            return _snapshot_from_records(records, "inline snapshot"), None
        return None, _error(400, "malformed_body",
                            "body needs snapshot_id or an inline snapshot")

    @app.get("/api/snapshots")
    async def list_snapshots():
        return {
            "engine_version": __version__,
            "snapshots": [
                {
                    "id": sid,
                    "snapshot_date": snap.snapshot_date.isoformat(),
                    "articles": len(snap.articles),
                    "metrics": list(snap.profile),
                }
                for sid, snap in sorted(registry.items(),
                                        key=lambda kv: kv[1].snapshot_date)
            ],
        }

    @app.post("/api/weights")
    async def api_weights(body: dict):
        matrix_doc = body.get("matrix", body)
        matrix = parse_matrix_data(matrix_doc)
        report = validate_matrix(matrix)
        if not report.ok:
            return _error(400, "invalid_matrix", "judgment matrix violates invariants",
                          violations=[
                              {"row": v.row, "col": v.col, "reason": v.reason,
                               "message": v.message}
                              for v in report.violations
                          ])
        weights = principal_weights(matrix)
        return {"engine_version": __version__,
                **weights_payload(weights, consistency(matrix, weights))}

    @app.post("/api/score")
    async def api_score(body: dict):
        snapshot, err = _body_snapshot(body)
        if err is not None:
            return err
        if "phase" in body:
            phase = body["phase"]
            weights = preset_weights(phase)
            ranking = composite_scores(snapshot, weights, phase=phase)
        elif "as_of" in body:
            as_of = _parse_iso(body["as_of"])
            if as_of is None:
                return _error(400, "malformed_body", f"bad as_of {body['as_of']!r}")
            ranking = score_pipeline(snapshot, as_of)
        else:
            return _error(400, "malformed_body", "body needs as_of or phase")
        return {"engine_version": __version__, **ranking_payload(ranking)}

    @app.post("/api/whatif")
    async def api_whatif(body: dict):
        if "matrix" not in body:
            return _error(400, "malformed_body", "body needs a matrix")
        matrix = parse_matrix_data(body["matrix"])
        report = validate_matrix(matrix)
        if not report.ok:
            return _error(400, "invalid_matrix", "judgment matrix violates invariants",
                          violations=[
                              {"row": v.row, "col": v.col, "reason": v.reason,
                               "message": v.message}
                              for v in report.violations
                          ])
        snapshot, err = _body_snapshot(body)
        if err is not None:
            return err
        as_of = snapshot.snapshot_date
        if "as_of" in body:
            as_of = _parse_iso(body["as_of"])
            if as_of is None:
                return _error(400, "malformed_body", f"bad as_of {body['as_of']!r}")
        baseline = score_pipeline(snapshot, as_of)
        candidate = score_pipeline(snapshot, as_of, matrix_override=matrix)
        candidate_rank = {r.doi: r.rank for r in candidate.rows}
        deltas = [
            {
                "doi": r.doi,
                "baseline_rank": r.rank,
                "candidate_rank": candidate_rank[r.doi],
                "delta": r.rank - candidate_rank[r.doi],
            }
            for r in baseline.rows
        ]
        return {
            "engine_version": __version__,
            "phase": baseline.phase,
            "baseline": ranking_payload(baseline),
            "candidate": ranking_payload(candidate),
            "deltas": deltas,
        }

    @app.get("/api/dynamics")
    async def api_dynamics():
        snaps = sorted(registry.values(), key=lambda s: s.snapshot_date)
        if len(snaps) < 2:
            return _error(400, "insufficient_snapshots",
                          f"dynamics needs at least 2 snapshots, corpus has {len(snaps)}")
        rankings = [score_pipeline(s, s.snapshot_date) for s in snaps]
        trajs = trajectories(rankings)
        trends = {t.doi: classify_trend(t) for t in trajs}
        chart = export_bumpchart(trajs, trends)
        return {"engine_version": __version__,
                **dynamics_payload(trajs, trends, chart)}

    if ui_dir:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=str(ui_dir), html=True), name="ui")

    return app


def _parse_iso(value) -> date | None:
    try:
        return date.fromisoformat(str(value))
    except ValueError:
        return None
