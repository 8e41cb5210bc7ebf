"""Command-line interface.

Subcommands: weights, score, dynamics, fa, serve. Results print as JSON
documents on stdout; diagnostics go to stderr. Exit codes: 0 success,
1 domain/input error, 2 usage error.
"""

from __future__ import annotations

import argparse
import os
import sys
from datetime import date
from pathlib import Path

from . import __version__
from .ahp import consistency, principal_weights
from .dynamics import classify_trend, export_bumpchart, trajectories
from .errors import EngineError, SchemaError
from .factors import DataMatrix, fit_factors
from .io import (
    ResultDocument,
    dynamics_payload,
    factor_payload,
    file_digest,
    parse_matrix_file,
    parse_snapshot,
    ranking_payload,
    result_to_json,
    weights_payload,
)
from .presets import PHASE_MATRICES, preset_weights
from .scoring import score_pipeline


def _parse_date(text: str) -> date:
    try:
        return date.fromisoformat(text)
    except ValueError:
        raise SchemaError(f"bad date {text!r}; expected YYYY-MM-DD") from None


def _emit(kind: str, payload: dict, digests: dict[str, str]) -> None:
    doc = ResultDocument(kind=kind, payload=payload, engine_version=__version__,
                         input_digests=digests)
    sys.stdout.write(result_to_json(doc))


def _cmd_weights(args) -> int:
    digests: dict[str, str] = {}
    if args.matrix:
        matrix = parse_matrix_file(args.matrix)
        digests[str(args.matrix)] = file_digest(args.matrix)
        weights = principal_weights(matrix)
        report = consistency(matrix, weights)
        phase = None
    else:
        phase = args.phase
        weights = preset_weights(phase)
        # middle phases ship constants without a source matrix
        matrix = PHASE_MATRICES.get(phase)
        report = consistency(matrix) if matrix is not None else None
    if report is not None and not report.acceptable:
        sys.stderr.write(
            f"warning: consistency ratio {report.cr:.4f} exceeds 0.1\n")
    _emit("weights", weights_payload(weights, report, phase=phase), digests)
    return 0


def _cmd_score(args) -> int:
    snapshot = parse_snapshot(args.snapshot)
    digests = {str(args.snapshot): file_digest(args.snapshot)}
    override = None
    if args.matrix:
        override = parse_matrix_file(args.matrix)
        digests[str(args.matrix)] = file_digest(args.matrix)
    ranking = score_pipeline(snapshot, _parse_date(args.as_of),
                             matrix_override=override)
    _emit("ranking", ranking_payload(ranking), digests)
    return 0


def _cmd_dynamics(args) -> int:
    snapshots = [parse_snapshot(p) for p in args.snapshots]
    snapshots.sort(key=lambda s: s.snapshot_date)
    digests = {str(p): file_digest(p) for p in args.snapshots}
    rankings = [score_pipeline(s, s.snapshot_date) for s in snapshots]
    trajs = trajectories(rankings)
    trends = {t.doi: classify_trend(t) for t in trajs}
    chart = export_bumpchart(trajs, trends)
    _emit("dynamics", dynamics_payload(trajs, trends, chart), digests)
    return 0


def _cmd_fa(args) -> int:
    snapshot = parse_snapshot(args.snapshot)
    data = DataMatrix.from_snapshot(snapshot)
    report = fit_factors(data, n_factors=args.factors)
    _emit("factor-report", factor_payload(report),
          {str(args.snapshot): file_digest(args.snapshot)})
    return 0


def _cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    corpus = args.corpus or os.environ.get("ALE_CORPUS_DIR")
    if not corpus:
        raise SchemaError("no corpus directory; pass --corpus or set ALE_CORPUS_DIR")
    app = create_app(corpus, ui_dir=args.ui)
    uvicorn.run(app, host=args.host, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="alescore",
        description="Composite scoring and rank tracking for article-level metrics")
    parser.add_argument("--version", action="version", version=f"alescore {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("weights", help="derive weights from a judgment matrix")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--matrix", type=Path, help="judgment matrix file")
    group.add_argument("--phase", type=int, help="print the shipped preset for a phase")
    p.set_defaults(func=_cmd_weights)

    p = sub.add_parser("score", help="score one snapshot")
    p.add_argument("--snapshot", type=Path, required=True)
    p.add_argument("--as-of", dest="as_of", required=True, metavar="DATE")
    p.add_argument("--matrix", type=Path, help="judgment matrix overriding the preset")
    p.set_defaults(func=_cmd_score)

    p = sub.add_parser("dynamics", help="trajectories and trends over snapshots")
    p.add_argument("--snapshots", type=Path, nargs="+", required=True)
    p.set_defaults(func=_cmd_dynamics)

    p = sub.add_parser("fa", help="factor-analyze a snapshot's metrics")
    p.add_argument("--snapshot", type=Path, required=True)
    p.add_argument("--factors", type=int, default=None,
                   help="fixed factor count (default: eigenvalue > 1 rule)")
    p.set_defaults(func=_cmd_fa)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--corpus", help="snapshot directory (default: $ALE_CORPUS_DIR)")
    p.add_argument("--ui", help="static UI directory to mount at /")
    p.set_defaults(func=_cmd_serve)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except EngineError as exc:
        sys.stderr.write(f"error: {exc.code}: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
