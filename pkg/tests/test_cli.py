import json

import numpy as np
import pytest

from alescore import preset_weights
from alescore.cli import main

from helpers import random_snapshot
from alescore import write_snapshot


def run_cli(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestWeightsCommand:
    def test_matrix_file(self, capsys, data_dir):
        code, out, err = run_cli(capsys, ["weights", "--matrix",
                                          str(data_dir / "phase1.matrix")])
        assert code == 0
        doc = json.loads(out)
        assert doc["kind"] == "weights"
        weights = doc["payload"]["weights"]
        assert len(weights) == 7
        assert abs(sum(weights) - 1.0) < 1e-9
        expected = preset_weights(1).weights
        assert max(abs(a - b) for a, b in zip(weights, expected)) < 0.005
        assert doc["payload"]["consistency"]["converged"] is True
        assert list(doc["input_digests"]) == [str(data_dir / "phase1.matrix")]

    def test_phase_preset(self, capsys):
        code, out, _ = run_cli(capsys, ["weights", "--phase", "2"])
        assert code == 0
        doc = json.loads(out)
        assert doc["payload"]["weights"] == list(preset_weights(2).weights)
        assert "consistency" not in doc["payload"]

    def test_phase_with_shipped_matrix_reports_consistency(self, capsys):
        code, out, _ = run_cli(capsys, ["weights", "--phase", "1"])
        assert code == 0
        doc = json.loads(out)
        assert doc["payload"]["weights"] == list(preset_weights(1).weights)
        assert doc["payload"]["consistency"]["cr"] < 0.1

    def test_non_reciprocal_matrix_fails_with_diagnostic(self, capsys, tmp_path):
        path = tmp_path / "bad.matrix"
        path.write_text('{"n": 2, "labels": ["a", "b"], "full": [[1, 2], [3, 1]]}')
        code, out, err = run_cli(capsys, ["weights", "--matrix", str(path)])
        assert code == 1
        assert out == ""
        assert "reciprocity" in err
        assert err.count("\n") == 1

    def test_unknown_phase_fails(self, capsys):
        code, _, err = run_cli(capsys, ["weights", "--phase", "9"])
        assert code == 1
        assert "unknown_phase" in err

    def test_byte_identical_reruns(self, capsys, data_dir):
        argv = ["weights", "--matrix", str(data_dir / "phase1.matrix")]
        _, first, _ = run_cli(capsys, argv)
        _, second, _ = run_cli(capsys, argv)
        assert first == second


class TestScoreCommand:
    def test_fixture_ranking(self, capsys, corpus_dir):
        code, out, _ = run_cli(capsys, [
            "score", "--snapshot", str(corpus_dir / "alm-2012-10-10.csv"),
            "--as-of", "2012-10-10"])
        assert code == 0
        doc = json.loads(out)
        assert doc["kind"] == "ranking"
        assert doc["payload"]["phase"] == 1
        rows = doc["payload"]["rows"]
        assert rows[0]["doi"] == "10.1371/journal.pcbi.1002358"
        assert rows[0]["rank"] == 1

    def test_matrix_override(self, capsys, corpus_dir, tmp_path):
        path = tmp_path / "uniform.matrix"
        labels = ["citeulike", "mendeley", "html_views", "pdf_downloads",
                  "citations", "facebook", "twitter"]
        path.write_text(json.dumps({"n": 7, "labels": labels, "upper": ["1"] * 21}))
        code, out, _ = run_cli(capsys, [
            "score", "--snapshot", str(corpus_dir / "alm-2012-10-10.csv"),
            "--as-of", "2012-10-10", "--matrix", str(path)])
        assert code == 0
        doc = json.loads(out)
        weights = doc["payload"]["weights"]["weights"]
        assert max(abs(w - 1 / 7) for w in weights) < 1e-12

    def test_byte_identical_reruns(self, capsys, corpus_dir):
        argv = ["score", "--snapshot", str(corpus_dir / "alm-2012-10-10.csv"),
                "--as-of", "2012-10-10"]
        _, first, _ = run_cli(capsys, argv)
        _, second, _ = run_cli(capsys, argv)
        assert first == second

    def test_bad_date(self, capsys, corpus_dir):
        code, _, err = run_cli(capsys, [
            "score", "--snapshot", str(corpus_dir / "alm-2012-10-10.csv"),
            "--as-of", "notadate"])
        assert code == 1
        assert "error:" in err

    def test_missing_file(self, capsys):
        code, _, err = run_cli(capsys, [
            "score", "--snapshot", "nope.csv", "--as-of", "2012-10-10"])
        assert code == 1


class TestDynamicsCommand:
    def test_fixture_corpus(self, capsys, corpus_dir):
        files = sorted(str(p) for p in corpus_dir.iterdir())
        code, out, _ = run_cli(capsys, ["dynamics", "--snapshots", *files])
        assert code == 0
        doc = json.loads(out)
        assert doc["kind"] == "dynamics"
        assert len(doc["payload"]["trajectories"]) == 11
        assert len(doc["payload"]["bumpchart"]["articles"]) == 11
        assert set(doc["payload"]["trends"]) == {
            t["doi"] for t in doc["payload"]["trajectories"]}


class TestFaCommand:
    def test_factor_report(self, capsys, tmp_path):
        rng = np.random.default_rng(139)
        snap = random_snapshot(rng, 40)
        path = tmp_path / "snap.csv"
        write_snapshot(snap, path)
        code, out, _ = run_cli(capsys, ["fa", "--snapshot", str(path), "--factors", "2"])
        assert code == 0
        doc = json.loads(out)
        assert doc["kind"] == "factor-report"
        assert len(doc["payload"]["loadings"]) == 7
        assert doc["payload"]["retention_rule"] == "fixed(2)"


class TestUsageErrors:
    def test_unknown_flag_exits_2(self, capsys):
        with pytest.raises(SystemExit) as err:
            main(["weights", "--nonsense"])
        assert err.value.code == 2

    def test_missing_subcommand_exits_2(self, capsys):
        with pytest.raises(SystemExit) as err:
            main([])
        assert err.value.code == 2

    def test_matrix_and_phase_are_exclusive(self, capsys, data_dir):
        with pytest.raises(SystemExit) as err:
            main(["weights", "--matrix", str(data_dir / "phase1.matrix"),
                  "--phase", "1"])
        assert err.value.code == 2
