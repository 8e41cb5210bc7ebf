import json
from datetime import date

import numpy as np
import pytest

from alescore import (
    RankTrajectory,
    Trend,
    classify_trend,
    composite_scores,
    export_bumpchart,
    metric_totals,
    parse_snapshot,
    preset_weights,
    score_pipeline,
    trajectories,
)
from alescore.dynamics import TrajectoryPoint
from alescore.errors import AlignmentError, DomainError
from alescore.scoring import ArticleMetrics, Snapshot, WeightVector

from helpers import random_snapshot


def make_trajectory(ranks, doi="10.1/a"):
    points = tuple(
        TrajectoryPoint(snapshot_date=date(2012 + i, 10, 1), phase=i + 1,
                        score=1.0 / (r + 1), rank=r)
        for i, r in enumerate(ranks)
    )
    return RankTrajectory(doi, points)


def simple_rankings():
    w = WeightVector((0.5, 0.5), ("m1", "m2"))
    snaps = []
    for d, (va, vb) in [(date(2012, 10, 10), ((9, 9), (1, 1))),
                        (date(2013, 8, 27), ((1, 1), (9, 9)))]:
        articles = (
            ArticleMetrics("10.1/a", "2012-06", "s", {"m1": va[0], "m2": va[1]}),
            ArticleMetrics("10.1/b", "2012-06", "s", {"m1": vb[0], "m2": vb[1]}),
        )
        snaps.append(Snapshot(d, articles, ("m1", "m2")))
    return [composite_scores(s, w) for s in snaps]


@pytest.fixture(scope="module")
def corpus_rankings(corpus_dir):
    snaps = sorted((parse_snapshot(p) for p in corpus_dir.iterdir()),
                   key=lambda s: s.snapshot_date)
    return [score_pipeline(s, s.snapshot_date) for s in snaps]


class TestTrajectories:
    def test_two_rankings_two_articles(self):
        trajs = trajectories(simple_rankings())
        assert len(trajs) == 2
        by_doi = {t.doi: t for t in trajs}
        assert by_doi["10.1/a"].ranks() == (1, 2)
        assert by_doi["10.1/b"].ranks() == (2, 1)

    def test_requires_two_rankings(self):
        with pytest.raises(DomainError):
            trajectories(simple_rankings()[:1])

    def test_doi_mismatch_lists_difference(self):
        first, second = simple_rankings()
        extra = ArticleMetrics("10.1/zz", "2012-06", "s", {"m1": 5, "m2": 5})
        bigger = Snapshot(date(2013, 8, 27),
                          (ArticleMetrics("10.1/a", "2012-06", "s", {"m1": 1, "m2": 1}),
                           ArticleMetrics("10.1/b", "2012-06", "s", {"m1": 9, "m2": 9}),
                           extra),
                          ("m1", "m2"))
        second = composite_scores(bigger, WeightVector((0.5, 0.5), ("m1", "m2")))
        with pytest.raises(AlignmentError) as err:
            trajectories([first, second])
        assert err.value.extra == ("10.1/zz",)

    def test_dates_must_increase(self):
        first, second = simple_rankings()
        with pytest.raises(DomainError):
            trajectories([second, first])

    def test_fixture_corpus_yields_eleven_three_point_trajectories(self, corpus_rankings):
        trajs = trajectories(corpus_rankings)
        assert len(trajs) == 11
        assert all(len(t.points) == 3 for t in trajs)
        phases = [p.phase for p in trajs[0].points]
        assert phases == [1, 2, 3]


class TestClassifyTrend:
    def test_rising_ranks_are_upward_red(self):
        trend = classify_trend(make_trajectory((37, 28, 13)))
        assert trend is Trend.UPWARD
        assert trend.color == "red"

    def test_steady_ranks_are_flat_yellow(self):
        trend = classify_trend(make_trajectory((5, 5, 5)))
        assert trend is Trend.FLAT
        assert trend.color == "yellow"

    def test_falling_ranks_are_downward_green(self):
        trend = classify_trend(make_trajectory((2, 7, 9)))
        assert trend is Trend.DOWNWARD
        assert trend.color == "green"

    def test_only_endpoints_matter(self):
        base = classify_trend(make_trajectory((10, 4)))
        wiggly = classify_trend(make_trajectory((10, 30, 4)))
        assert base is wiggly is Trend.UPWARD
        assert classify_trend(make_trajectory((3, 1, 3))) is Trend.FLAT

    def test_short_trajectory_rejected(self):
        with pytest.raises(DomainError):
            classify_trend(make_trajectory((4,)))

    def test_trend_classes_partition_any_set(self):
        rng = np.random.default_rng(127)
        for _ in range(20):
            n = int(rng.integers(2, 30))
            ranks_first = rng.permutation(n) + 1
            ranks_last = rng.permutation(n) + 1
            trends = [
                classify_trend(make_trajectory((int(a), int(b)), doi=f"10.1/{i}"))
                for i, (a, b) in enumerate(zip(ranks_first, ranks_last))
            ]
            counts = {t: trends.count(t) for t in Trend}
            assert sum(counts.values()) == n


class TestMetricTotals:
    def test_single_snapshot_sum(self):
        articles = (
            ArticleMetrics("10.1/a", "2012-06", "s", {"citations": 3.0}),
            ArticleMetrics("10.1/b", "2012-06", "s", {"citations": 1.0}),
        )
        series = metric_totals([Snapshot(date(2012, 10, 10), articles, ("citations",))])
        assert series.totals["citations"] == ((date(2012, 10, 10), 4.0),)

    def test_zero_metric_totals_zero(self):
        articles = (
            ArticleMetrics("10.1/a", "2012-06", "s", {"facebook": 0.0}),
        )
        series = metric_totals([Snapshot(date(2012, 10, 10), articles, ("facebook",))])
        assert series.totals["facebook"][0][1] == 0.0

    def test_fixture_capture_total(self, phase1_snapshot):
        series = metric_totals([phase1_snapshot])
        assert series.totals["citeulike"][0][1] == 65.0

    def test_article_order_irrelevant(self):
        rng = np.random.default_rng(131)
        snap = random_snapshot(rng, 17)
        shuffled = Snapshot(snap.snapshot_date,
                            tuple(reversed(snap.articles)), snap.profile)
        assert metric_totals([snap]).totals == metric_totals([shuffled]).totals

    def test_empty_input_rejected(self):
        with pytest.raises(DomainError):
            metric_totals([])


class TestExportBumpchart:
    def test_two_articles_two_phases(self):
        trajs = trajectories(simple_rankings())
        trends = {t.doi: classify_trend(t) for t in trajs}
        doc = export_bumpchart(trajs, trends)
        assert doc["kind"] == "bumpchart"
        assert len(doc["snapshots"]) == 2
        assert len(doc["articles"]) == 2
        assert [len(a["ranks"]) for a in doc["articles"]] == [2, 2]

    def test_round_trip_through_json(self):
        trajs = trajectories(simple_rankings())
        trends = {t.doi: classify_trend(t) for t in trajs}
        doc = export_bumpchart(trajs, trends)
        assert json.loads(json.dumps(doc)) == doc

    def test_fixture_orders_by_first_phase_rank(self, corpus_rankings):
        trajs = trajectories(corpus_rankings)
        trends = {t.doi: classify_trend(t) for t in trajs}
        doc = export_bumpchart(trajs, trends)
        assert len(doc["articles"]) == 11
        first_ranks = [a["ranks"][0] for a in doc["articles"]]
        assert first_ranks == sorted(first_ranks)
        assert [a["doi"] for a in doc["articles"]][:1] == ["10.1371/journal.pcbi.1002358"]
        for a in doc["articles"]:
            assert a["color"] == {"upward": "red", "downward": "green",
                                  "flat": "yellow"}[a["trend"]]

    def test_trend_alignment_enforced(self):
        trajs = trajectories(simple_rankings())
        with pytest.raises(AlignmentError):
            export_bumpchart(trajs, {"10.1/a": Trend.FLAT})

    def test_trajectory_invariants(self):
        with pytest.raises(DomainError):
            make_trajectory((0, 1))
        with pytest.raises(DomainError):
            RankTrajectory("10.1/a", (
                TrajectoryPoint(date(2013, 1, 1), 1, 0.5, 1),
                TrajectoryPoint(date(2012, 1, 1), 2, 0.5, 2),
            ))
