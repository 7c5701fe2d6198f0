import pytest

import pysurgflow as sf

from pysurgflow.ranking.rank_test import SPLIT, results


def rankings(scores, methods):
    return [sf.rank(results(scores), sf.Task.phase, method) for method in methods]


def test_disagreeing_methods_tie():
    verdict = sf.stability(
        rankings(
            SPLIT, [sf.RankingMethod.mean_then_rank, sf.RankingMethod.median_then_rank]
        )
    )
    assert not verdict.stable
    assert verdict.tie_groups == [["X", "Y"]]
    assert str(verdict) == "tie: {X, Y}"


def test_agreeing_methods_are_stable():
    scores = {"A": [90.0, 91.0, 92.0], "B": [50.0, 60.0, 70.0], "C": [1.0, 2.0, 3.0]}
    verdict = sf.stability(rankings(scores, list(sf.RankingMethod)))
    assert verdict.stable
    assert verdict.tie_groups == []


def test_tie_under_one_method_only():
    # rank-then-mean ties X and Y, mean-then-rank separates them
    verdict = sf.stability(
        rankings(
            SPLIT,
            [sf.RankingMethod.mean_then_rank, sf.RankingMethod.rank_then_mean_rank],
        )
    )
    assert verdict.tie_groups == [["X", "Y"]]


def test_restricted_to_teams():
    verdict = sf.stability(
        rankings(
            SPLIT, [sf.RankingMethod.mean_then_rank, sf.RankingMethod.median_then_rank]
        ),
        ["X", "Z"],
    )
    assert verdict.stable


def test_stability_checks():
    with pytest.raises(sf.WorkflowInputError):
        sf.stability([])


def ranking(method, order):
    ranks = {team: i + 1 for i, team in enumerate(order)}
    return sf.MethodRanking(method, {t: float(-r) for t, r in ranks.items()}, ranks)


def test_top_four_reordered_by_every_method():
    methods = list(sf.RankingMethod)
    orders = ["ABCDEF", "BCDAEF", "DACBEF", "CDBAEF"]
    verdict = sf.stability([ranking(m, o) for m, o in zip(methods, orders)])
    assert verdict.tie_groups == [["A", "B", "C", "D"]]


def test_fifth_and_sixth_swapped():
    methods = list(sf.RankingMethod)
    orders = ["ABCDEF", "ABCDFE", "ABCDEF", "ABCDEF"]
    verdict = sf.stability([ranking(m, o) for m, o in zip(methods, orders)])
    assert verdict.tie_groups == [["E", "F"]]
    assert str(verdict) == "tie: {E, F}"
