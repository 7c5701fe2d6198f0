import pytest

import pysurgflow as sf

from pysurgflow.ranking.rank_test import SPLIT, results


def test_rank_table_all_methods():
    table = sf.rank_table(results(SPLIT), sf.Task.phase)
    assert table.methods == list(sf.RankingMethod)
    assert [row.team for row in table.rows] == ["Y", "X", "Z"]
    assert table.rows[0].ranks[sf.RankingMethod.median_then_rank] == 2
    assert table.verdict.tie_groups == [["X", "Y"]]


def test_rank_table_competing_verdict():
    given = results(SPLIT)
    given[1] = sf.TeamResult(
        "Y",
        sf.Task.phase,
        {"s{}".format(i): {sf.Column.phase: v} for i, v in enumerate(SPLIT["Y"])},
        competing=False,
    )
    table = sf.rank_table(
        given,
        sf.Task.phase,
        [sf.RankingMethod.mean_then_rank, sf.RankingMethod.median_then_rank],
    )
    assert not table.verdict.stable
    assert table.competing_verdict.stable
    assert [row.competing for row in table.rows] == [False, True, True]


def test_rank_table_needs_a_method():
    with pytest.raises(sf.WorkflowInputError):
        sf.rank_table(results(SPLIT), sf.Task.phase, [])
