from typing import Dict, List, NamedTuple, Sequence

from pysurgflow.errors import WorkflowInputError
from pysurgflow.types import Task, require_task
from pysurgflow.ranking.aggregate import TeamResult
from pysurgflow.ranking.rank import MethodRanking, RankingMethod, rank
from pysurgflow.ranking.stability import StabilityVerdict, stability


class RankRow(NamedTuple):
    team: str
    competing: bool
    scores: Dict[RankingMethod, float]
    ranks: Dict[RankingMethod, int]


class RankTable(NamedTuple):
    task: Task
    methods: List[RankingMethod]
    rows: List[RankRow]
    verdict: StabilityVerdict
    competing_verdict: StabilityVerdict


def rank_table(
    results: Sequence[TeamResult],
    task: Task,
    methods: Sequence[RankingMethod] = tuple(RankingMethod),
    test_set: Sequence[str] = None,
) -> RankTable:
    """Rank every team under several methods and assess stability.

    Rows are sorted by the rank of the first method (the official one by
    default), then by team identifier.
    """
    task = require_task(task)
    methods = list(methods)
    if len(methods) == 0:
        raise WorkflowInputError("At least one ranking method is needed")
    rankings: List[MethodRanking] = [
        rank(results, task, method, test_set) for method in methods
    ]

    rows = [
        RankRow(
            r.team,
            r.competing,
            {m.method: m.scores[r.team] for m in rankings},
            {m.method: m.ranks[r.team] for m in rankings},
        )
        for r in results
    ]
    rows.sort(key=lambda row: (row.ranks[methods[0]], row.team))

    competing = [r.team for r in results if r.competing]
    return RankTable(
        task,
        methods,
        rows,
        stability(rankings),
        stability(rankings, competing),
    )
