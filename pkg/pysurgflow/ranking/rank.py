import statistics
from enum import Enum
from typing import Dict, List, Mapping, NamedTuple, Sequence

from pysurgflow.errors import WorkflowInputError
from pysurgflow.types import Task, require_task
from pysurgflow.ranking.aggregate import (
    SequenceScores,
    TeamResult,
    aggregate_task_score,
    sequence_ids,
    task_score,
)

# aggregates closer than this are treated as ties
TIE_DECIMALS = 9


class RankingMethod(Enum):
    """Enum of the ranking methods compared for stability."""

    mean_then_rank = "mean-then-rank"
    median_then_rank = "median-then-rank"
    rank_then_mean_rank = "rank-then-mean-rank"
    rank_then_median_rank = "rank-then-median-rank"

    @property
    def ranks_first(self) -> bool:
        """Whether teams are ranked per sequence before aggregating."""
        return self in (
            RankingMethod.rank_then_mean_rank,
            RankingMethod.rank_then_median_rank,
        )


RankingMethod.__module__ = "pysurgflow"

# the official challenge ranking
OFFICIAL_METHOD = RankingMethod.mean_then_rank


def competition_rank(
    values: Mapping[str, float], *, descending: bool = True
) -> Dict[str, int]:
    """Rank values with standard competition ties (1, 1, 3)."""
    keyed = {team: round(value, TIE_DECIMALS) for team, value in values.items()}
    ranks = {}
    for team, value in keyed.items():
        if descending:
            better = sum(1 for other in keyed.values() if other > value)
        else:
            better = sum(1 for other in keyed.values() if other < value)
        ranks[team] = 1 + better
    return ranks


class MethodRanking(NamedTuple):
    method: RankingMethod
    scores: Dict[str, float]
    ranks: Dict[str, int]


def _check_results(results: Sequence[TeamResult], task: Task):
    if len(results) == 0:
        raise WorkflowInputError("Cannot rank an empty list of results")
    other = [r.team for r in results if r.task != task]
    if len(other) != 0:
        raise WorkflowInputError(
            "Results for other tasks than {}: {}".format(task.value, ", ".join(other))
        )
    teams = [r.team for r in results]
    if len(set(teams)) != len(teams):
        raise WorkflowInputError("Duplicate team identifiers in results")


def rank(
    results: Sequence[TeamResult],
    task: Task,
    method: RankingMethod = OFFICIAL_METHOD,
    test_set: Sequence[str] = None,
) -> MethodRanking:
    """Rank teams on one task with one ranking method.

    mean-then-rank ranks the official aggregate (s_uni, s_activity, s_multi);
    median-then-rank ranks the median per-sequence task score;
    rank-then-mean-rank and rank-then-median-rank rank the teams on every
    sequence, then rank the mean (or median) of those ranks. Higher scores
    rank first; lower aggregated ranks rank first.

    Args:
        results: One TeamResult per team, all for task.
        task: The task being ranked.
        method (optional): Ranking method. Defaults to mean-then-rank.
        test_set (optional): Sequence ids of the test set. Defaults to every
            sequence reported by any team. Gaps are imputed.

    Returns:
        The aggregate value and rank of every team.

    Raises:
        WorkflowInputError: if results is empty, mixes tasks or repeats a team.
        WorkflowValidationError: if a team reports a sequence outside the test set.
    """
    task = require_task(task)
    _check_results(results, task)
    if test_set is None:
        test_set = sequence_ids(results)
    if len(test_set) == 0:
        raise WorkflowInputError("Cannot rank without any test sequence")

    completed: Dict[str, Dict[str, SequenceScores]] = {
        r.team: r.completed(test_set) for r in results
    }

    if method == RankingMethod.mean_then_rank:
        scores = {
            team: aggregate_task_score(task, per_sequence)
            for team, per_sequence in completed.items()
        }
        return MethodRanking(method, scores, competition_rank(scores))

    per_sequence_scores = {
        team: [task_score(task, per_sequence[s]) for s in test_set]
        for team, per_sequence in completed.items()
    }

    if method == RankingMethod.median_then_rank:
        scores = {
            team: float(statistics.median(values))
            for team, values in per_sequence_scores.items()
        }
        return MethodRanking(method, scores, competition_rank(scores))

    ranks_by_team: Dict[str, List[int]] = {team: [] for team in completed}
    for i, _ in enumerate(test_set):
        ranks = competition_rank(
            {team: values[i] for team, values in per_sequence_scores.items()}
        )
        for team, r in ranks.items():
            ranks_by_team[team].append(r)

    combine = (
        statistics.mean
        if method == RankingMethod.rank_then_mean_rank
        else statistics.median
    )
    scores = {team: float(combine(r)) for team, r in ranks_by_team.items()}
    return MethodRanking(method, scores, competition_rank(scores, descending=False))
