import logging
from typing import Dict, Iterable, List, Mapping, Sequence

from pysurgflow.errors import WorkflowInputError, WorkflowValidationError
from pysurgflow.types import ACTIVITY_COLUMNS, Column, Task, require_column, require_task
from pysurgflow.timeline import vocabulary_for

logger = logging.getLogger(__name__)

SequenceScores = Dict[Column, float]


def _check_percent(name: str, value: float):
    if not 0 <= value <= 100:
        raise WorkflowInputError(
            "{} must be a percentage in [0, 100], but got {}".format(name, value)
        )


def s_uni(values: Iterable[float]) -> float:
    """Mean of per-sequence AD-accuracies: the uni-granularity ranking score."""
    collected = list(values)
    if len(collected) == 0:
        raise WorkflowInputError("Cannot aggregate an empty list of scores")
    for value in collected:
        _check_percent("Per-sequence score", value)
    return sum(collected) / len(collected)


def s_activity(components: Sequence[float]) -> float:
    """Activity ranking score: mean of the six per-component scores.

    Args:
        components: verb, target and instrument scores of the left arm, then
            of the right arm.
    """
    if len(components) != len(ACTIVITY_COLUMNS):
        raise WorkflowInputError(
            "Activity score needs {} component scores, but got {}".format(
                len(ACTIVITY_COLUMNS), len(components)
            )
        )
    for value in components:
        _check_percent("Activity component score", value)
    return sum(components) / len(components)


def s_multi(phase: float, step: float, activity: float) -> float:
    """Multi-granularity ranking score: mean of phase, step and activity scores."""
    for value in (phase, step, activity):
        _check_percent("Granularity score", value)
    return (phase + step + activity) / 3


def impute_missing(num_classes: int) -> float:
    """Score of a random guess over num_classes classes, in percent."""
    if type(num_classes) is not int or num_classes < 1:
        raise WorkflowInputError(
            "num_classes must be a positive integer, but got {}".format(num_classes)
        )
    return 100 / num_classes


def column_class_count(column: Column) -> int:
    return len(vocabulary_for(column))


class TeamResult:
    """Per-sequence AD-accuracies of one team (or model) on one task."""

    def __init__(
        self,
        team: str,
        task: Task,
        per_sequence: Mapping[str, Mapping[Column, float]],
        *,
        competing: bool = True,
    ) -> None:
        """Create a new team result.

        Args:
            team: Team or model identifier.
            task: The task the scores were submitted for.
            per_sequence: Map of sequence id to per-column AD-accuracy. Only
                the columns scored by the task are kept; missing ones are
                imputed when the result is ranked.
            competing (optional): False for teams ranked out of competition.

        Raises:
            WorkflowInputError: if a score is outside [0, 100].
        """
        self.team = team
        self.task = require_task(task)
        self.competing = competing

        wanted = set(self.task.columns())
        self.per_sequence: Dict[str, SequenceScores] = {}
        for sequence, scores in per_sequence.items():
            kept: SequenceScores = {}
            for column, value in scores.items():
                column = require_column(column)
                if column not in wanted:
                    continue
                _check_percent("{} {} {}".format(team, sequence, column), value)
                kept[column] = float(value)
            self.per_sequence[str(sequence)] = kept

    def __repr__(self) -> str:
        return "TeamResult({!r}, {}, {} sequences{})".format(
            self.team,
            self.task.value,
            len(self.per_sequence),
            "" if self.competing else ", non-competing",
        )

    def completed(self, test_set: Sequence[str]) -> Dict[str, SequenceScores]:
        """Per-sequence scores over the whole test set, with gaps imputed.

        A missing sequence or column is scored as a random guess over that
        column's classes.

        Raises:
            WorkflowValidationError: if the result names a sequence outside the
                test set.
        """
        unknown = sorted(set(self.per_sequence) - set(test_set))
        if len(unknown) != 0:
            raise WorkflowValidationError(
                "{} reports sequences outside the test set: {}".format(
                    self.team, ", ".join(unknown)
                )
            )

        completed: Dict[str, SequenceScores] = {}
        for sequence in test_set:
            given = self.per_sequence.get(sequence, {})
            scores: SequenceScores = {}
            for column in self.task.columns():
                if column in given:
                    scores[column] = given[column]
                else:
                    scores[column] = impute_missing(column_class_count(column))
                    logger.info(
                        "Imputing %s for %s, sequence %s, column %s",
                        scores[column],
                        self.team,
                        sequence,
                        column,
                    )
            completed[sequence] = scores
        return completed


TeamResult.__module__ = "pysurgflow"


def task_score(task: Task, scores: Mapping[Column, float]) -> float:
    """Combine one sequence's per-column AD-accuracies into the task score."""
    task = require_task(task)
    if task == Task.phase:
        return scores[Column.phase]
    if task == Task.step:
        return scores[Column.step]
    activity = s_activity([scores[c] for c in ACTIVITY_COLUMNS])
    if task == Task.activity:
        return activity
    return s_multi(scores[Column.phase], scores[Column.step], activity)


def aggregate_task_score(task: Task, per_sequence: Mapping[str, SequenceScores]) -> float:
    """Official team score: s_uni per column, then s_activity / s_multi."""
    task = require_task(task)
    means = {
        column: s_uni(scores[column] for scores in per_sequence.values())
        for column in task.columns()
    }
    return task_score(task, means)


def sequence_ids(results: Iterable[TeamResult]) -> List[str]:
    ids = set()
    for result in results:
        ids.update(result.per_sequence)
    return sorted(ids)
