from typing import Dict, Iterable, NamedTuple

from pysurgflow.errors import WorkflowInputError
from pysurgflow.types import ACTIVITY_COLUMNS, Column, Task
from pysurgflow.timeline import DiscreteSequence, align_pair, vocabulary_for
from pysurgflow.metrics.appdep import ADConfig, ad_scores, frame_scores
from pysurgflow.metrics.scores import ScoreSet


class ColumnScores(NamedTuple):
    """The eight scores of one column: frame-by-frame then application-dependent."""

    frame: ScoreSet
    ad: ScoreSet

    @classmethod
    def mean(cls, rows: Iterable["ColumnScores"]) -> "ColumnScores":
        collected = list(rows)
        return cls(
            ScoreSet.mean(r.frame for r in collected),
            ScoreSet.mean(r.ad for r in collected),
        )


def evaluate_pair(
    gt: DiscreteSequence,
    pred: DiscreteSequence,
    columns: Iterable[Column] = Column,
    cfg: ADConfig = None,
) -> Dict[Column, ColumnScores]:
    """Score a predicted sequence against ground truth, column by column.

    The sequences are aligned first (the longer one is truncated).

    Raises:
        WorkflowValidationError: if the rates differ.
        VocabularyError: if a label is outside its column's vocabulary.
    """
    if cfg is None:
        cfg = ADConfig(rate_hz=gt.rate_hz)
    aligned = align_pair(gt, pred)

    result: Dict[Column, ColumnScores] = {}
    for column in columns:
        vocab = vocabulary_for(column)
        gt_labels, pred_labels = aligned.labels(column)
        result[column] = ColumnScores(
            frame_scores(gt_labels, pred_labels, vocab),
            ad_scores(gt_labels, pred_labels, vocab, cfg),
        )
    return result


def activity_score_set(
    gt: DiscreteSequence, pred: DiscreteSequence, cfg: ADConfig = None
) -> ScoreSet:
    """Unweighted mean of the six verb/target/instrument AD score sets."""
    scores = evaluate_pair(gt, pred, ACTIVITY_COLUMNS, cfg)
    return ScoreSet.mean(scores[column].ad for column in ACTIVITY_COLUMNS)


def task_score_set(task: Task, scores: Dict[Column, ColumnScores]) -> ColumnScores:
    """Combine per-column scores into the task's scores.

    Phase and step use their column; activity averages its six columns;
    multi averages the phase, step and activity results.

    Raises:
        WorkflowInputError: if a column the task needs is missing.
    """
    missing = [str(c) for c in task.columns() if c not in scores]
    if len(missing) != 0:
        raise WorkflowInputError(
            "Cannot score task {} without columns: {}".format(
                task.value, ", ".join(missing)
            )
        )

    if task == Task.phase:
        return scores[Column.phase]
    if task == Task.step:
        return scores[Column.step]

    activity = ColumnScores.mean(scores[c] for c in ACTIVITY_COLUMNS)
    if task == Task.activity:
        return activity
    return ColumnScores.mean([scores[Column.phase], scores[Column.step], activity])
