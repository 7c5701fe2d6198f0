import json
import logging
from typing import Any, Dict, List, Mapping, Tuple

from pysurgflow.errors import WorkflowInputError
from pysurgflow.types import Column, Task, require_task
from pysurgflow.timeline import DiscreteSequence
from pysurgflow.metrics import (
    ADConfig,
    ColumnScores,
    ScoreSet,
    evaluate_pair,
    task_score_set,
)
from pysurgflow.formats.tabular import render_rows

logger = logging.getLogger(__name__)

SCORE_NAMES = ["accuracy", "precision", "recall", "f1"]
TSV_HEADER = (
    ["sequence"]
    + ["frame_" + name for name in SCORE_NAMES]
    + ["ad_" + name for name in SCORE_NAMES]
)
MEAN_ROW = "Mean"


def _scores_dict(scores: ScoreSet) -> Dict[str, float]:
    return {name: float(value) for name, value in zip(SCORE_NAMES, scores)}


def _pair_dict(scores: ColumnScores) -> Dict[str, Any]:
    return {"frame": _scores_dict(scores.frame), "ad": _scores_dict(scores.ad)}


class EvaluationReport:
    """Per-sequence and mean scores of one task.

    Each row holds the frame-by-frame then the application-dependent balanced
    accuracy, precision, recall and F1, followed by a Mean row.
    """

    def __init__(
        self,
        task: Task,
        sequences: Mapping[str, Dict[Column, ColumnScores]],
        cfg: ADConfig,
    ) -> None:
        self.task = require_task(task)
        self.cfg = cfg
        self.sequences: Dict[str, Dict[Column, ColumnScores]] = dict(sequences)

    def rows(self) -> List[Tuple[str, ColumnScores]]:
        return [
            (sequence, task_score_set(self.task, scores))
            for sequence, scores in self.sequences.items()
        ]

    def mean(self) -> ColumnScores:
        return ColumnScores.mean(scores for _, scores in self.rows())

    def results(self) -> Dict[str, Dict[Column, float]]:
        """Per-sequence AD-accuracy of every column the task scores."""
        return {
            sequence: {c: scores[c].ad.accuracy for c in self.task.columns()}
            for sequence, scores in self.sequences.items()
        }

    def to_tsv(self, digits: int = 2) -> str:
        rows: List[List[str]] = [TSV_HEADER]
        for sequence, scores in self.rows():
            rows.append(
                [sequence] + scores.frame.format(digits) + scores.ad.format(digits)
            )
        mean = self.mean()
        rows.append([MEAN_ROW] + mean.frame.format(digits) + mean.ad.format(digits))
        return render_rows(rows)

    def to_json(self) -> str:
        document = {
            "task": self.task.value,
            "acceptable_delay_ms": self.cfg.acceptable_delay_ms,
            "rate_hz": self.cfg.rate_hz,
            "sequences": [
                {
                    "sequence": sequence,
                    "scores": _pair_dict(task_score_set(self.task, scores)),
                    "columns": {
                        str(column): _pair_dict(scores[column])
                        for column in self.task.columns()
                    },
                }
                for sequence, scores in self.sequences.items()
            ],
            "mean": _pair_dict(self.mean()),
        }
        return json.dumps(document, indent=2) + "\n"


EvaluationReport.__module__ = "pysurgflow"


def evaluate_sequences(
    pairs: Mapping[str, Tuple[DiscreteSequence, DiscreteSequence]],
    task: Task,
    cfg: ADConfig = None,
) -> EvaluationReport:
    """Score several (ground truth, prediction) pairs on one task.

    Raises:
        WorkflowInputError: if no pair is given.
    """
    task = require_task(task)
    if len(pairs) == 0:
        raise WorkflowInputError("No sequences to evaluate")
    if cfg is None:
        first_gt = next(iter(pairs.values()))[0]
        cfg = ADConfig(rate_hz=first_gt.rate_hz)

    sequences = {}
    for sequence, (gt, pred) in pairs.items():
        logger.debug("Evaluating sequence %s", sequence)
        sequences[sequence] = evaluate_pair(gt, pred, task.columns(), cfg)
    return EvaluationReport(task, sequences, cfg)
