from typing import Iterable, List, NamedTuple

import numpy as np

from pysurgflow.metrics.confusion import ConfusionMatrix


class ScoreSet(NamedTuple):
    """Balanced accuracy, precision, recall and F1, in percent."""

    accuracy: float
    precision: float
    recall: float
    f1: float

    @classmethod
    def mean(cls, sets: Iterable["ScoreSet"]) -> "ScoreSet":
        """Componentwise unweighted mean of several score sets."""
        collected: List[ScoreSet] = list(sets)
        if len(collected) == 0:
            return cls(0.0, 0.0, 0.0, 0.0)
        values = np.mean(np.array(collected, dtype=np.float64), axis=0)
        return cls(*(float(v) for v in values))

    def format(self, digits: int = 2) -> List[str]:
        return ["{:.{}f}".format(v, digits) for v in self]


def balanced_scores(cm: ConfusionMatrix) -> ScoreSet:
    """Macro-average per-class scores over the classes present in ground truth.

    For each class c present in ground truth: recall_c = TP/(TP+FN),
    precision_c = TP/(TP+FP) (0 when c is never predicted), f1_c the harmonic
    mean of the two (0 when both are 0). Balanced accuracy is the mean recall.
    Classes absent from ground truth are left out. An empty matrix scores 0.
    """
    counts = cm.counts.astype(np.float64)
    tp = np.diag(counts)
    support = counts.sum(axis=1)
    predicted = counts.sum(axis=0)

    present = support > 0
    if not present.any():
        return ScoreSet(0.0, 0.0, 0.0, 0.0)

    recall = np.divide(tp, support, out=np.zeros_like(tp), where=support > 0)
    precision = np.divide(tp, predicted, out=np.zeros_like(tp), where=predicted > 0)
    denom = precision + recall
    f1 = np.divide(
        2 * precision * recall, denom, out=np.zeros_like(tp), where=denom > 0
    )

    balanced_recall = float(recall[present].mean()) * 100
    return ScoreSet(
        accuracy=balanced_recall,
        precision=float(precision[present].mean()) * 100,
        recall=balanced_recall,
        f1=float(f1[present].mean()) * 100,
    )
