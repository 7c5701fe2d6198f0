from typing import Sequence, Tuple

import numpy as np
from sklearn.metrics import confusion_matrix

from pysurgflow.errors import WorkflowValidationError
from pysurgflow.timeline import LabelVocabulary


class ConfusionMatrix:
    """Frame counts with rows = ground truth and columns = prediction."""

    def __init__(self, classes: Sequence[str], counts: np.ndarray) -> None:
        counts = np.asarray(counts, dtype=np.int64)
        if counts.shape != (len(classes), len(classes)):
            raise WorkflowValidationError(
                "Confusion counts of shape {} do not match {} classes".format(
                    counts.shape, len(classes)
                )
            )
        if (counts < 0).any():
            raise WorkflowValidationError("Confusion counts must be nonnegative")
        counts.setflags(write=False)
        self.classes: Tuple[str, ...] = tuple(classes)
        self.counts = counts

    @property
    def total(self) -> int:
        return int(self.counts.sum())

    def count(self, gt: str, pred: str) -> int:
        return int(self.counts[self.classes.index(gt), self.classes.index(pred)])

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, ConfusionMatrix)
            and self.classes == other.classes
            and np.array_equal(self.counts, other.counts)
        )

    def __repr__(self) -> str:
        return "ConfusionMatrix({}, {})".format(list(self.classes), self.counts.tolist())


ConfusionMatrix.__module__ = "pysurgflow"


def confusion(
    gt: Sequence[str], pred: Sequence[str], vocab: LabelVocabulary
) -> ConfusionMatrix:
    """Tally ground-truth/prediction label pairs over the vocabulary classes.

    Raises:
        WorkflowValidationError: if the sequences have different lengths.
        VocabularyError: if a label is not in the vocabulary.
    """
    if len(gt) != len(pred):
        raise WorkflowValidationError(
            "Length mismatch: {} ground-truth frames vs {} predicted frames".format(
                len(gt), len(pred)
            )
        )
    component = vocab.component.value
    y_true = [vocab.normalize(label, component) for label in gt]
    y_pred = [vocab.normalize(label, component) for label in pred]

    if len(y_true) == 0:
        return ConfusionMatrix(vocab.labels, np.zeros((len(vocab), len(vocab))))

    counts = confusion_matrix(y_true, y_pred, labels=list(vocab.labels))
    return ConfusionMatrix(vocab.labels, counts)
