import logging
from typing import Iterator, List, NamedTuple, Tuple

from pysurgflow.errors import WorkflowValidationError
from pysurgflow.types import Column
from pysurgflow.timeline.discrete import DiscreteSequence

logger = logging.getLogger(__name__)


class AlignedPair(NamedTuple):
    gt: DiscreteSequence
    pred: DiscreteSequence
    warnings: Tuple[str, ...]

    @property
    def length(self) -> int:
        return len(self.gt)

    def pairs(self, column: Column) -> Iterator[Tuple[str, str]]:
        return zip(self.gt.column(column), self.pred.column(column))

    def labels(self, column: Column) -> Tuple[List[str], List[str]]:
        return self.gt.column(column), self.pred.column(column)


def align_pair(gt: DiscreteSequence, pred: DiscreteSequence) -> AlignedPair:
    """Pair a ground-truth and a predicted sequence frame by frame.

    If the lengths differ, the longer sequence is truncated to the shorter
    one and a warning is recorded (and logged).

    Raises:
        WorkflowValidationError: if the two sequences have different rates.
    """
    if gt.rate_hz != pred.rate_hz:
        raise WorkflowValidationError(
            "Rate mismatch: ground truth at {} Hz, prediction at {} Hz".format(
                gt.rate_hz, pred.rate_hz
            )
        )

    warnings: List[str] = []
    if len(gt) != len(pred):
        length = min(len(gt), len(pred))
        message = (
            "Length mismatch: ground truth has {} frames, prediction has {}; "
            "truncated to {}".format(len(gt), len(pred), length)
        )
        logger.warning(message)
        warnings.append(message)
        gt, pred = gt.truncate(length), pred.truncate(length)

    return AlignedPair(gt, pred, tuple(warnings))
