import math
from fractions import Fraction
from typing import List, Sequence, Tuple, Union

from pysurgflow.config import DEFAULT_ACCEPTABLE_DELAY_MS, DEFAULT_RATE_HZ
from pysurgflow.errors import WorkflowValidationError, verifyNonNegative, verifyPositive
from pysurgflow.timeline import LabelVocabulary
from pysurgflow.metrics.confusion import confusion
from pysurgflow.metrics.scores import ScoreSet, balanced_scores


class ADConfig:
    """Options of the application-dependent scores.

    Args:
        acceptable_delay_ms (optional): Full width d of the tolerance window
            centred on each ground-truth transition. Defaults to 500 ms.
        rate_hz (optional): Frame rate of the scored sequences. Defaults to 30.
    """

    def __init__(
        self,
        *,
        acceptable_delay_ms: Union[int, float] = DEFAULT_ACCEPTABLE_DELAY_MS,
        rate_hz: Union[int, float] = DEFAULT_RATE_HZ,
    ) -> None:
        verifyNonNegative("acceptable_delay_ms", acceptable_delay_ms)
        verifyPositive("rate_hz", rate_hz)
        self.acceptable_delay_ms = acceptable_delay_ms
        self.rate_hz = rate_hz

    @property
    def half_width(self) -> int:
        """Window half-width w in frames: floor((d / 2) * rate / 1000)."""
        return math.floor(
            Fraction(self.acceptable_delay_ms) / 2 * Fraction(self.rate_hz) / 1000
        )

    def __repr__(self) -> str:
        return "ADConfig(acceptable_delay_ms={}, rate_hz={})".format(
            self.acceptable_delay_ms, self.rate_hz
        )


ADConfig.__module__ = "pysurgflow"


def _transitions(labels: Sequence[str]) -> List[int]:
    return [t for t in range(1, len(labels)) if labels[t - 1] != labels[t]]


def _windows(length: int, transition: int, w: int) -> Tuple[int, int]:
    return max(0, transition - w), min(length - 1, transition + w)


def _has_matching_transition(
    gt: Sequence[str], pred: Sequence[str], transition: int, w: int
) -> bool:
    before, after = gt[transition - 1], gt[transition]
    lo = max(1, transition - w)
    hi = min(len(pred) - 1, transition + w)
    for boundary in range(lo, hi + 1):
        if pred[boundary - 1] == before and pred[boundary] == after:
            return True
    return False


def _relabel(
    gt: Sequence[str], pred: Sequence[str], cfg: ADConfig = None
) -> Tuple[List[str], List[int]]:
    if len(gt) != len(pred):
        raise WorkflowValidationError(
            "Length mismatch: {} ground-truth frames vs {} predicted frames".format(
                len(gt), len(pred)
            )
        )
    if cfg is None:
        cfg = ADConfig()
    w = cfg.half_width

    adjusted = list(pred)
    pending = _transitions(gt)
    absorbed: List[int] = []
    current: Sequence[str] = pred
    while True:
        matched = [t for t in pending if _has_matching_transition(gt, current, t, w)]
        if len(matched) == 0:
            break
        absorbed += matched
        changed = False
        for t in matched:
            lo, hi = _windows(len(gt), t, w)
            for k in range(lo, hi + 1):
                if adjusted[k] != gt[k]:
                    adjusted[k] = gt[k]
                    changed = True
        pending = [t for t in pending if t not in matched]
        if not changed:
            break
        current = list(adjusted)

    return adjusted, sorted(absorbed)


def ad_relabel(
    gt: Sequence[str], pred: Sequence[str], cfg: ADConfig = None
) -> List[str]:
    """Rewrite the prediction around ground-truth transitions it caught in time.

    For every ground-truth transition X -> Y at frame t*, the window
    [t* - w, t* + w] (clipped to the sequence) is copied from ground truth
    into the prediction when the prediction has an X -> Y boundary b with
    |b - t*| <= w. Otherwise the window is left as predicted.

    The first pass matches against the original prediction. Rewriting one
    window can complete the X -> Y boundary of an overlapping window, so
    passes repeat over the rewritten prediction until no window changes. The
    result is a fixed point.

    Args:
        gt: Ground-truth labels.
        pred: Predicted labels, same length.
        cfg (optional): Window options. Defaults to ADConfig().

    Returns:
        The adjusted prediction.

    Raises:
        WorkflowValidationError: if the sequences have different lengths.
    """
    return _relabel(gt, pred, cfg)[0]


def absorbed_transitions(
    gt: Sequence[str], pred: Sequence[str], cfg: ADConfig = None
) -> List[int]:
    """Ground-truth transition frames whose window ad_relabel rewrites.

    This includes transitions matched only after a neighbouring window was
    rewritten.

    Raises:
        WorkflowValidationError: if the sequences have different lengths.
    """
    return _relabel(gt, pred, cfg)[1]


def frame_scores(
    gt: Sequence[str], pred: Sequence[str], vocab: LabelVocabulary
) -> ScoreSet:
    """Frame-by-frame balanced scores."""
    return balanced_scores(confusion(gt, pred, vocab))


def ad_scores(
    gt: Sequence[str],
    pred: Sequence[str],
    vocab: LabelVocabulary,
    cfg: ADConfig = None,
) -> ScoreSet:
    """Application-dependent balanced scores.

    Equal to balanced_scores(confusion(gt, ad_relabel(gt, pred, cfg), vocab)).
    """
    return balanced_scores(confusion(gt, ad_relabel(gt, pred, cfg), vocab))
