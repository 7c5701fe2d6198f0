from typing import Any, Dict, List, NamedTuple, Union

from pysurgflow.config import DEFAULT_ACCEPTABLE_DELAY_MS, DEFAULT_RATE_HZ
from pysurgflow.errors import (
    WorkflowInputError,
    WorkflowInternalError,
    WorkflowValidationError,
)
from pysurgflow.types import Column, require_column
from pysurgflow.timeline import DiscreteSequence, LabelVocabulary, vocabulary_for
from pysurgflow.metrics import ADConfig, absorbed_transitions
from pysurgflow.synth.rng import SplitMix64


class SynthSpec:
    """Parameters of a synthetic ground-truth/prediction pair.

    Args:
        seed: Seed of the SplitMix64 generator.
        num_segments: Number of ground-truth segments.
        min_length: Shortest segment, in frames.
        max_length: Longest segment, in frames.
        vocabulary (optional): Labels to draw from. Defaults to the full
            vocabulary of the column. Consecutive segments never share a label.
        jitter_min (optional): Smallest signed shift of a predicted
            transition, in frames. Defaults to 0.
        jitter_max (optional): Largest signed shift. Defaults to 0.
        substitution_probability (optional): Chance that a predicted segment
            carries another label. Defaults to 0.
        column (optional): Column carrying the labels; the others stay Idle.
            Defaults to phase.
        rate_hz (optional): Frame rate of both sequences. Defaults to 30.
        acceptable_delay_ms (optional): Window width used for the expected
            absorption record. Defaults to 500.

    Raises:
        WorkflowInputError: if a parameter is out of range.
        WorkflowValidationError: if the jitter could reorder transitions or
            push one outside the sequence.
    """

    def __init__(
        self,
        *,
        seed: int,
        num_segments: int,
        min_length: int,
        max_length: int,
        vocabulary: LabelVocabulary = None,
        jitter_min: int = 0,
        jitter_max: int = 0,
        substitution_probability: float = 0.0,
        column: Column = Column.phase,
        rate_hz: Union[int, float] = DEFAULT_RATE_HZ,
        acceptable_delay_ms: Union[int, float] = DEFAULT_ACCEPTABLE_DELAY_MS,
    ) -> None:
        column = require_column(column)
        if vocabulary is None:
            vocabulary = vocabulary_for(column)
        known = vocabulary_for(column)
        for label in vocabulary:
            if label not in known:
                raise WorkflowInputError(
                    "Label {!r} does not belong to the {} vocabulary".format(
                        label, column
                    )
                )
        if num_segments < 1:
            raise WorkflowInputError(
                "num_segments must be at least 1, but got {}".format(num_segments)
            )
        if not 1 <= min_length <= max_length:
            raise WorkflowInputError(
                "Segment lengths need 1 <= min_length <= max_length, "
                "but got {} and {}".format(min_length, max_length)
            )
        if jitter_min > jitter_max:
            raise WorkflowInputError(
                "jitter_min {} exceeds jitter_max {}".format(jitter_min, jitter_max)
            )
        if not 0 <= substitution_probability <= 1:
            raise WorkflowInputError(
                "substitution_probability must lie in [0, 1], but got {}".format(
                    substitution_probability
                )
            )
        if len(vocabulary) < 2 and (num_segments > 1 or substitution_probability > 0):
            raise WorkflowInputError(
                "At least two labels are needed to draw transitions or substitutions"
            )
        if max(abs(jitter_min), abs(jitter_max)) >= min_length:
            raise WorkflowValidationError(
                "Jitter up to {} frames does not fit segments of {} frames".format(
                    max(abs(jitter_min), abs(jitter_max)), min_length
                )
            )
        if jitter_max - jitter_min >= min_length:
            raise WorkflowValidationError(
                "A jitter spread of {} frames could reorder {}-frame segments".format(
                    jitter_max - jitter_min, min_length
                )
            )

        self.seed = seed
        self.num_segments = num_segments
        self.min_length = min_length
        self.max_length = max_length
        self.vocabulary = vocabulary
        self.jitter_min = jitter_min
        self.jitter_max = jitter_max
        self.substitution_probability = substitution_probability
        self.column = column
        self.rate_hz = rate_hz
        self.acceptable_delay_ms = acceptable_delay_ms

    def ad_config(self) -> ADConfig:
        return ADConfig(
            acceptable_delay_ms=self.acceptable_delay_ms, rate_hz=self.rate_hz
        )


SynthSpec.__module__ = "pysurgflow"


class ExpectedTransition(NamedTuple):
    """One ground-truth transition and what its window makes of it.

    within_window holds when the predicted boundary alone is enough: the
    jitter is at most w and neither adjacent segment was substituted.
    absorbed holds when the application-dependent relabeling rewrites the
    window, which also happens when a rewritten neighbouring window
    completes the boundary. within_window implies absorbed.
    """

    frame: int
    jitter: int
    label_before: str
    label_after: str
    within_window: bool
    absorbed: bool


class SynthExpectation(NamedTuple):
    """What the application-dependent scores must make of a generated pair."""

    half_width: int
    transitions: List[ExpectedTransition]
    substituted: List[int]

    @property
    def all_absorbed(self) -> bool:
        return all(t.absorbed for t in self.transitions)

    def as_dict(self) -> Dict[str, Any]:
        return {
            "half_width": self.half_width,
            "substituted_segments": list(self.substituted),
            "transitions": [t._asdict() for t in self.transitions],
        }


class SynthPair(NamedTuple):
    gt: DiscreteSequence
    pred: DiscreteSequence
    expected: SynthExpectation


def _other(rng: SplitMix64, labels: List[str], excluded: str) -> str:
    return rng.choice([label for label in labels if label != excluded])


def _paint(length: int, boundaries: List[int], labels: List[str]) -> List[str]:
    frames: List[str] = []
    edges = [0] + boundaries + [length]
    for label, begin, end in zip(labels, edges, edges[1:]):
        frames += [label] * (end - begin)
    if len(frames) != length or len(labels) != len(edges) - 1:
        raise WorkflowInternalError(
            "Boundaries {} do not split {} frames into {} segments".format(
                boundaries, length, len(labels)
            )
        )
    return frames


def generate_pair(spec: SynthSpec) -> SynthPair:
    """Draw a ground-truth sequence and a jittered, noisy prediction of it.

    Draw order is fixed: segment lengths, segment labels, transition
    jitters, then one substitution draw per segment. The same spec always
    yields the same pair.
    """
    rng = SplitMix64(spec.seed)
    labels = list(spec.vocabulary)

    lengths = [
        rng.randint(spec.min_length, spec.max_length) for _ in range(spec.num_segments)
    ]
    gt_labels = [rng.choice(labels)]
    for _ in range(1, spec.num_segments):
        gt_labels.append(_other(rng, labels, gt_labels[-1]))
    jitters = [
        rng.randint(spec.jitter_min, spec.jitter_max)
        for _ in range(spec.num_segments - 1)
    ]
    pred_labels = list(gt_labels)
    substituted = []
    for k, label in enumerate(gt_labels):
        if rng.chance(spec.substitution_probability):
            pred_labels[k] = _other(rng, labels, label)
            substituted.append(k)

    total = sum(lengths)
    boundaries = []
    position = 0
    for length in lengths[:-1]:
        position += length
        boundaries.append(position)
    shifted = [t + j for t, j in zip(boundaries, jitters)]

    gt_frames = _paint(total, boundaries, gt_labels)
    pred_frames = _paint(total, shifted, pred_labels)
    cfg = spec.ad_config()
    w = cfg.half_width
    absorbed = set(absorbed_transitions(gt_frames, pred_frames, cfg))
    transitions = [
        ExpectedTransition(
            frame=t,
            jitter=j,
            label_before=gt_labels[k],
            label_after=gt_labels[k + 1],
            within_window=abs(j) <= w
            and k not in substituted
            and k + 1 not in substituted,
            absorbed=t in absorbed,
        )
        for k, (t, j) in enumerate(zip(boundaries, jitters))
    ]

    gt = DiscreteSequence.from_columns({spec.column: gt_frames}, spec.rate_hz)
    pred = DiscreteSequence.from_columns({spec.column: pred_frames}, spec.rate_hz)
    return SynthPair(gt, pred, SynthExpectation(w, transitions, substituted))
