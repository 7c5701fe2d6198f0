import math
from fractions import Fraction
from typing import Dict, Iterable, List, NamedTuple, Tuple, Union

from pysurgflow.config import DEFAULT_RATE_HZ, IDLE
from pysurgflow.errors import WorkflowInputError, WorkflowValidationError, verifyPositive
from pysurgflow.types import Column, require_column
from pysurgflow.util import first_frame_at_or_after, frames_to_ms
from pysurgflow.timeline.interval import IntervalAnnotation, IntervalTimeline, Segment


class FrameRecord(NamedTuple):
    timestamp_number: int
    phase: str
    step: str
    verb_left: str
    target_left: str
    instrument_left: str
    verb_right: str
    target_right: str
    instrument_right: str

    def label(self, column: Column) -> str:
        return getattr(self, str(column))

    @classmethod
    def idle(cls, timestamp_number: int) -> "FrameRecord":
        return cls(timestamp_number, *([IDLE] * len(Column)))


class DiscreteSequence:
    """A frame-synchronous table of the eight label columns.

    Construction does not check labels or timestamps; use validate_sequence
    for that, so that malformed data can still be inspected.
    """

    def __init__(
        self, frames: Iterable[FrameRecord], rate_hz: Union[int, float] = DEFAULT_RATE_HZ
    ) -> None:
        verifyPositive("rate_hz", rate_hz)
        self.rate_hz = rate_hz
        self.frames: Tuple[FrameRecord, ...] = tuple(frames)

    @classmethod
    def from_columns(
        cls,
        columns: Dict[Column, List[str]],
        rate_hz: Union[int, float] = DEFAULT_RATE_HZ,
    ) -> "DiscreteSequence":
        """Build a sequence from per-column label lists; missing columns are Idle."""
        lengths = {len(labels) for labels in columns.values()}
        if len(lengths) > 1:
            raise WorkflowValidationError(
                "Columns have different lengths: {}".format(sorted(lengths))
            )
        length = lengths.pop() if lengths else 0
        data = {require_column(c): labels for c, labels in columns.items()}
        frames = [
            FrameRecord(
                k, *(data[c][k] if c in data else IDLE for c in Column)
            )
            for k in range(length)
        ]
        return cls(frames, rate_hz)

    def __len__(self) -> int:
        return len(self.frames)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, DiscreteSequence)
            and self.rate_hz == other.rate_hz
            and self.frames == other.frames
        )

    def __hash__(self) -> int:
        return hash((self.rate_hz, self.frames))

    def __repr__(self) -> str:
        return "DiscreteSequence({} frames @ {} Hz)".format(len(self), self.rate_hz)

    def column(self, column: Column) -> List[str]:
        """Get the labels of one column, frame by frame."""
        index = 1 + list(Column).index(require_column(column))
        return [frame[index] for frame in self.frames]

    @property
    def duration_ms(self) -> int:
        """Shortest integer duration that discretizes back to len(self) frames."""
        return math.ceil(frames_to_ms(len(self.frames), self.rate_hz))

    def truncate(self, length: int) -> "DiscreteSequence":
        return DiscreteSequence(self.frames[:length], self.rate_hz)


DiscreteSequence.__module__ = "pysurgflow"


def frame_count(duration_ms: int, rate_hz: Union[int, float]) -> int:
    return math.floor(Fraction(duration_ms) * Fraction(rate_hz) / 1000)


def _sample_timeline(timeline: IntervalTimeline, rate_hz, length: int) -> List[str]:
    labels = [IDLE] * length
    for segment in timeline:
        # frames whose instant t_k lies in [begin, end)
        first = max(0, first_frame_at_or_after(segment.begin_ms, rate_hz))
        stop = min(first_frame_at_or_after(segment.end_ms, rate_hz), length)
        for k in range(first, stop):
            labels[k] = segment.label
    return labels


def discretize(
    annotation: IntervalAnnotation,
    rate_hz: Union[int, float] = DEFAULT_RATE_HZ,
    duration_ms: int = None,
) -> DiscreteSequence:
    """Sample interval annotations into a frame-synchronous sequence.

    Frame k samples every column at t_k = k * 1000 / rate_hz ms and takes the
    label of the segment with begin_ms <= t_k < end_ms, or Idle if none does.

    Args:
        annotation: The interval timelines of the eight columns.
        rate_hz (optional): Sampling rate. Defaults to 30.
        duration_ms (optional): Sequence duration. Defaults to the largest
            segment end across all columns.

    Returns:
        A DiscreteSequence of floor(duration_ms * rate_hz / 1000) frames.

    Raises:
        WorkflowInputError: if rate_hz is not positive or duration_ms is shorter
            than the annotation.
    """
    verifyPositive("rate_hz", rate_hz)
    max_end = annotation.max_end_ms()
    if duration_ms is None:
        duration_ms = max_end
    elif duration_ms < max_end:
        raise WorkflowInputError(
            "duration_ms {} is shorter than the last segment end {}".format(
                duration_ms, max_end
            )
        )

    length = frame_count(duration_ms, rate_hz)
    columns = {
        column: _sample_timeline(timeline, rate_hz, length)
        for column, timeline in annotation.items()
    }
    return DiscreteSequence.from_columns(columns, rate_hz)


def to_intervals(seq: DiscreteSequence) -> IntervalAnnotation:
    """Reconstruct interval annotations from a discrete sequence.

    Runs of equal non-Idle labels become one segment. A run of frames [a, b)
    maps to [floor(t_a), floor(t_b)) ms, which samples back to the same frames
    as long as frames are more than 1 ms apart.

    Raises:
        WorkflowInputError: if the sequence rate is 1000 Hz or more.
    """
    if seq.rate_hz >= 1000:
        raise WorkflowInputError(
            "Cannot map frames to integer milliseconds at {} Hz".format(seq.rate_hz)
        )

    def ms(frame: int) -> int:
        return math.floor(frames_to_ms(frame, seq.rate_hz))

    timelines: Dict[Column, IntervalTimeline] = {}
    for column in Column:
        labels = seq.column(column)
        segments: List[Segment] = []
        start = 0
        for k in range(1, len(labels) + 1):
            if k == len(labels) or labels[k] != labels[start]:
                if labels[start] != IDLE:
                    segments.append(Segment(labels[start], ms(start), ms(k)))
                start = k
        timelines[column] = IntervalTimeline(column, segments)
    return IntervalAnnotation(timelines)
