from pysurgflow.timeline.vocabulary import VOCABULARIES, LabelVocabulary, vocabulary_for
from pysurgflow.timeline.interval import IntervalAnnotation, IntervalTimeline, Segment
from pysurgflow.timeline.discrete import (
    DiscreteSequence,
    FrameRecord,
    discretize,
    frame_count,
    to_intervals,
)
from pysurgflow.timeline.validate import Violation, validate_sequence
from pysurgflow.timeline.align import AlignedPair, align_pair

__all__ = [
    "VOCABULARIES",
    "LabelVocabulary",
    "vocabulary_for",
    "IntervalAnnotation",
    "IntervalTimeline",
    "Segment",
    "DiscreteSequence",
    "FrameRecord",
    "discretize",
    "frame_count",
    "to_intervals",
    "Violation",
    "validate_sequence",
    "AlignedPair",
    "align_pair",
]
