from typing import Dict, Iterable, Iterator, List, Mapping, NamedTuple, Tuple

from pysurgflow.errors import WorkflowInputError, WorkflowValidationError
from pysurgflow.types import Column, require_column
from pysurgflow.timeline.vocabulary import LabelVocabulary, vocabulary_for


class Segment(NamedTuple):
    label: str
    begin_ms: int
    end_ms: int

    def __str__(self) -> str:
        return "({}, {}, {})".format(self.label, self.begin_ms, self.end_ms)


class IntervalTimeline:
    """Observer-style annotation of one column: labelled [begin, end) segments."""

    def __init__(self, column: Column, segments: Iterable[Segment] = ()) -> None:
        """Create a new interval timeline.

        Segments are sorted by begin time. Gaps are allowed and mean Idle.

        Args:
            column: The frame column this timeline annotates.
            segments: Any iterable of (label, begin_ms, end_ms).

        Raises:
            VocabularyError: if a label is not in the column's vocabulary.
            WorkflowValidationError: if a segment is empty, starts before 0 or
                overlaps another.
        """
        self.column = require_column(column)
        vocab = self.vocabulary

        checked: List[Segment] = []
        for raw in segments:
            label, begin, end = raw
            if type(begin) is not int or type(end) is not int:
                raise WorkflowInputError(
                    "Segment boundaries must be integer milliseconds: {}".format(raw)
                )
            segment = Segment(vocab.normalize(label, str(self.column)), begin, end)
            if begin < 0 or not begin < end:
                raise WorkflowValidationError(
                    "Segment {} of {} does not satisfy 0 <= begin < end".format(
                        segment, self.column
                    )
                )
            checked.append(segment)

        checked.sort(key=lambda s: (s.begin_ms, s.end_ms))
        for previous, current in zip(checked, checked[1:]):
            if current.begin_ms < previous.end_ms:
                raise WorkflowValidationError(
                    "Overlapping segments in {}: {} and {}".format(
                        self.column, previous, current
                    )
                )

        self.segments: Tuple[Segment, ...] = tuple(checked)

    @property
    def vocabulary(self) -> LabelVocabulary:
        return vocabulary_for(self.column)

    def __len__(self) -> int:
        return len(self.segments)

    def __iter__(self) -> Iterator[Segment]:
        return iter(self.segments)

    def __getitem__(self, index: int) -> Segment:
        return self.segments[index]

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, IntervalTimeline)
            and self.column == other.column
            and self.segments == other.segments
        )

    def __hash__(self) -> int:
        return hash((self.column, self.segments))

    def __repr__(self) -> str:
        return "IntervalTimeline({}, [{}])".format(
            self.column, ", ".join(str(s) for s in self.segments)
        )

    def labels(self) -> List[str]:
        return [segment.label for segment in self.segments]

    def max_end_ms(self) -> int:
        if len(self.segments) == 0:
            return 0
        return max(segment.end_ms for segment in self.segments)


IntervalTimeline.__module__ = "pysurgflow"


class IntervalAnnotation:
    """The eight interval timelines of one annotated sequence.

    Columns that were never annotated read as empty timelines.
    """

    def __init__(self, timelines: Mapping[Column, IntervalTimeline] = None) -> None:
        self._timelines: Dict[Column, IntervalTimeline] = {}
        for column, timeline in (timelines or {}).items():
            column = require_column(column)
            if timeline.column != column:
                raise WorkflowInputError(
                    "Timeline for {} was filed under {}".format(timeline.column, column)
                )
            self._timelines[column] = timeline

    @classmethod
    def from_segments(
        cls, segments: Mapping[Column, Iterable[Tuple[str, int, int]]]
    ) -> "IntervalAnnotation":
        return cls(
            {
                require_column(column): IntervalTimeline(require_column(column), segs)
                for column, segs in segments.items()
            }
        )

    def __getitem__(self, column: Column) -> IntervalTimeline:
        column = require_column(column)
        timeline = self._timelines.get(column)
        if timeline is None:
            return IntervalTimeline(column)
        return timeline

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntervalAnnotation):
            return False
        return all(self[column] == other[column] for column in Column)

    def __repr__(self) -> str:
        return "IntervalAnnotation({})".format(
            ", ".join(repr(self[c]) for c in Column if len(self[c]) > 0)
        )

    def items(self) -> List[Tuple[Column, IntervalTimeline]]:
        return [(column, self[column]) for column in Column]

    def max_end_ms(self) -> int:
        return max(self[column].max_end_ms() for column in Column)


IntervalAnnotation.__module__ = "pysurgflow"
