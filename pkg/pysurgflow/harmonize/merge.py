import logging
from fractions import Fraction
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple, Union

from pysurgflow.config import FIRST_PASS_THRESHOLD_MS, IDLE
from pysurgflow.errors import WorkflowInputError, WorkflowValidationError, verifyPositive
from pysurgflow.types import Column, require_column
from pysurgflow.util import round_half_away
from pysurgflow.timeline import IntervalAnnotation, IntervalTimeline, Segment
from pysurgflow.harmonize.align import (
    ObserverTimeline,
    SegmentAlignment,
    align_observers,
)

logger = logging.getLogger(__name__)

BEGIN = "begin"
END = "end"


class MergeConfig:
    """Options of one automatic merging pass.

    Args:
        threshold_ms (optional): Two boundaries are merged into their mean
            only when they differ by strictly less than this. Defaults to 1000.
    """

    def __init__(
        self, *, threshold_ms: Union[int, float] = FIRST_PASS_THRESHOLD_MS
    ) -> None:
        verifyPositive("threshold_ms", threshold_ms)
        self.threshold_ms = threshold_ms

    def __repr__(self) -> str:
        return "MergeConfig(threshold_ms={})".format(self.threshold_ms)


MergeConfig.__module__ = "pysurgflow"


class UncertainTransition(NamedTuple):
    column: Column
    segment: int
    side: str
    time_a: int
    time_b: int
    label_before: str
    label_after: str

    def swapped(self) -> "UncertainTransition":
        return self._replace(time_a=self.time_b, time_b=self.time_a)

    def __str__(self) -> str:
        return "{} segment {} {}: {} -> {} at {} vs {} ms".format(
            self.column,
            self.segment,
            self.side,
            self.label_before,
            self.label_after,
            self.time_a,
            self.time_b,
        )


class ResolvedBoundary(NamedTuple):
    column: Column
    segment: int
    side: str
    time_a: int
    time_b: int
    merged: int


class StructuralDisagreement(NamedTuple):
    """A segment one observer annotated with no counterpart from the other."""

    column: Column
    observer: str
    segment: Segment

    def __str__(self) -> str:
        return "{} segment {} only annotated by {}".format(
            self.column, self.segment, self.observer
        )


class MergeViolation(NamedTuple):
    column: Column
    segment: int
    message: str

    def __str__(self) -> str:
        return "{} segment {}: {}".format(self.column, self.segment, self.message)


class MergedSegment(NamedTuple):
    label: str
    begin_ms: Optional[int]
    end_ms: Optional[int]

    @property
    def is_resolved(self) -> bool:
        return self.begin_ms is not None and self.end_ms is not None


class MergedTimeline:
    """A merged column whose unresolved boundaries are None placeholders."""

    def __init__(self, column: Column, segments: Sequence[MergedSegment] = ()) -> None:
        self.column = require_column(column)
        self.segments: List[MergedSegment] = list(segments)

    def __len__(self) -> int:
        return len(self.segments)

    def __getitem__(self, index: int) -> MergedSegment:
        return self.segments[index]

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, MergedTimeline)
            and self.column == other.column
            and self.segments == other.segments
        )

    def __repr__(self) -> str:
        return "MergedTimeline({}, {})".format(self.column, self.segments)

    @property
    def is_complete(self) -> bool:
        return all(segment.is_resolved for segment in self.segments)

    def with_boundary(self, segment: int, side: str, time_ms: int) -> "MergedTimeline":
        """Return a copy with one boundary filled in."""
        if side not in (BEGIN, END):
            raise WorkflowInputError("Unknown boundary side {!r}".format(side))
        segments = list(self.segments)
        current = segments[segment]
        if side == BEGIN:
            segments[segment] = current._replace(begin_ms=time_ms)
        else:
            segments[segment] = current._replace(end_ms=time_ms)
        return MergedTimeline(self.column, segments)

    def violations(self) -> List[MergeViolation]:
        """Resolved boundaries that cross each other.

        A violation is reported when a segment's merged end does not come
        after its merged begin, or when a segment's merged end comes after the
        merged begin of the next segment. Placeholders are never compared.
        """
        found = []
        for index, segment in enumerate(self.segments):
            if segment.is_resolved and not segment.begin_ms < segment.end_ms:
                found.append(
                    MergeViolation(
                        self.column,
                        index,
                        "merged begin {} is not before merged end {}".format(
                            segment.begin_ms, segment.end_ms
                        ),
                    )
                )
        for index in range(1, len(self.segments)):
            previous_end = self.segments[index - 1].end_ms
            begin = self.segments[index].begin_ms
            if previous_end is not None and begin is not None and previous_end > begin:
                found.append(
                    MergeViolation(
                        self.column,
                        index,
                        "merged begin {} crosses the previous end {}".format(
                            begin, previous_end
                        ),
                    )
                )
        return found

    def to_timeline(self) -> IntervalTimeline:
        """Convert to an interval timeline.

        Raises:
            WorkflowValidationError: if a boundary is still unresolved or two
                merged boundaries cross.
        """
        if not self.is_complete:
            raise WorkflowValidationError(
                "Merged {} still has unresolved boundaries".format(self.column)
            )
        violations = self.violations()
        if len(violations) != 0:
            raise WorkflowValidationError(
                "Merged {} has crossing boundaries: {}".format(
                    self.column, "; ".join(str(v) for v in violations)
                )
            )
        return IntervalTimeline(
            self.column,
            [Segment(s.label, s.begin_ms, s.end_ms) for s in self.segments],
        )


MergedTimeline.__module__ = "pysurgflow"


class MergeResult(NamedTuple):
    merged: Dict[Column, MergedTimeline]
    uncertain: List[UncertainTransition]
    disagreements: List[StructuralDisagreement]
    resolved: List[ResolvedBoundary]

    def violations(self) -> List[MergeViolation]:
        return [v for column in Column for v in self.merged[column].violations()]

    def annotation(self) -> IntervalAnnotation:
        """The merged timelines as an annotation; every column must be complete."""
        return IntervalAnnotation(
            {column: self.merged[column].to_timeline() for column in Column}
        )


def _touching(timeline: IntervalTimeline, index: int, side: str) -> str:
    """Label of the segment touching the given side, Idle across a gap."""
    if side == BEGIN:
        if index > 0 and timeline[index - 1].end_ms == timeline[index].begin_ms:
            return timeline[index - 1].label
    elif index + 1 < len(timeline):
        if timeline[index + 1].begin_ms == timeline[index].end_ms:
            return timeline[index + 1].label
    return IDLE


def _neighbour_label(alignment: SegmentAlignment, i: int, j: int, side: str) -> str:
    seen = {_touching(alignment.a, i, side), _touching(alignment.b, j, side)}
    return " / ".join(sorted(seen))


def merge_column(
    alignment: SegmentAlignment, cfg: MergeConfig
) -> Tuple[MergedTimeline, List[UncertainTransition], List[ResolvedBoundary]]:
    """Merge the matched segments of one aligned column."""
    segments: List[MergedSegment] = []
    uncertain: List[UncertainTransition] = []
    resolved: List[ResolvedBoundary] = []
    column = alignment.column

    for k, (i, j) in enumerate(alignment.matches):
        sa, sb = alignment.a[i], alignment.b[j]
        bounds: Dict[str, Optional[int]] = {}
        sides = ((BEGIN, sa.begin_ms, sb.begin_ms), (END, sa.end_ms, sb.end_ms))
        for side, ta, tb in sides:
            if abs(ta - tb) < cfg.threshold_ms:
                merged = round_half_away(Fraction(ta + tb, 2))
                bounds[side] = merged
                resolved.append(ResolvedBoundary(column, k, side, ta, tb, merged))
                continue
            bounds[side] = None
            neighbour = _neighbour_label(alignment, i, j, side)
            if side == BEGIN:
                before, after = neighbour, sa.label
            else:
                before, after = sa.label, neighbour
            uncertain.append(
                UncertainTransition(column, k, side, ta, tb, before, after)
            )
        segments.append(MergedSegment(sa.label, bounds[BEGIN], bounds[END]))

    return MergedTimeline(column, segments), uncertain, resolved


def auto_merge(
    a: ObserverTimeline, b: ObserverTimeline, cfg: MergeConfig = None
) -> MergeResult:
    """Automatically merge two observers' annotations.

    Matched boundaries closer than the threshold are replaced by their mean,
    rounded half away from zero. The others are left as placeholders and
    reported as uncertain transitions. Segments with no counterpart skip the
    merge and are reported as structural disagreements.

    Args:
        a: The first observer's annotation.
        b: The second observer's annotation.
        cfg (optional): The merging options. Defaults to a 1000 ms threshold.

    Returns:
        A MergeResult. Unpacking its first two fields gives the merged
        timelines and the uncertain transitions.
    """
    if cfg is None:
        cfg = MergeConfig()

    merged: Dict[Column, MergedTimeline] = {}
    uncertain: List[UncertainTransition] = []
    disagreements: List[StructuralDisagreement] = []
    resolved: List[ResolvedBoundary] = []

    for column, alignment in align_observers(a, b).items():
        timeline, col_uncertain, col_resolved = merge_column(alignment, cfg)
        merged[column] = timeline
        uncertain += col_uncertain
        resolved += col_resolved
        disagreements += [
            StructuralDisagreement(column, a.observer, alignment.a[i])
            for i in alignment.unmatched_a
        ]
        disagreements += [
            StructuralDisagreement(column, b.observer, alignment.b[j])
            for j in alignment.unmatched_b
        ]

    logger.debug(
        "Merged %s and %s at %s ms: %d resolved, %d uncertain, %d unmatched",
        a.observer,
        b.observer,
        cfg.threshold_ms,
        len(resolved),
        len(uncertain),
        len(disagreements),
    )
    return MergeResult(merged, uncertain, disagreements, resolved)
