from typing import Dict, List, NamedTuple, Tuple

from pysurgflow.errors import WorkflowInternalError, WorkflowValidationError
from pysurgflow.types import Column
from pysurgflow.timeline import IntervalAnnotation, IntervalTimeline, Segment


class ObserverTimeline(NamedTuple):
    observer: str
    annotation: IntervalAnnotation


class BoundaryPair(NamedTuple):
    segment: int
    side: str
    time_a: int
    time_b: int


class SegmentAlignment(NamedTuple):
    """Segment correspondence between two observers on one column.

    matches holds (index in a, index in b) pairs of segments with equal
    labels, in temporal order. The unmatched lists hold the indices of the
    segments with no counterpart.
    """

    column: Column
    a: IntervalTimeline
    b: IntervalTimeline
    matches: List[Tuple[int, int]]
    unmatched_a: List[int]
    unmatched_b: List[int]

    @property
    def is_total(self) -> bool:
        return len(self.unmatched_a) == 0 and len(self.unmatched_b) == 0

    def boundary_pairs(self) -> List[BoundaryPair]:
        """Begin and end boundaries of every matched pair, indexed by match order."""
        pairs = []
        for k, (i, j) in enumerate(self.matches):
            sa, sb = self.a[i], self.b[j]
            pairs.append(BoundaryPair(k, "begin", sa.begin_ms, sb.begin_ms))
            pairs.append(BoundaryPair(k, "end", sa.end_ms, sb.end_ms))
        return pairs


def _order_key(segment: Segment) -> Tuple[int, int, str]:
    return segment.begin_ms, segment.end_ms, segment.label


def align_segments(a: IntervalTimeline, b: IntervalTimeline) -> SegmentAlignment:
    """Align two observers' segments by minimal label edit distance.

    Matching labels cost 0; substitution, insertion and deletion cost 1.
    Among alignments of minimal cost, the one keeping the most label matches
    wins. Remaining ties take a match or a substitution before a gap, and
    when only a gap will do the segment that starts later is the one left
    unmatched. Every decision depends on both observers
    alike, so swapping them mirrors the result.

    Raises:
        WorkflowValidationError: if the timelines annotate different columns.
    """
    if a.column != b.column:
        raise WorkflowValidationError(
            "Cannot align {} against {}: vocabularies differ".format(a.column, b.column)
        )

    la, lb = a.labels(), b.labels()
    n, m = len(la), len(lb)
    # (edit cost, -label matches), compared lexicographically
    D = [[(0, 0)] * (m + 1) for _ in range(n + 1)]
    for i in range(n + 1):
        D[i][0] = (i, 0)
    for j in range(m + 1):
        D[0][j] = (j, 0)

    def diagonal(i: int, j: int) -> Tuple[int, int]:
        cost, matched = D[i - 1][j - 1]
        if la[i - 1] == lb[j - 1]:
            return cost, matched - 1
        return cost + 1, matched

    def gap(cell: Tuple[int, int]) -> Tuple[int, int]:
        return cell[0] + 1, cell[1]

    for i in range(1, n + 1):
        for j in range(1, m + 1):
            D[i][j] = min(diagonal(i, j), gap(D[i - 1][j]), gap(D[i][j - 1]))

    matches: List[Tuple[int, int]] = []
    unmatched_a: List[int] = []
    unmatched_b: List[int] = []
    i, j = n, m
    while i > 0 or j > 0:
        if i > 0 and j > 0 and D[i][j] == diagonal(i, j):
            if la[i - 1] == lb[j - 1]:
                matches.append((i - 1, j - 1))
            else:
                unmatched_a.append(i - 1)
                unmatched_b.append(j - 1)
            i, j = i - 1, j - 1
            continue

        drop_a = i > 0 and D[i][j] == gap(D[i - 1][j])
        drop_b = j > 0 and D[i][j] == gap(D[i][j - 1])
        if not drop_a and not drop_b:
            raise WorkflowInternalError(
                "No optimal alignment step at ({}, {})".format(i, j)
            )
        if drop_a and drop_b:
            drop_a = _order_key(a[i - 1]) > _order_key(b[j - 1])
        if drop_a:
            unmatched_a.append(i - 1)
            i -= 1
        else:
            unmatched_b.append(j - 1)
            j -= 1

    matches.reverse()
    unmatched_a.sort()
    unmatched_b.sort()
    return SegmentAlignment(a.column, a, b, matches, unmatched_a, unmatched_b)


def align_observers(
    a: ObserverTimeline, b: ObserverTimeline
) -> Dict[Column, SegmentAlignment]:
    """Align two observers column by column."""
    return {
        column: align_segments(a.annotation[column], b.annotation[column])
        for column in Column
    }
