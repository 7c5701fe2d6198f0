from typing import Dict, List

from pysurgflow.errors import (
    ParseIssue,
    ParseIssueKind,
    VocabularyError,
    WorkflowInputError,
    WorkflowParseError,
)
from pysurgflow.types import Column
from pysurgflow.timeline import IntervalAnnotation, IntervalTimeline, Segment, vocabulary_for
from pysurgflow.formats.tabular import (
    PathLike,
    check_header,
    check_width,
    parse_int,
    read_rows,
    render_rows,
    write_text,
)

INTERVAL_HEADER = ["component", "label", "begin_ms", "end_ms"]


def parse_interval(path: PathLike) -> IntervalAnnotation:
    """Read an interval annotation file: one labelled segment per row.

    Raises:
        WorkflowParseError: if a row is malformed, a label or component is
            unknown, a segment is empty or two segments of a column overlap.
    """
    issues: List[ParseIssue] = []
    rows = check_header(read_rows(path), INTERVAL_HEADER, issues)

    segments: Dict[Column, List[Segment]] = {}
    lines: Dict[Segment, int] = {}
    for row in rows:
        if not check_width(row, len(INTERVAL_HEADER), issues):
            continue
        name, label, begin_text, end_text = row.fields
        begin = parse_int(row, begin_text, "begin_ms", issues)
        end = parse_int(row, end_text, "end_ms", issues)

        try:
            column = Column.from_name(name.strip())
        except WorkflowInputError as e:
            issues.append(ParseIssue(row.line, ParseIssueKind.unknown_label, str(e)))
            continue
        try:
            label = vocabulary_for(column).normalize(label, str(column))
        except VocabularyError as e:
            issues.append(ParseIssue(row.line, ParseIssueKind.unknown_label, str(e)))
            continue
        if begin is None or end is None:
            continue
        if begin < 0 or not begin < end:
            issues.append(
                ParseIssue(
                    row.line,
                    ParseIssueKind.invalid_interval,
                    "segment [{}, {}) needs 0 <= begin < end".format(begin, end),
                )
            )
            continue
        segment = Segment(label, begin, end)
        segments.setdefault(column, []).append(segment)
        lines[segment] = row.line

    for column, found in segments.items():
        ordered = sorted(found, key=lambda s: (s.begin_ms, s.end_ms))
        for previous, current in zip(ordered, ordered[1:]):
            if current.begin_ms < previous.end_ms:
                issues.append(
                    ParseIssue(
                        lines[current],
                        ParseIssueKind.overlap,
                        "{} segment {} overlaps {}".format(column, current, previous),
                    )
                )

    if len(issues) > 0:
        raise WorkflowParseError(str(path), issues)
    return IntervalAnnotation(
        {column: IntervalTimeline(column, found) for column, found in segments.items()}
    )


def serialize_interval(annotation: IntervalAnnotation) -> str:
    rows: List[List[object]] = [INTERVAL_HEADER]
    for column, timeline in annotation.items():
        rows += [[column, s.label, s.begin_ms, s.end_ms] for s in timeline]
    return render_rows(rows)


def write_interval(annotation: IntervalAnnotation, path: PathLike):
    write_text(path, serialize_interval(annotation))
