from typing import List, Union

from pysurgflow.config import DEFAULT_RATE_HZ
from pysurgflow.errors import ParseIssue, ParseIssueKind, VocabularyError, WorkflowParseError
from pysurgflow.types import Column
from pysurgflow.timeline import DiscreteSequence, FrameRecord, vocabulary_for
from pysurgflow.formats.tabular import (
    PathLike,
    check_header,
    check_width,
    parse_int,
    read_rows,
    render_rows,
    write_text,
)

DISCRETE_HEADER = ["timestamp_number"] + [str(column) for column in Column]


def parse_discrete(
    path: PathLike, rate_hz: Union[int, float] = DEFAULT_RATE_HZ
) -> DiscreteSequence:
    """Read a discrete annotation file.

    Every problem in the file is collected before failing: wrong column
    counts, non-integer timestamps, timestamps not counting up from 0 and
    unknown labels.

    Raises:
        WorkflowParseError: if the file has any problem.
    """
    issues: List[ParseIssue] = []
    rows = check_header(read_rows(path), DISCRETE_HEADER, issues)

    frames = []
    expected = 0
    for row in rows:
        if not check_width(row, len(DISCRETE_HEADER), issues):
            continue
        timestamp = parse_int(row, row.fields[0], "timestamp", issues)
        if timestamp is not None:
            if timestamp != expected:
                issues.append(
                    ParseIssue(
                        row.line,
                        ParseIssueKind.non_monotone,
                        "timestamp {} where {} was expected".format(timestamp, expected),
                    )
                )
            expected = timestamp + 1

        labels = []
        for column, field in zip(Column, row.fields[1:]):
            try:
                labels.append(vocabulary_for(column).normalize(field, str(column)))
            except VocabularyError as e:
                issues.append(ParseIssue(row.line, ParseIssueKind.unknown_label, str(e)))
                labels.append(field)
        if timestamp is not None:
            frames.append(FrameRecord(timestamp, *labels))

    if len(issues) > 0:
        raise WorkflowParseError(str(path), issues)
    return DiscreteSequence(frames, rate_hz)


def serialize_discrete(seq: DiscreteSequence) -> str:
    return render_rows([DISCRETE_HEADER] + [list(frame) for frame in seq.frames])


def write_discrete(seq: DiscreteSequence, path: PathLike):
    write_text(path, serialize_discrete(seq))
