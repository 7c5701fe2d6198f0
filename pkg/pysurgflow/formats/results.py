import math
from pathlib import Path
from typing import Dict, Iterable, List, Mapping, Sequence

from pysurgflow.errors import (
    ParseIssue,
    ParseIssueKind,
    WorkflowInputError,
    WorkflowParseError,
)
from pysurgflow.types import Column, Task, require_task
from pysurgflow.ranking import TeamResult
from pysurgflow.formats.tabular import (
    PathLike,
    Row,
    check_width,
    read_rows,
    render_rows,
    write_text,
)

RESULTS_SUFFIX = ".tsv"
SEQUENCE_FIELD = "sequence"


def _parse_header(row: Row, issues: List[ParseIssue]) -> List[Column]:
    fields = [f.strip() for f in row.fields]
    if len(fields) < 2 or fields[0] != SEQUENCE_FIELD:
        issues.append(
            ParseIssue(
                row.line,
                ParseIssueKind.missing_header,
                "expected header: sequence followed by column names",
            )
        )
        return []
    columns = []
    for name in fields[1:]:
        try:
            columns.append(Column.from_name(name))
        except WorkflowInputError as e:
            issues.append(ParseIssue(row.line, ParseIssueKind.missing_header, str(e)))
    return columns


def parse_results(path: PathLike, task: Task, *, competing: bool = True) -> TeamResult:
    """Read one team's per-sequence AD-accuracies.

    The team is named after the file stem. An empty cell is a missing score
    and will be imputed when ranked.

    Raises:
        WorkflowParseError: if the header or a value is malformed.
    """
    task = require_task(task)
    issues: List[ParseIssue] = []
    rows = read_rows(path)
    if len(rows) == 0:
        raise WorkflowParseError(
            str(path), [ParseIssue(1, ParseIssueKind.missing_header, "empty file")]
        )
    columns = _parse_header(rows[0], issues)

    per_sequence: Dict[str, Dict[Column, float]] = {}
    for row in rows[1:]:
        if len(issues) > 0 and len(columns) == 0:
            break
        if not check_width(row, 1 + len(columns), issues):
            continue
        scores: Dict[Column, float] = {}
        for column, field in zip(columns, row.fields[1:]):
            if field.strip() == "":
                continue
            try:
                value = float(field)
            except ValueError:
                issues.append(
                    ParseIssue(
                        row.line,
                        ParseIssueKind.non_numeric,
                        "{} {!r} is not a number".format(column, field),
                    )
                )
                continue
            if not math.isfinite(value):
                issues.append(
                    ParseIssue(
                        row.line,
                        ParseIssueKind.non_finite,
                        "{} is {}".format(column, field),
                    )
                )
                continue
            scores[column] = value
        per_sequence[row.fields[0].strip()] = scores

    if len(issues) > 0:
        raise WorkflowParseError(str(path), issues)
    return TeamResult(Path(path).stem, task, per_sequence, competing=competing)


def read_results_dir(
    directory: PathLike, task: Task, non_competing: Iterable[str] = ()
) -> List[TeamResult]:
    """Read every `<team>.tsv` of a results directory, sorted by team."""
    directory = Path(directory)
    if not directory.is_dir():
        raise WorkflowInputError("{} is not a directory".format(directory))
    out_of_competition = set(non_competing)
    paths = sorted(directory.glob("*" + RESULTS_SUFFIX))
    if len(paths) == 0:
        raise WorkflowInputError("No {} files in {}".format(RESULTS_SUFFIX, directory))
    return [
        parse_results(path, task, competing=path.stem not in out_of_competition)
        for path in paths
    ]


def serialize_results(
    per_sequence: Mapping[str, Mapping[Column, float]], columns: Sequence[Column]
) -> str:
    rows: List[List[object]] = [[SEQUENCE_FIELD] + [str(c) for c in columns]]
    for sequence, scores in per_sequence.items():
        rows.append(
            [sequence] + [repr(float(scores[c])) if c in scores else "" for c in columns]
        )
    return render_rows(rows)


def write_results(
    per_sequence: Mapping[str, Mapping[Column, float]],
    columns: Sequence[Column],
    path: PathLike,
):
    write_text(path, serialize_results(per_sequence, columns))
