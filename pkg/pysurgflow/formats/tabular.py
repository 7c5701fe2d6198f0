import csv
import io
from pathlib import Path
from typing import Iterable, List, NamedTuple, Sequence, Union

from pysurgflow.errors import ParseIssue, ParseIssueKind, WorkflowInputError

PathLike = Union[str, Path]


class Row(NamedTuple):
    line: int
    fields: List[str]


def read_rows(path: PathLike) -> List[Row]:
    """Read a tab-separated file into numbered rows; blank lines are skipped.

    Raises:
        WorkflowInputError: if the file cannot be read.
    """
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise WorkflowInputError("Cannot read {}: {}".format(path, e.strerror))
    return parse_rows(text)


def parse_rows(text: str) -> List[Row]:
    rows = []
    reader = csv.reader(io.StringIO(text), delimiter="\t", quoting=csv.QUOTE_NONE)
    for fields in reader:
        if len(fields) == 0 or all(f.strip() == "" for f in fields):
            continue
        rows.append(Row(reader.line_num, fields))
    return rows


def check_header(
    rows: List[Row], expected: Sequence[str], issues: List[ParseIssue]
) -> List[Row]:
    """Check the first row is the expected header and return the data rows."""
    if len(rows) == 0 or [f.strip() for f in rows[0].fields] != list(expected):
        issues.append(
            ParseIssue(
                rows[0].line if rows else 1,
                ParseIssueKind.missing_header,
                "expected header: {}".format(" ".join(expected)),
            )
        )
        if len(rows) > 0 and not _looks_like_header(rows[0], expected):
            return rows
    return rows[1:]


def _looks_like_header(row: Row, expected: Sequence[str]) -> bool:
    return any(field.strip() in expected for field in row.fields)


def check_width(row: Row, width: int, issues: List[ParseIssue]) -> bool:
    if len(row.fields) != width:
        issues.append(
            ParseIssue(
                row.line,
                ParseIssueKind.column_count,
                "expected {} columns, found {}".format(width, len(row.fields)),
            )
        )
        return False
    return True


def parse_int(row: Row, field: str, name: str, issues: List[ParseIssue]):
    try:
        return int(field.strip())
    except ValueError:
        issues.append(
            ParseIssue(
                row.line,
                ParseIssueKind.non_numeric,
                "{} {!r} is not an integer".format(name, field),
            )
        )
        return None


def render_rows(rows: Iterable[Sequence[object]]) -> str:
    return "".join("\t".join(str(v) for v in row) + "\n" for row in rows)


def write_text(path: PathLike, text: str):
    try:
        Path(path).write_text(text, encoding="utf-8")
    except OSError as e:
        raise WorkflowInputError("Cannot write {}: {}".format(path, e.strerror))
