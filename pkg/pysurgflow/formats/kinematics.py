import math
from typing import List, Union

from pysurgflow.config import DEFAULT_RATE_HZ
from pysurgflow.errors import ParseIssue, ParseIssueKind, WorkflowParseError
from pysurgflow.kinematics import KINEMATIC_COLUMNS, KinematicSeries
from pysurgflow.formats.tabular import (
    PathLike,
    check_header,
    check_width,
    read_rows,
    render_rows,
    write_text,
)


def parse_kinematics(
    path: PathLike, rate_hz: Union[int, float] = DEFAULT_RATE_HZ
) -> KinematicSeries:
    """Read a kinematic file of 16 numeric columns under a header row.

    Raises:
        WorkflowParseError: if a row has the wrong width or holds a
            non-numeric or non-finite value, or if the file has no samples.
    """
    issues: List[ParseIssue] = []
    rows = check_header(read_rows(path), KINEMATIC_COLUMNS, issues)

    data = []
    for row in rows:
        if not check_width(row, len(KINEMATIC_COLUMNS), issues):
            continue
        values = []
        for name, field in zip(KINEMATIC_COLUMNS, row.fields):
            try:
                value = float(field)
            except ValueError:
                issues.append(
                    ParseIssue(
                        row.line,
                        ParseIssueKind.non_numeric,
                        "{} {!r} is not a number".format(name, field),
                    )
                )
                continue
            if not math.isfinite(value):
                issues.append(
                    ParseIssue(
                        row.line,
                        ParseIssueKind.non_finite,
                        "{} is {}".format(name, field),
                    )
                )
            values.append(value)
        data.append(values)

    if len(issues) == 0 and len(data) == 0:
        issues.append(ParseIssue(1, ParseIssueKind.column_count, "no samples"))
    if len(issues) > 0:
        raise WorkflowParseError(str(path), issues)
    return KinematicSeries(data, rate_hz)


def serialize_kinematics(series: KinematicSeries) -> str:
    return render_rows(
        [KINEMATIC_COLUMNS] + [[repr(float(v)) for v in row] for row in series.data]
    )


def write_kinematics(series: KinematicSeries, path: PathLike):
    write_text(path, serialize_kinematics(series))
