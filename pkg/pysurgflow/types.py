from enum import Enum
from typing import Any, List, NamedTuple, Optional

from pysurgflow.errors import WorkflowInputError


class Granularity(Enum):
    """Vocabulary component enum."""

    phase = "phase"
    step = "step"
    verb = "verb"
    target = "target"
    instrument = "instrument"


Granularity.__module__ = "pysurgflow"


ColumnType = NamedTuple(
    "ColumnType",
    [("value", str), ("granularity", Granularity), ("hand", Optional[str])],
)


class Column(Enum):
    """Enum of the eight label columns of a frame, in file order."""

    def __str__(self) -> str:
        return self.value.value

    @property
    def granularity(self) -> Granularity:
        """Get the vocabulary component this column draws its labels from."""
        return self.value.granularity

    @property
    def hand(self) -> Optional[str]:
        """Get the robotic arm this column describes, if any."""
        return self.value.hand

    @classmethod
    def from_name(cls, name: str) -> "Column":
        for column in cls:
            if str(column) == name:
                return column
        raise WorkflowInputError(
            "Unknown column {!r}. Expected one of: {}".format(
                name, ", ".join(str(c) for c in cls)
            )
        )

    # fmt: off
    phase            = ColumnType("phase",            Granularity.phase,      None)
    step             = ColumnType("step",             Granularity.step,       None)
    verb_left        = ColumnType("verb_left",        Granularity.verb,       "left")
    target_left      = ColumnType("target_left",      Granularity.target,     "left")
    instrument_left  = ColumnType("instrument_left",  Granularity.instrument, "left")
    verb_right       = ColumnType("verb_right",       Granularity.verb,       "right")
    target_right     = ColumnType("target_right",     Granularity.target,     "right")
    instrument_right = ColumnType("instrument_right", Granularity.instrument, "right")
    # fmt: on


Column.__module__ = "pysurgflow"

ACTIVITY_COLUMNS = [
    Column.verb_left,
    Column.target_left,
    Column.instrument_left,
    Column.verb_right,
    Column.target_right,
    Column.instrument_right,
]


class Task(Enum):
    """Recognition task enum."""

    phase = "phase"
    step = "step"
    activity = "activity"
    multi = "multi"

    def columns(self) -> List[Column]:
        """Get the frame columns scored by this task."""
        if self == Task.phase:
            return [Column.phase]
        if self == Task.step:
            return [Column.step]
        if self == Task.activity:
            return list(ACTIVITY_COLUMNS)
        return list(Column)


Task.__module__ = "pysurgflow"


def require_column(input: Any) -> Column:
    if isinstance(input, Column):
        return input
    if isinstance(input, str):
        return Column.from_name(input)
    raise TypeError("Expected a Column or column name, but got a {}".format(type(input)))


def require_task(input: Any) -> Task:
    if isinstance(input, Task):
        return input
    try:
        return Task(input)
    except ValueError:
        raise WorkflowInputError(
            "Unknown task {!r}. Expected one of: {}".format(
                input, ", ".join(t.value for t in Task)
            )
        )
