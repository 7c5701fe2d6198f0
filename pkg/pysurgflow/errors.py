from enum import Enum
from typing import Any, List, NamedTuple, Optional


class WorkflowInternalError(Exception):
    def __init__(self, message: str) -> None:
        self.message = message

    def __str__(self):
        return self.message


WorkflowInternalError.__module__ = "pysurgflow"


class WorkflowInputError(Exception):
    def __init__(self, msg: str) -> None:
        self.message = msg

    def __str__(self) -> str:
        return self.message

    def __eq__(self, other: Any) -> bool:
        return type(other) is type(self) and self.message == other.message


WorkflowInputError.__module__ = "pysurgflow"


class WorkflowValidationError(WorkflowInputError):
    """Raised when data violates an invariant of the workflow model."""


WorkflowValidationError.__module__ = "pysurgflow"


class VocabularyError(WorkflowValidationError):
    def __init__(
        self, component: str, label: str, hint: Optional[str] = None
    ) -> None:
        self.component = component
        self.label = label
        self.hint = hint
        msg = "Unknown {} label {!r}".format(component, label)
        if hint is not None:
            msg += " (did you mean {!r}?)".format(hint)
        super().__init__(msg)


VocabularyError.__module__ = "pysurgflow"


class ParseIssueKind(Enum):
    """Kinds of problems reported while reading annotation files."""

    missing_header = "missing-header"
    column_count = "column-count"
    non_numeric = "non-numeric"
    non_finite = "non-finite"
    unknown_label = "unknown-label"
    non_monotone = "non-monotone"
    overlap = "overlap"
    invalid_interval = "invalid-interval"


ParseIssueKind.__module__ = "pysurgflow"


class ParseIssue(NamedTuple):
    line: int
    kind: ParseIssueKind
    message: str

    def __str__(self) -> str:
        return "line {}: [{}] {}".format(self.line, self.kind.value, self.message)


class WorkflowParseError(WorkflowValidationError):
    def __init__(self, path: str, issues: List[ParseIssue]) -> None:
        self.path = path
        self.issues = issues
        lines = ["{}: {} problem(s) found".format(path, len(issues))]
        lines += ["  " + str(issue) for issue in issues]
        super().__init__("\n".join(lines))

    def kinds(self) -> List[ParseIssueKind]:
        return [issue.kind for issue in self.issues]


WorkflowParseError.__module__ = "pysurgflow"


def verifyPositive(name: str, value: float):
    if not value > 0:
        raise WorkflowInputError(
            "{} must be positive, but got {}".format(name, value)
        )


def verifyNonNegative(name: str, value: float):
    if not value >= 0:
        raise WorkflowInputError(
            "{} must be nonnegative, but got {}".format(name, value)
        )
