from typing import List, Mapping, NamedTuple, Optional

from pysurgflow.types import Column, Granularity
from pysurgflow.timeline.discrete import DiscreteSequence
from pysurgflow.timeline.vocabulary import VOCABULARIES, LabelVocabulary


class Violation(NamedTuple):
    frame: Optional[int]
    column: Optional[Column]
    message: str

    def __str__(self) -> str:
        where = "sequence" if self.frame is None else "frame {}".format(self.frame)
        if self.column is not None:
            where += ", {}".format(self.column)
        return "{}: {}".format(where, self.message)


def validate_sequence(
    seq: DiscreteSequence,
    vocabularies: Mapping[Granularity, LabelVocabulary] = VOCABULARIES,
) -> List[Violation]:
    """Check a discrete sequence against its invariants.

    Violations are returned, never raised. Frame indices in the report are
    positions in the sequence.

    Args:
        seq: The sequence to check.
        vocabularies (optional): Vocabulary per component. Defaults to the
            challenge vocabularies.

    Returns:
        A list of violations, empty iff the sequence is well formed.
    """
    violations: List[Violation] = []

    for position, frame in enumerate(seq.frames):
        expected = 0 if position == 0 else seq.frames[position - 1].timestamp_number + 1
        if frame.timestamp_number != expected:
            violations.append(
                Violation(
                    position,
                    None,
                    "non-consecutive timestamp {} (expected {})".format(
                        frame.timestamp_number, expected
                    ),
                )
            )

        for column in Column:
            label = frame.label(column)
            if not isinstance(label, str) or len(label.strip()) == 0:
                violations.append(Violation(position, column, "empty label"))
            elif label.strip() not in vocabularies[column.granularity]:
                violations.append(
                    Violation(position, column, "unknown label {!r}".format(label))
                )

    return violations
