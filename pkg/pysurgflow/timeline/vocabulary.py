from typing import Dict, Iterable, Iterator, Tuple

from pysurgflow.config import IDLE
from pysurgflow.errors import VocabularyError, WorkflowInputError
from pysurgflow.types import Column, Granularity
from pysurgflow.util import nearest_label


class LabelVocabulary:
    """The closed, ordered label set of one vocabulary component."""

    def __init__(self, component: Granularity, labels: Iterable[str]) -> None:
        """Create a new vocabulary.

        Args:
            component: The granularity component this vocabulary describes.
            labels: The labels, in order. Idle must be present and first.
                Surrounding whitespace is trimmed.

        Raises:
            WorkflowInputError: if Idle is missing or not first, or if a label
                is empty or duplicated.
        """
        normalized = tuple(label.strip() for label in labels)
        if len(normalized) == 0 or normalized[0] != IDLE:
            raise WorkflowInputError(
                "The {} vocabulary must start with {!r}".format(component.value, IDLE)
            )
        if any(len(label) == 0 for label in normalized):
            raise WorkflowInputError(
                "The {} vocabulary contains an empty label".format(component.value)
            )
        if len(set(normalized)) != len(normalized):
            raise WorkflowInputError(
                "The {} vocabulary contains duplicate labels".format(component.value)
            )

        self.component = component
        self.labels: Tuple[str, ...] = normalized
        self._index = {label: i for i, label in enumerate(normalized)}

    def __len__(self) -> int:
        return len(self.labels)

    def __iter__(self) -> Iterator[str]:
        return iter(self.labels)

    def __contains__(self, label: object) -> bool:
        return isinstance(label, str) and label.strip() in self._index

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, LabelVocabulary)
            and self.component == other.component
            and self.labels == other.labels
        )

    def __hash__(self) -> int:
        return hash((self.component, self.labels))

    def __repr__(self) -> str:
        return "LabelVocabulary({}, {})".format(self.component.value, list(self.labels))

    def index(self, label: str) -> int:
        return self._index[self.normalize(label)]

    def normalize(self, label: str, component: str = None) -> str:
        """Trim a label and check that it belongs to this vocabulary.

        Args:
            label: The raw label.
            component (optional): Name used in the error message. Defaults to
                the vocabulary component.

        Raises:
            VocabularyError: if the trimmed label is not in the vocabulary.
        """
        trimmed = label.strip()
        if trimmed not in self._index:
            raise VocabularyError(
                component if component is not None else self.component.value,
                trimmed,
                nearest_label(trimmed, self.labels),
            )
        return trimmed

    def subset(self, count: int) -> "LabelVocabulary":
        """Get a vocabulary made of the first count labels (Idle included)."""
        if not 1 <= count <= len(self.labels):
            raise WorkflowInputError(
                "Cannot take {} labels from a vocabulary of {}".format(
                    count, len(self.labels)
                )
            )
        return LabelVocabulary(self.component, self.labels[:count])


LabelVocabulary.__module__ = "pysurgflow"


# fmt: off
VOCABULARIES: Dict[Granularity, LabelVocabulary] = {
    Granularity.phase: LabelVocabulary(Granularity.phase, [
        IDLE, "Suturing", "Knot Tying",
    ]),
    Granularity.step: LabelVocabulary(Granularity.step, [
        IDLE, "Needle holding", "Suture making", "Suture handling",
        "1° knot", "2° knot", "3° knot",
    ]),
    Granularity.verb: LabelVocabulary(Granularity.verb, [
        IDLE, "Catch", "Give slack", "Hold", "Insert", "Loosen completely",
        "Loosen partially", "Make a loop", "Pass through", "Position", "Pull",
    ]),
    Granularity.target: LabelVocabulary(Granularity.target, [
        IDLE, "Needle", "Wire", "Both artificial vessel", "Left artificial vessel",
        "Right artificial vessel", "Long wire strand", "Short wire strand",
        "Wire loop", "Knot",
    ]),
    Granularity.instrument: LabelVocabulary(Granularity.instrument, [
        IDLE, "Needle holder",
    ]),
}
# fmt: on


def vocabulary_for(column: Column) -> LabelVocabulary:
    """Get the vocabulary a frame column draws its labels from."""
    return VOCABULARIES[column.granularity]
