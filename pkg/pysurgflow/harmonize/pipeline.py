import logging
from typing import Dict, List, NamedTuple, Tuple

from pysurgflow.config import FIRST_PASS_THRESHOLD_MS, SECOND_PASS_THRESHOLD_MS
from pysurgflow.types import Column
from pysurgflow.harmonize.align import ObserverTimeline
from pysurgflow.harmonize.merge import (
    MergeConfig,
    MergedTimeline,
    MergeResult,
    MergeViolation,
    ResolvedBoundary,
    StructuralDisagreement,
    UncertainTransition,
    auto_merge,
)

logger = logging.getLogger(__name__)

BoundaryKey = Tuple[Column, int, str]


class HarmonizationReport(NamedTuple):
    """Outcome of the two-pass harmonization of one case.

    consensus lists the transitions neither pass could merge; together with
    disagreements and violations it is the residue left for the observers to
    settle by consensus.
    """

    merged: Dict[Column, MergedTimeline]
    first_pass: MergeResult
    second_pass: MergeResult
    resolved_first: List[ResolvedBoundary]
    resolved_second: List[ResolvedBoundary]
    consensus: List[UncertainTransition]
    disagreements: List[StructuralDisagreement]
    violations: List[MergeViolation]

    @property
    def is_complete(self) -> bool:
        return (
            len(self.consensus) == 0
            and len(self.disagreements) == 0
            and len(self.violations) == 0
        )


def _key(item) -> BoundaryKey:
    return item.column, item.segment, item.side


def harmonization_pipeline(
    a: ObserverTimeline,
    b: ObserverTimeline,
    refined_a: ObserverTimeline = None,
    refined_b: ObserverTimeline = None,
    *,
    first: MergeConfig = None,
    second: MergeConfig = None,
) -> HarmonizationReport:
    """Run both merging passes over two observers' annotations.

    The first pass merges the original annotations. The observers then refine
    the boundaries left uncertain, and the second pass merges the refined
    annotations with a tighter threshold. Only boundaries still unresolved
    after the first pass take their value from the second one, and only when
    the refined segment kept its label.

    Args:
        a: The first observer's original annotation.
        b: The second observer's original annotation.
        refined_a (optional): The first observer's refined annotation.
            Defaults to the original.
        refined_b (optional): The second observer's refined annotation.
            Defaults to the original.
        first (optional): Options of the first pass. Defaults to 1000 ms.
        second (optional): Options of the second pass. Defaults to 500 ms.
    """
    if refined_a is None:
        refined_a = a
    if refined_b is None:
        refined_b = b
    if first is None:
        first = MergeConfig(threshold_ms=FIRST_PASS_THRESHOLD_MS)
    if second is None:
        second = MergeConfig(threshold_ms=SECOND_PASS_THRESHOLD_MS)

    first_pass = auto_merge(a, b, first)
    second_pass = auto_merge(refined_a, refined_b, second)

    refined: Dict[BoundaryKey, ResolvedBoundary] = {
        _key(r): r for r in second_pass.resolved
    }
    refined_uncertain: Dict[BoundaryKey, UncertainTransition] = {
        _key(u): u for u in second_pass.uncertain
    }

    merged = dict(first_pass.merged)
    resolved_second: List[ResolvedBoundary] = []
    consensus: List[UncertainTransition] = []
    for pending in first_pass.uncertain:
        key = _key(pending)
        timeline = merged[pending.column]
        second_timeline = second_pass.merged[pending.column]
        same_segment = (
            pending.segment < len(second_timeline)
            and second_timeline[pending.segment].label
            == timeline[pending.segment].label
        )
        if same_segment and key in refined:
            boundary = refined[key]
            merged[pending.column] = timeline.with_boundary(
                pending.segment, pending.side, boundary.merged
            )
            resolved_second.append(boundary)
        elif same_segment and key in refined_uncertain:
            consensus.append(refined_uncertain[key])
        else:
            consensus.append(pending)

    violations = [v for column in Column for v in merged[column].violations()]
    logger.info(
        "Harmonized %s and %s: %d resolved in pass 1, %d in pass 2, %d left for consensus",
        a.observer,
        b.observer,
        len(first_pass.resolved),
        len(resolved_second),
        len(consensus),
    )
    return HarmonizationReport(
        merged,
        first_pass,
        second_pass,
        list(first_pass.resolved),
        resolved_second,
        consensus,
        list(first_pass.disagreements),
        violations,
    )
