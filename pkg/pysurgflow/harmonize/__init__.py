from pysurgflow.harmonize.align import (
    BoundaryPair,
    ObserverTimeline,
    SegmentAlignment,
    align_observers,
    align_segments,
)
from pysurgflow.harmonize.merge import (
    MergeConfig,
    MergedSegment,
    MergedTimeline,
    MergeResult,
    MergeViolation,
    ResolvedBoundary,
    StructuralDisagreement,
    UncertainTransition,
    auto_merge,
    merge_column,
)
from pysurgflow.harmonize.pipeline import HarmonizationReport, harmonization_pipeline

__all__ = [
    "BoundaryPair",
    "HarmonizationReport",
    "MergeConfig",
    "MergedSegment",
    "MergedTimeline",
    "MergeResult",
    "MergeViolation",
    "ObserverTimeline",
    "ResolvedBoundary",
    "SegmentAlignment",
    "StructuralDisagreement",
    "UncertainTransition",
    "align_observers",
    "align_segments",
    "auto_merge",
    "harmonization_pipeline",
    "merge_column",
]
