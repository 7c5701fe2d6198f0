## File generated from scripts/generate_init.py.
## DO NOT EDIT DIRECTLY

from pysurgflow.timeline import *
from pysurgflow.timeline import __all__ as timeline_all
from pysurgflow.metrics import *
from pysurgflow.metrics import __all__ as metrics_all
from pysurgflow.ranking import *
from pysurgflow.ranking import __all__ as ranking_all
from pysurgflow.harmonize import *
from pysurgflow.harmonize import __all__ as harmonize_all
from pysurgflow.kinematics import *
from pysurgflow.kinematics import __all__ as kinematics_all
from pysurgflow.synth import *
from pysurgflow.synth import __all__ as synth_all
from pysurgflow.formats import *
from pysurgflow.formats import __all__ as formats_all
from pysurgflow.types import ACTIVITY_COLUMNS, Column, Granularity, Task
from pysurgflow.errors import (
    ParseIssue,
    ParseIssueKind,
    VocabularyError,
    WorkflowInputError,
    WorkflowInternalError,
    WorkflowParseError,
    WorkflowValidationError,
)
from pysurgflow.config import (
    DEFAULT_ACCEPTABLE_DELAY_MS,
    DEFAULT_RATE_HZ,
    FIRST_PASS_THRESHOLD_MS,
    GRIP_CLOSE,
    GRIP_OPEN,
    IDLE,
    SECOND_PASS_THRESHOLD_MS,
)

__all__ = [
    "ABOVE_RANGE",
    "ACTIVITY_COLUMNS",
    "ADConfig",
    "ARM_FIELDS",
    "AlignedPair",
    "Arm",
    "ArmSample",
    "BELOW_RANGE",
    "BoundaryPair",
    "Column",
    "ColumnScores",
    "ConfusionMatrix",
    "DEFAULT_ACCEPTABLE_DELAY_MS",
    "DEFAULT_RATE_HZ",
    "DISCRETE_HEADER",
    "DiscreteSequence",
    "EvaluationReport",
    "ExpectedTransition",
    "FIRST_PASS_THRESHOLD_MS",
    "FrameRecord",
    "GRIP_CLOSE",
    "GRIP_OPEN",
    "Granularity",
    "GripAnomaly",
    "HarmonizationReport",
    "IDLE",
    "INTERVAL_HEADER",
    "IntervalAnnotation",
    "IntervalTimeline",
    "KINEMATIC_COLUMNS",
    "KinematicSample",
    "KinematicSeries",
    "LabelVocabulary",
    "MEAN_ROW",
    "MergeConfig",
    "MergeResult",
    "MergeViolation",
    "MergedSegment",
    "MergedTimeline",
    "MethodRanking",
    "OFFICIAL_METHOD",
    "ObserverTimeline",
    "ParseIssue",
    "ParseIssueKind",
    "PathLike",
    "RankRow",
    "RankTable",
    "RankingMethod",
    "ResolvedBoundary",
    "SCORE_NAMES",
    "SECOND_PASS_THRESHOLD_MS",
    "ScoreSet",
    "Segment",
    "SegmentAlignment",
    "SplitMix64",
    "StabilityVerdict",
    "StructuralDisagreement",
    "SynthExpectation",
    "SynthPair",
    "SynthSpec",
    "TSV_HEADER",
    "Task",
    "TeamResult",
    "UncertainTransition",
    "VOCABULARIES",
    "Violation",
    "VocabularyError",
    "WorkflowInputError",
    "WorkflowInternalError",
    "WorkflowParseError",
    "WorkflowValidationError",
    "absorbed_transitions",
    "activity_score_set",
    "ad_relabel",
    "ad_scores",
    "aggregate_task_score",
    "align_observers",
    "align_pair",
    "align_segments",
    "auto_merge",
    "balanced_scores",
    "column_class_count",
    "competition_rank",
    "confusion",
    "discretize",
    "downsample",
    "evaluate_pair",
    "evaluate_sequences",
    "expectation_to_json",
    "frame_count",
    "frame_scores",
    "generate_pair",
    "harmonization_pipeline",
    "harmonization_to_json",
    "homogeneous_left",
    "homogeneous_right",
    "impute_missing",
    "is_rigid_transform",
    "merge_column",
    "minmax_normalize",
    "parse_discrete",
    "parse_interval",
    "parse_kinematics",
    "parse_results",
    "rank",
    "rank_table",
    "rank_table_to_json",
    "rank_table_to_tsv",
    "read_results_dir",
    "read_rows",
    "rot_x",
    "rot_y",
    "s_activity",
    "s_multi",
    "s_uni",
    "serialize_discrete",
    "serialize_interval",
    "serialize_kinematics",
    "serialize_results",
    "series_transforms",
    "stability",
    "task_score",
    "task_score_set",
    "to_intervals",
    "translate",
    "validate_grip",
    "validate_sequence",
    "vocabulary_for",
    "write_discrete",
    "write_interval",
    "write_kinematics",
    "write_results",
    "write_text",
    "znormalize",
]
