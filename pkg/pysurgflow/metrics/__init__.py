from pysurgflow.metrics.confusion import ConfusionMatrix, confusion
from pysurgflow.metrics.scores import ScoreSet, balanced_scores
from pysurgflow.metrics.appdep import (
    ADConfig,
    absorbed_transitions,
    ad_relabel,
    ad_scores,
    frame_scores,
)
from pysurgflow.metrics.evaluate import (
    ColumnScores,
    activity_score_set,
    evaluate_pair,
    task_score_set,
)

__all__ = [
    "ConfusionMatrix",
    "confusion",
    "ScoreSet",
    "balanced_scores",
    "ADConfig",
    "absorbed_transitions",
    "ad_relabel",
    "ad_scores",
    "frame_scores",
    "ColumnScores",
    "activity_score_set",
    "evaluate_pair",
    "task_score_set",
]
