from pysurgflow.ranking.aggregate import (
    TeamResult,
    aggregate_task_score,
    column_class_count,
    impute_missing,
    s_activity,
    s_multi,
    s_uni,
    task_score,
)
from pysurgflow.ranking.rank import (
    OFFICIAL_METHOD,
    MethodRanking,
    RankingMethod,
    competition_rank,
    rank,
)
from pysurgflow.ranking.stability import StabilityVerdict, stability
from pysurgflow.ranking.table import RankRow, RankTable, rank_table

__all__ = [
    "TeamResult",
    "aggregate_task_score",
    "column_class_count",
    "impute_missing",
    "s_activity",
    "s_multi",
    "s_uni",
    "task_score",
    "OFFICIAL_METHOD",
    "MethodRanking",
    "RankingMethod",
    "competition_rank",
    "rank",
    "StabilityVerdict",
    "stability",
    "RankRow",
    "RankTable",
    "rank_table",
]
