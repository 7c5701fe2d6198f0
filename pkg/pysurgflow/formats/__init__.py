from pysurgflow.formats.tabular import PathLike, read_rows, write_text
from pysurgflow.formats.discrete import (
    DISCRETE_HEADER,
    parse_discrete,
    serialize_discrete,
    write_discrete,
)
from pysurgflow.formats.interval import (
    INTERVAL_HEADER,
    parse_interval,
    serialize_interval,
    write_interval,
)
from pysurgflow.formats.kinematics import (
    parse_kinematics,
    serialize_kinematics,
    write_kinematics,
)
from pysurgflow.formats.results import (
    parse_results,
    read_results_dir,
    serialize_results,
    write_results,
)
from pysurgflow.formats.report import (
    MEAN_ROW,
    SCORE_NAMES,
    TSV_HEADER,
    EvaluationReport,
    evaluate_sequences,
)
from pysurgflow.formats.render import (
    expectation_to_json,
    harmonization_to_json,
    rank_table_to_json,
    rank_table_to_tsv,
)

__all__ = [
    "DISCRETE_HEADER",
    "EvaluationReport",
    "INTERVAL_HEADER",
    "MEAN_ROW",
    "PathLike",
    "SCORE_NAMES",
    "TSV_HEADER",
    "evaluate_sequences",
    "expectation_to_json",
    "harmonization_to_json",
    "parse_discrete",
    "parse_interval",
    "parse_kinematics",
    "parse_results",
    "rank_table_to_json",
    "rank_table_to_tsv",
    "read_results_dir",
    "read_rows",
    "write_text",
    "serialize_discrete",
    "serialize_interval",
    "serialize_kinematics",
    "serialize_results",
    "write_discrete",
    "write_interval",
    "write_kinematics",
    "write_results",
]
