import json
from typing import Any, Dict, List

from pysurgflow.types import Column
from pysurgflow.ranking import RankTable
from pysurgflow.harmonize import HarmonizationReport, MergedTimeline
from pysurgflow.synth import SynthExpectation
from pysurgflow.formats.tabular import render_rows


def rank_table_to_tsv(table: RankTable, digits: int = 2) -> str:
    """Human-readable rank table: score and rank per method, then the verdicts."""
    header = ["team", "competing"]
    for method in table.methods:
        header += [method.value, method.value + " rank"]
    rows: List[List[object]] = [header]
    for row in table.rows:
        line: List[object] = [row.team, "yes" if row.competing else "no"]
        for method in table.methods:
            line += ["{:.{}f}".format(row.scores[method], digits), row.ranks[method]]
        rows.append(line)
    text = render_rows(rows)
    text += "# stability: {}\n".format(table.verdict)
    text += "# stability among competing teams: {}\n".format(table.competing_verdict)
    return text


def rank_table_to_json(table: RankTable) -> str:
    document = {
        "task": table.task.value,
        "methods": [method.value for method in table.methods],
        "rows": [
            {
                "team": row.team,
                "competing": row.competing,
                "scores": {m.value: row.scores[m] for m in table.methods},
                "ranks": {m.value: row.ranks[m] for m in table.methods},
            }
            for row in table.rows
        ],
        "stability": {
            "stable": table.verdict.stable,
            "tie_groups": table.verdict.tie_groups,
        },
        "competing_stability": {
            "stable": table.competing_verdict.stable,
            "tie_groups": table.competing_verdict.tie_groups,
        },
    }
    return json.dumps(document, indent=2) + "\n"


def _merged_dict(timeline: MergedTimeline) -> List[Dict[str, Any]]:
    return [
        {"label": s.label, "begin_ms": s.begin_ms, "end_ms": s.end_ms}
        for s in timeline.segments
    ]


def harmonization_to_json(report: HarmonizationReport) -> str:
    """Merged timelines with null placeholders, plus the consensus residue."""
    document = {
        "complete": report.is_complete,
        "merged": {
            str(column): _merged_dict(report.merged[column])
            for column in Column
            if len(report.merged[column]) > 0
        },
        "resolved_first_pass": [
            dict(r._asdict(), column=str(r.column)) for r in report.resolved_first
        ],
        "resolved_second_pass": [
            dict(r._asdict(), column=str(r.column)) for r in report.resolved_second
        ],
        "consensus": [
            dict(u._asdict(), column=str(u.column)) for u in report.consensus
        ],
        "disagreements": [
            {
                "column": str(d.column),
                "observer": d.observer,
                "label": d.segment.label,
                "begin_ms": d.segment.begin_ms,
                "end_ms": d.segment.end_ms,
            }
            for d in report.disagreements
        ],
        "violations": [
            {"column": str(v.column), "segment": v.segment, "message": v.message}
            for v in report.violations
        ],
    }
    return json.dumps(document, indent=2) + "\n"


def expectation_to_json(expected: SynthExpectation) -> str:
    return json.dumps(expected.as_dict(), indent=2) + "\n"
