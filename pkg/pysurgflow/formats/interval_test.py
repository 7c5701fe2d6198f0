import pytest

import pysurgflow as sf

HEADER = "\t".join(sf.INTERVAL_HEADER) + "\n"


def test_parse_interval(tmp_path):
    path = tmp_path / "A.txt"
    path.write_text(
        HEADER
        + "phase\tKnot Tying\t1000\t2000\n"
        + "phase\tSuturing\t0\t1000\n"
        + "verb_left\t Catch \t100\t300\n"
    )
    annotation = sf.parse_interval(path)
    assert annotation[sf.Column.phase] == sf.IntervalTimeline(
        sf.Column.phase, [("Suturing", 0, 1000), ("Knot Tying", 1000, 2000)]
    )
    assert annotation[sf.Column.verb_left].labels() == ["Catch"]
    assert len(annotation[sf.Column.step]) == 0


def test_write_then_parse(tmp_path):
    annotation = sf.IntervalAnnotation.from_segments(
        {
            sf.Column.phase: [("Suturing", 0, 1000)],
            sf.Column.target_right: [("Wire loop", 10, 20), ("Knot", 30, 40)],
        }
    )
    path = tmp_path / "A.txt"
    sf.write_interval(annotation, path)
    assert sf.parse_interval(path) == annotation


def test_problems(tmp_path):
    path = tmp_path / "A.txt"
    path.write_text(
        HEADER
        + "phase\tSuturing\t0\t1000\n"
        + "phase\tKnot Tying\t900\t2000\n"
        + "phase\tSuturing\t3000\t3000\n"
        + "stage\tSuturing\t0\t10\n"
        + "step\tNeedle grabbing\t0\t10\n"
        + "step\tNeedle holding\tsoon\t10\n"
    )
    with pytest.raises(sf.WorkflowParseError) as info:
        sf.parse_interval(path)
    assert [(i.line, i.kind) for i in info.value.issues] == [
        (4, sf.ParseIssueKind.invalid_interval),
        (5, sf.ParseIssueKind.unknown_label),
        (6, sf.ParseIssueKind.unknown_label),
        (7, sf.ParseIssueKind.non_numeric),
        (3, sf.ParseIssueKind.overlap),
    ]
