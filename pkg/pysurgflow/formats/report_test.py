import json

import pytest

import pysurgflow as sf


def phases(*labels):
    return sf.DiscreteSequence.from_columns({sf.Column.phase: list(labels)})


GT = phases(*(["Suturing"] * 15 + ["Knot Tying"] * 15))
LATE = phases(*(["Suturing"] * 18 + ["Knot Tying"] * 12))


def test_evaluate_sequences():
    report = sf.evaluate_sequences({"seq1": (GT, GT), "seq2": (GT, LATE)}, sf.Task.phase)
    rows = report.rows()
    assert [sequence for sequence, _ in rows] == ["seq1", "seq2"]
    assert rows[0][1].ad.accuracy == 100.0
    assert report.mean().frame.accuracy == pytest.approx(95.0)
    assert report.results() == {
        "seq1": {sf.Column.phase: 100.0},
        "seq2": {sf.Column.phase: 100.0},
    }


def test_to_tsv():
    report = sf.evaluate_sequences({"seq1": (GT, GT)}, sf.Task.phase)
    lines = report.to_tsv().splitlines()
    assert lines[0].split("\t") == sf.TSV_HEADER
    assert lines[1] == "\t".join(["seq1"] + ["100.00"] * 8)
    assert lines[2].split("\t")[0] == sf.MEAN_ROW


def test_to_json():
    cfg = sf.ADConfig(acceptable_delay_ms=0)
    report = sf.evaluate_sequences({"seq1": (GT, LATE)}, sf.Task.phase, cfg)
    document = json.loads(report.to_json())
    assert document["task"] == "phase"
    assert document["acceptable_delay_ms"] == 0
    sequence = document["sequences"][0]
    assert sequence["sequence"] == "seq1"
    assert sequence["scores"]["ad"] == sequence["scores"]["frame"]
    assert list(sequence["columns"]) == ["phase"]
    assert document["mean"] == sequence["scores"]


def test_multi_task_scores_every_column():
    report = sf.evaluate_sequences({"seq1": (GT, GT)}, sf.Task.multi)
    assert set(report.results()["seq1"]) == set(sf.Column)


def test_no_sequences():
    with pytest.raises(sf.WorkflowInputError):
        sf.evaluate_sequences({}, sf.Task.phase)
