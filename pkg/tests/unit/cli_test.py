import json

import pytest

import pysurgflow as sf
from pysurgflow.cli import EXIT_OK, EXIT_USAGE, EXIT_VALIDATION, main
from tests.unit import golden


def phases(*runs):
    labels = []
    for label, count in runs:
        labels += [label] * count
    return sf.DiscreteSequence.from_columns({sf.Column.phase: labels})


GT = {
    "seq1": phases(("Suturing", 40), ("Knot Tying", 40)),
    "seq2": phases((sf.IDLE, 10), ("Suturing", 50), ("Knot Tying", 30)),
}
PRED = {
    "seq1": phases(("Suturing", 44), ("Knot Tying", 36)),
    "seq2": phases((sf.IDLE, 20), ("Knot Tying", 70)),
}


@pytest.fixture
def sequence_dirs(tmp_path):
    gt_dir, pred_dir = tmp_path / "gt", tmp_path / "pred"
    gt_dir.mkdir()
    pred_dir.mkdir()
    for name in GT:
        sf.write_discrete(GT[name], gt_dir / (name + ".txt"))
        sf.write_discrete(PRED[name], pred_dir / (name + ".txt"))
    return gt_dir, pred_dir


def test_evaluate_is_deterministic(sequence_dirs, tmp_path):
    gt_dir, pred_dir = sequence_dirs
    first, second = tmp_path / "first.tsv", tmp_path / "second.tsv"
    assert main(["evaluate", str(gt_dir), str(pred_dir), "--out", str(first)]) == EXIT_OK
    assert main(["evaluate", str(gt_dir), str(pred_dir), "--out", str(second)]) == EXIT_OK
    assert first.read_bytes() == second.read_bytes()

    lines = first.read_text().splitlines()
    assert lines[0].split("\t") == sf.TSV_HEADER
    assert [line.split("\t")[0] for line in lines[1:]] == ["seq1", "seq2", "Mean"]


def test_evaluate_ground_truth_against_itself(sequence_dirs, capsys):
    gt_dir, _ = sequence_dirs
    assert main(["evaluate", str(gt_dir), str(gt_dir)]) == EXIT_OK
    mean = capsys.readouterr().out.splitlines()[-1].split("\t")
    assert mean == ["Mean"] + ["100.00"] * 8


def test_zero_delay_matches_frame_by_frame(sequence_dirs, capsys):
    gt_dir, pred_dir = sequence_dirs
    args = ["evaluate", str(gt_dir), str(pred_dir), "--delay-ms", "0", "--format", "json"]
    assert main(args) == EXIT_OK
    document = json.loads(capsys.readouterr().out)
    assert document["acceptable_delay_ms"] == 0
    for sequence in document["sequences"]:
        assert sequence["scores"]["ad"] == sequence["scores"]["frame"]


def test_evaluate_single_files_and_results(sequence_dirs, tmp_path, capsys):
    gt_dir, pred_dir = sequence_dirs
    results = tmp_path / "team.tsv"
    args = [
        "evaluate",
        str(gt_dir / "seq1.txt"),
        str(pred_dir / "seq1.txt"),
        "--results-out",
        str(results),
    ]
    assert main(args) == EXIT_OK
    assert capsys.readouterr().out.splitlines()[1].startswith("seq1\t")
    team = sf.parse_results(results, sf.Task.phase)
    assert team.per_sequence == {"seq1": {sf.Column.phase: 100.0}}


def test_rank_golden_phase_table(tmp_path, capsys):
    for team, values in golden.PHASE.items():
        sf.write_results(
            {s: {sf.Column.phase: v} for s, v in zip(golden.SEQUENCES, values)},
            [sf.Column.phase],
            tmp_path / (team + ".tsv"),
        )
    args = ["rank", str(tmp_path), "--non-competing", "IMPACT"]
    assert main(args + ["--methods", "mean-then-rank"]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[1].split("\t") == ["MedAIR", "yes", "96.53", "1"]
    assert "IMPACT\tno" in "\n".join(lines)

    assert main(args + ["--format", "json"]) == EXIT_OK
    document = json.loads(capsys.readouterr().out)
    assert document["rows"][0]["team"] == "MedAIR"
    assert document["stability"]["stable"] is False


def test_discretize(tmp_path, capsys):
    path = tmp_path / "A.txt"
    sf.write_interval(
        sf.IntervalAnnotation.from_segments({sf.Column.phase: [("Suturing", 0, 100)]}),
        path,
    )
    assert main(["discretize", str(path), "--duration-ms", "200"]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 1 + 6
    assert lines[3].split("\t")[1] == "Suturing"
    assert lines[4].split("\t")[1] == sf.IDLE


def test_harmonize(tmp_path, capsys):
    def write(name, *phase):
        path = tmp_path / (name + ".txt")
        sf.write_interval(
            sf.IntervalAnnotation.from_segments({sf.Column.phase: list(phase)}), path
        )
        return str(path)

    a = write("A", ("Suturing", 0, 1000), ("Knot Tying", 1600, 5000))
    b = write("B", ("Suturing", 0, 2400), ("Knot Tying", 2400, 5000))
    assert main(["harmonize", a, b]) == EXIT_OK
    document = json.loads(capsys.readouterr().out)
    assert document["complete"] is False
    assert len(document["consensus"]) == 1

    refined = write("A2", ("Suturing", 0, 2300), ("Knot Tying", 2300, 5000))
    assert main(["harmonize", a, b, "--refinedA", refined]) == EXIT_VALIDATION
    assert len(json.loads(capsys.readouterr().out)["violations"]) == 1


def test_kinematics(tmp_path, capsys):
    rows = [[0.0] * 16 for _ in range(12)]
    rows[3][6] = -7.2
    path = tmp_path / "kin.txt"
    sf.write_kinematics(sf.KinematicSeries(rows), path)

    args = ["kinematics", str(path), "--downsample-hz", "5", "--transforms"]
    assert main(args) == EXIT_OK
    document = json.loads(capsys.readouterr().out)
    assert document["samples"] == 2
    assert document["rate_hz"] == 5
    left = document["transforms"][0]["left"]
    assert left[0] == pytest.approx([1.0, 0.0, 0.0, 0.0], abs=1e-12)

    assert main(["kinematics", str(path), "--validate-grip"]) == EXIT_VALIDATION
    document = json.loads(capsys.readouterr().out)
    assert document["grip_anomalies"] == [
        {"index": 3, "arm": "left", "value": -7.2, "kind": "below-range"}
    ]


def test_synth(tmp_path):
    prefix = str(tmp_path / "pair")
    args = ["synth", "--seed", "3", "--jitter", "3", "--min-length", "20"]
    assert main(args + ["--out-prefix", prefix]) == EXIT_OK
    gt = sf.parse_discrete(prefix + "_gt.txt")
    pred = sf.parse_discrete(prefix + "_pred.txt")
    expected = json.loads((tmp_path / "pair_expected.json").read_text())
    assert len(gt) == len(pred)
    assert expected["half_width"] == 7
    assert all(t["absorbed"] for t in expected["transitions"])

    args = ["synth", "--seed", "3", "--jitter=-2:30", "--out-prefix", prefix]
    assert main(args) == EXIT_VALIDATION


def test_parse_error_exit_code(tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("\t".join(sf.DISCRETE_HEADER) + "\n0\tSutureing\n")
    assert main(["evaluate", str(bad), str(bad)]) == EXIT_VALIDATION


def test_input_error_exit_codes(tmp_path, sequence_dirs):
    gt_dir, _ = sequence_dirs
    missing = str(tmp_path / "missing.txt")
    assert main(["evaluate", missing, missing]) == EXIT_USAGE
    assert main(["evaluate", str(gt_dir), missing]) == EXIT_USAGE
    assert main(["evaluate", str(gt_dir), str(gt_dir), "--delay-ms", "-5"]) == EXIT_USAGE
    assert main(["rank", str(gt_dir), "--methods", "best"]) == EXIT_USAGE


def test_unwritable_output_exit_code(tmp_path, sequence_dirs, caplog):
    gt_dir, pred_dir = sequence_dirs
    out = str(tmp_path / "no-such-dir" / "report.tsv")
    assert main(["evaluate", str(gt_dir), str(pred_dir), "--out", out]) == EXIT_USAGE
    assert "Cannot write" in caplog.text


def test_usage_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as info:
        main(["tabulate"])
    assert info.value.code == 2

    with pytest.raises(SystemExit) as info:
        main(["evaluate", "gt", "pred", "--task", "stage"])
    assert info.value.code == 2
