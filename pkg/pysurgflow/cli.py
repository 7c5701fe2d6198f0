import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Dict, List, Sequence, Tuple

from pysurgflow.config import DEFAULT_ACCEPTABLE_DELAY_MS, DEFAULT_RATE_HZ
from pysurgflow.errors import WorkflowInputError, WorkflowValidationError
from pysurgflow.types import Column, Task
from pysurgflow.timeline import DiscreteSequence, discretize
from pysurgflow.metrics import ADConfig
from pysurgflow.ranking import RankingMethod, rank_table
from pysurgflow.harmonize import ObserverTimeline, harmonization_pipeline
from pysurgflow.kinematics import (
    downsample,
    minmax_normalize,
    series_transforms,
    validate_grip,
    znormalize,
)
from pysurgflow.synth import SynthSpec, generate_pair
from pysurgflow.formats import (
    evaluate_sequences,
    expectation_to_json,
    harmonization_to_json,
    parse_discrete,
    parse_interval,
    parse_kinematics,
    rank_table_to_json,
    rank_table_to_tsv,
    read_results_dir,
    serialize_discrete,
    write_discrete,
    write_kinematics,
    write_results,
    write_text,
)

logger = logging.getLogger("pysurgflow")

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_USAGE = 2

SEQUENCE_SUFFIX = ".txt"


def _emit(text: str, out: str = None):
    if out is None:
        sys.stdout.write(text)
        return
    write_text(out, text)


def _number(value: str) -> float:
    rate = float(value)
    if rate.is_integer():
        return int(rate)
    return rate


def _sequence_pairs(
    gt: Path, pred: Path, rate_hz
) -> Dict[str, Tuple[DiscreteSequence, DiscreteSequence]]:
    if gt.is_dir() != pred.is_dir():
        raise WorkflowInputError(
            "Ground truth and prediction must both be files or both be directories"
        )
    if not gt.is_dir():
        return {gt.stem: (parse_discrete(gt, rate_hz), parse_discrete(pred, rate_hz))}

    pairs = {}
    for gt_file in sorted(gt.glob("*" + SEQUENCE_SUFFIX)):
        pred_file = pred / gt_file.name
        if not pred_file.exists():
            raise WorkflowValidationError(
                "No prediction for sequence {} in {}".format(gt_file.stem, pred)
            )
        pairs[gt_file.stem] = (
            parse_discrete(gt_file, rate_hz),
            parse_discrete(pred_file, rate_hz),
        )
    if len(pairs) == 0:
        raise WorkflowInputError("No {} files in {}".format(SEQUENCE_SUFFIX, gt))
    return pairs


def run_discretize(args: argparse.Namespace) -> int:
    annotation = parse_interval(args.file)
    seq = discretize(annotation, args.rate, args.duration_ms)
    if args.out is None:
        _emit(serialize_discrete(seq))
    else:
        write_discrete(seq, args.out)
    return EXIT_OK


def run_evaluate(args: argparse.Namespace) -> int:
    task = Task(args.task)
    cfg = ADConfig(acceptable_delay_ms=args.delay_ms, rate_hz=args.rate)
    pairs = _sequence_pairs(Path(args.gt), Path(args.pred), args.rate)
    report = evaluate_sequences(pairs, task, cfg)
    if args.results_out is not None:
        write_results(report.results(), task.columns(), args.results_out)
    _emit(report.to_json() if args.format == "json" else report.to_tsv(), args.out)
    return EXIT_OK


def _methods(value: str) -> List[RankingMethod]:
    if value == "all":
        return list(RankingMethod)
    try:
        return [RankingMethod(name.strip()) for name in value.split(",")]
    except ValueError:
        raise WorkflowInputError(
            "Unknown ranking method in {!r}. Expected 'all' or a comma separated "
            "list of: {}".format(value, ", ".join(m.value for m in RankingMethod))
        )


def run_rank(args: argparse.Namespace) -> int:
    task = Task(args.task)
    results = read_results_dir(args.results_dir, task, args.non_competing)
    test_set = None
    if args.test_set is not None:
        test_set = [s.strip() for s in args.test_set.split(",") if s.strip() != ""]
    table = rank_table(results, task, _methods(args.methods), test_set)
    if args.format == "json":
        _emit(rank_table_to_json(table), args.out)
    else:
        _emit(rank_table_to_tsv(table), args.out)
    return EXIT_OK


def _observer(path: str) -> ObserverTimeline:
    return ObserverTimeline(Path(path).stem, parse_interval(path))


def run_harmonize(args: argparse.Namespace) -> int:
    a, b = _observer(args.a), _observer(args.b)
    refined_a = _observer(args.refined_a) if args.refined_a else None
    refined_b = _observer(args.refined_b) if args.refined_b else None
    report = harmonization_pipeline(a, b, refined_a, refined_b)
    _emit(harmonization_to_json(report), args.out)
    for violation in report.violations:
        logger.error("crossing merged boundaries: %s", violation)
    return EXIT_VALIDATION if len(report.violations) > 0 else EXIT_OK


def run_kinematics(args: argparse.Namespace) -> int:
    series = parse_kinematics(args.file, args.rate)
    anomalies = validate_grip(series) if args.validate_grip else []
    if args.downsample_hz is not None:
        series = downsample(series, args.downsample_hz)

    document = {"samples": len(series), "rate_hz": series.rate_hz}
    if args.transforms:
        document["transforms"] = [
            {"left": left.tolist(), "right": right.tolist()}
            for left, right in series_transforms(series)
        ]
    if args.normalize == "zscore":
        series = znormalize(series)
    elif args.normalize == "minmax":
        series = minmax_normalize(series)
    if args.validate_grip:
        document["grip_anomalies"] = [
            {"index": g.index, "arm": str(g.arm), "value": g.value, "kind": g.kind}
            for g in anomalies
        ]
    if args.out is not None:
        write_kinematics(series, args.out)
    _emit(json.dumps(document, indent=2) + "\n")

    for anomaly in anomalies:
        logger.error("%s", anomaly)
    return EXIT_VALIDATION if len(anomalies) > 0 else EXIT_OK


def _jitter(value: str) -> Tuple[int, int]:
    if ":" in value:
        low, high = value.split(":", 1)
        return int(low), int(high)
    return int(value), int(value)


def run_synth(args: argparse.Namespace) -> int:
    jitter_min, jitter_max = _jitter(args.jitter)
    spec = SynthSpec(
        seed=args.seed,
        num_segments=args.segments,
        min_length=args.min_length,
        max_length=args.max_length,
        jitter_min=jitter_min,
        jitter_max=jitter_max,
        substitution_probability=args.substitution,
        column=Column.from_name(args.column),
        rate_hz=args.rate,
        acceptable_delay_ms=args.delay_ms,
    )
    pair = generate_pair(spec)
    write_discrete(pair.gt, args.out_prefix + "_gt" + SEQUENCE_SUFFIX)
    write_discrete(pair.pred, args.out_prefix + "_pred" + SEQUENCE_SUFFIX)
    _emit(expectation_to_json(pair.expected), args.out_prefix + "_expected.json")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pysurgflow",
        description="Evaluate, rank and harmonize surgical workflow annotations.",
    )
    parser.add_argument(
        "-v", "--verbose", action="store_true", help="Log debug messages to stderr"
    )
    commands = parser.add_subparsers(dest="command", required=True)
    tasks = [task.value for task in Task]

    p = commands.add_parser("discretize", help="Sample interval files into frames")
    p.add_argument("file", help="Interval annotation file")
    p.add_argument("--rate", type=_number, default=DEFAULT_RATE_HZ)
    p.add_argument("--duration-ms", type=int, default=None)
    p.add_argument("--out", default=None, help="Output file (default: stdout)")
    p.set_defaults(run=run_discretize)

    p = commands.add_parser("evaluate", help="Score predictions against ground truth")
    p.add_argument("gt", help="Ground-truth file or directory")
    p.add_argument("pred", help="Prediction file or directory")
    p.add_argument("--task", choices=tasks, default=Task.phase.value)
    p.add_argument("--delay-ms", type=_number, default=DEFAULT_ACCEPTABLE_DELAY_MS)
    p.add_argument("--rate", type=_number, default=DEFAULT_RATE_HZ)
    p.add_argument("--format", choices=["tsv", "json"], default="tsv")
    p.add_argument("--results-out", default=None, help="Write AD-accuracies here")
    p.add_argument("--out", default=None, help="Output file (default: stdout)")
    p.set_defaults(run=run_evaluate)

    p = commands.add_parser("rank", help="Rank teams and assess ranking stability")
    p.add_argument("results_dir", help="Directory of <team>.tsv result files")
    p.add_argument("--task", choices=tasks, default=Task.phase.value)
    p.add_argument("--methods", default="all")
    p.add_argument(
        "--non-competing",
        action="append",
        default=[],
        metavar="TEAM",
        help="Rank this team out of competition (repeatable)",
    )
    p.add_argument("--test-set", default=None, help="Comma separated sequence ids")
    p.add_argument("--format", choices=["tsv", "json"], default="tsv")
    p.add_argument("--out", default=None, help="Output file (default: stdout)")
    p.set_defaults(run=run_rank)

    p = commands.add_parser("harmonize", help="Merge two observers' annotations")
    p.add_argument("a", help="First observer's interval file")
    p.add_argument("b", help="Second observer's interval file")
    p.add_argument("--refinedA", dest="refined_a", default=None)
    p.add_argument("--refinedB", dest="refined_b", default=None)
    p.add_argument("--out", default=None, help="Output file (default: stdout)")
    p.set_defaults(run=run_harmonize)

    p = commands.add_parser("kinematics", help="Load and process kinematic data")
    p.add_argument("file", help="Kinematic file")
    p.add_argument("--rate", type=_number, default=DEFAULT_RATE_HZ)
    p.add_argument("--transforms", action="store_true")
    p.add_argument("--normalize", choices=["zscore", "minmax"], default=None)
    p.add_argument("--downsample-hz", type=_number, default=None)
    p.add_argument("--validate-grip", action="store_true")
    p.add_argument("--out", default=None, help="Write the processed series here")
    p.set_defaults(run=run_kinematics)

    p = commands.add_parser("synth", help="Generate a synthetic gt/pred pair")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--jitter", default="0", help="Frames, as J or MIN:MAX")
    p.add_argument("--segments", type=int, default=5)
    p.add_argument("--min-length", type=int, default=30)
    p.add_argument("--max-length", type=int, default=120)
    p.add_argument("--substitution", type=float, default=0.0)
    p.add_argument("--column", default=str(Column.phase))
    p.add_argument("--rate", type=_number, default=DEFAULT_RATE_HZ)
    p.add_argument("--delay-ms", type=_number, default=DEFAULT_ACCEPTABLE_DELAY_MS)
    p.add_argument("--out-prefix", required=True)
    p.set_defaults(run=run_synth)

    return parser


def main(argv: Sequence[str] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        stream=sys.stderr,
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )

    try:
        return args.run(args)
    except WorkflowValidationError as e:
        logger.error("%s", e)
        return EXIT_VALIDATION
    except (WorkflowInputError, ValueError) as e:
        logger.error("%s", e)
        return EXIT_USAGE
