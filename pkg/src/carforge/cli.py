"""``carforge`` command line: ``mine``, ``classify`` and ``matrix``.

Exit status is 0 on success, 2 for configuration errors and 1 for data
errors (unreadable or malformed input).
"""
from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from .classifier import format_predictions
from .dataset import read_csv, split_stratified
from .errors import ConfigurationError, DataError
from .harness import (
    PipelineConfig,
    build_model,
    report_csv,
    report_json,
    run_matrix,
    run_on_rules,
)
from .measures import ALL_MEASURES, MeasureId
from .mining import MiningConfig, format_rules, mine_cars
from .ordering import OrderingStrategy, order
from .selection import CoverageConfig


def _bound(text: str) -> Optional[int]:
    if text.lower() in ("none", "inf", "unbounded"):
        return None
    return int(text)


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--data", required=True, help="CSV file with a header row")
    p.add_argument("--class", dest="class_column", required=True, help="class column name or index")
    p.add_argument("--min-sup", type=float, default=0.10)
    p.add_argument("--min-conf", type=float, default=0.50)
    p.add_argument("--max-len", type=_bound, default=None)
    p.add_argument("--max-rules", type=_bound, default=100_000)
    p.add_argument("--split", type=float, default=None,
                   help="stratified training fraction; omit to train and test on all rows")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None, help="output path (default stdout)")


def _selection(p: argparse.ArgumentParser) -> None:
    p.add_argument("--top-k", type=int, default=None)
    p.add_argument("--cover-threshold", type=int, default=3)
    p.add_argument("--report", choices=("csv", "json"), default="csv")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="carforge", description="Associative classification with class association rules.")
    sub = parser.add_subparsers(dest="command", required=True)

    mine = sub.add_parser("mine", help="mine class association rules and print them")
    _common(mine)
    mine.add_argument("--ordering", default=None, help="csa, acs, mcsa:<m>, sm:<m> or hybrid:<m>:<k>")

    classify = sub.add_parser("classify", help="run one pipeline and report accuracy")
    _common(classify)
    _selection(classify)
    classify.add_argument("--pipeline", choices=("type1", "type2", "type3", "csa_baseline", "preprune_csa"), default=None)
    classify.add_argument("--ordering", default=None, help="custom ordering instead of --pipeline")
    classify.add_argument("--measure", default=None)
    classify.add_argument("--select", choices=("coverage", "all"), default="coverage")
    classify.add_argument("--predictions", default=None, help="write per-instance audit CSV here")

    matrix = sub.add_parser("matrix", help="every measure under pipeline types 1-3 plus baselines")
    _common(matrix)
    _selection(matrix)
    matrix.add_argument("--measure", action="append", default=None,
                        help="repeatable; defaults to every measure")
    return parser


def _load(args):
    data = read_csv(args.data, int(args.class_column) if args.class_column.isdigit() else args.class_column)
    if args.split is None:
        return data, data
    return split_stratified(data, args.split, args.seed)


def _mining(args) -> MiningConfig:
    return MiningConfig(args.min_sup, args.min_conf, args.max_len, args.max_rules)


def _emit(text: str, path: Optional[str]) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _default_k(args, mining: MiningConfig) -> int:
    if args.top_k is not None:
        return args.top_k
    return min(30_000, mining.max_rules) if mining.max_rules is not None else 30_000


def _cmd_mine(args) -> None:
    mining = _mining(args)
    train, _ = _load(args)
    rules = mine_cars(train, mining)
    if args.ordering:
        rules = order(rules, OrderingStrategy.parse(args.ordering))
    _emit(format_rules(rules, train.schema), args.out)


def _cmd_classify(args) -> None:
    mining = _mining(args)
    measure = MeasureId.parse(args.measure) if args.measure else None
    coverage = CoverageConfig(args.cover_threshold)
    if args.ordering and args.pipeline:
        raise ConfigurationError("give either --pipeline or --ordering, not both")
    if args.ordering:
        cap = mining.max_rules if mining.max_rules is not None else 10**12
        cfg = PipelineConfig(mining, "custom", measure, args.top_k or cap, coverage,
                             ordering=OrderingStrategy.parse(args.ordering), select=args.select)
    else:
        cfg = PipelineConfig(mining, args.pipeline or "csa_baseline", measure, _default_k(args, mining),
                             coverage, select=args.select)
    train, test = _load(args)
    rules = mine_cars(train, mining)
    row = run_on_rules(rules, train, test, cfg)
    _emit(report_json([row]) if args.report == "json" else report_csv([row]), args.out)
    if args.predictions:
        _emit(format_predictions(build_model(rules, train, cfg), test), args.predictions)


def _cmd_matrix(args) -> None:
    mining = _mining(args)
    measures = [MeasureId.parse(m) for m in args.measure] if args.measure else list(ALL_MEASURES)
    cfg = PipelineConfig(mining, "type2", measures[0], _default_k(args, mining), CoverageConfig(args.cover_threshold))
    train, test = _load(args)
    rows = run_matrix(train, test, cfg, measures)
    _emit(report_json(rows) if args.report == "json" else report_csv(rows), args.out)


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    handler = {"mine": _cmd_mine, "classify": _cmd_classify, "matrix": _cmd_matrix}[args.command]
    try:
        handler(args)
    except ConfigurationError as exc:
        print(f"carforge: configuration error: {exc}", file=sys.stderr)
        return 2
    except (DataError, OSError) as exc:
        print(f"carforge: data error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
