"""Experiment pipelines and the measure-by-pipeline report matrix.

Pipeline types:

``type1``
    top-k rules by the measure, re-sorted by CSA (hybrid ordering)
``type2``
    all rules in MCSA order for the measure
``type3``
    top-k rules by the measure, kept in that order
``csa_baseline``
    all rules in CSA order
``preprune_csa``
    general-rule pruning, then CSA order
``custom``
    any :class:`~carforge.ordering.OrderingStrategy`, optionally cut to k

Each is followed by coverage selection, a majority-class default and
weighted chi-square prediction on the test set.
"""
from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass, field, replace
from typing import Iterable, Optional, Sequence

from .classifier import ClassifierModel, evaluate_accuracy
from .dataset import Dataset
from .errors import ConfigurationError
from .measures import MeasureId
from .mining import CARRule, MiningConfig, mine_cars
from .ordering import OrderingStrategy, order, prune_specific, prune_top_k
from .selection import CoverageConfig, select_by_coverage

PIPELINE_TYPES = ("type1", "type2", "type3", "csa_baseline", "preprune_csa", "custom")
MEASURE_TYPES = ("type1", "type2", "type3")
BASELINES = ("csa_baseline", "preprune_csa")


@dataclass(frozen=True)
class PipelineConfig:
    mining: MiningConfig = field(default_factory=MiningConfig)
    pipeline_type: str = "csa_baseline"
    measure: Optional[MeasureId] = None
    k: int = 30_000
    coverage: CoverageConfig = field(default_factory=CoverageConfig)
    split_fraction: float = 0.5
    seed: int = 0
    ordering: Optional[OrderingStrategy] = None
    select: str = "coverage"

    def __post_init__(self):
        if self.pipeline_type not in PIPELINE_TYPES:
            raise ConfigurationError(f"unknown pipeline type {self.pipeline_type!r}")
        if self.pipeline_type in MEASURE_TYPES and self.measure is None:
            raise ConfigurationError(f"{self.pipeline_type} needs a measure")
        if self.pipeline_type == "custom" and self.ordering is None:
            raise ConfigurationError("custom pipeline needs an ordering strategy")
        if self.k < 1:
            raise ConfigurationError(f"k must be >= 1, got {self.k}")
        if self.mining.max_rules is not None and self.k > self.mining.max_rules:
            raise ConfigurationError(f"k={self.k} exceeds max_rules={self.mining.max_rules}")
        if self.select not in ("coverage", "all"):
            raise ConfigurationError(f"select must be 'coverage' or 'all', got {self.select!r}")


@dataclass(frozen=True)
class ReportRow:
    measure: str
    pipeline: str
    correct: int
    total: int
    selected_rules: int
    mined_rules: int

    @property
    def accuracy(self) -> float:
        return self.correct / self.total if self.total else 0.0


def ordered_rules(rules: Sequence[CARRule], cfg: PipelineConfig) -> list[CARRule]:
    """The rule list handed to selection for ``cfg.pipeline_type``."""
    kind = cfg.pipeline_type
    if kind == "type1":
        return order(rules, OrderingStrategy("hybrid", cfg.measure, cfg.k))
    if kind == "type2":
        return order(rules, OrderingStrategy("mcsa", cfg.measure))
    if kind == "type3":
        return prune_top_k(rules, cfg.measure, cfg.k)
    if kind == "csa_baseline":
        return order(rules, OrderingStrategy("csa"))
    if kind == "preprune_csa":
        return order(prune_specific(rules), OrderingStrategy("csa"))
    ranked = order(rules, cfg.ordering)
    return ranked[: cfg.k]


def build_model(rules: Sequence[CARRule], train: Dataset, cfg: PipelineConfig) -> ClassifierModel:
    ranked = ordered_rules(rules, cfg)
    chosen = ranked if cfg.select == "all" else select_by_coverage(ranked, train, cfg.coverage)
    return ClassifierModel.build(chosen, train)


def run_on_rules(rules: Sequence[CARRule], train: Dataset, test: Dataset, cfg: PipelineConfig) -> ReportRow:
    """Report row for an already-mined rule list."""
    model = build_model(rules, train, cfg)
    correct, total = evaluate_accuracy(model, test)
    if cfg.pipeline_type == "custom":
        label = str(cfg.ordering)
    else:
        label = cfg.measure.value if cfg.measure is not None else "-"
    return ReportRow(label, cfg.pipeline_type, correct, total, len(model.rules), len(rules))


def run_pipeline(train: Dataset, test: Dataset, cfg: PipelineConfig) -> ReportRow:
    """Mine ``train``, order, select, build the model and score ``test``."""
    if train.schema != test.schema:
        raise ConfigurationError("train and test must share one schema")
    return run_on_rules(mine_cars(train, cfg.mining), train, test, cfg)


def run_matrix(
    train: Dataset,
    test: Dataset,
    base_cfg: PipelineConfig,
    measures: Iterable[MeasureId],
) -> list[ReportRow]:
    """Both baselines once, then every measure (by name) under type1..type3.

    Rules are mined once and shared by every row.
    """
    measures = sorted(set(measures), key=lambda m: m.value)
    if not measures:
        raise ConfigurationError("run_matrix needs at least one measure")
    if train.schema != test.schema:
        raise ConfigurationError("train and test must share one schema")
    rules = mine_cars(train, base_cfg.mining)
    rows = [run_on_rules(rules, train, test, replace(base_cfg, pipeline_type=b, measure=None)) for b in BASELINES]
    for m in measures:
        for kind in MEASURE_TYPES:
            rows.append(run_on_rules(rules, train, test, replace(base_cfg, pipeline_type=kind, measure=m)))
    return rows


REPORT_FIELDS = ("measure", "pipeline", "correct", "total", "selected_rules", "mined_rules")


def report_csv(rows: Sequence[ReportRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(REPORT_FIELDS)
    for r in rows:
        writer.writerow([getattr(r, f) for f in REPORT_FIELDS])
    return buf.getvalue()


def report_json(rows: Sequence[ReportRow]) -> str:
    return json.dumps([asdict(r) for r in rows], indent=2) + "\n"
