"""Database-coverage selection of classifier rules from an ordered list."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .dataset import Dataset
from .errors import ConfigurationError, EmptyDatasetError
from .mining import CARRule


@dataclass(frozen=True)
class CoverageConfig:
    """``cover_threshold`` is how many selected rules must match a training
    instance before it leaves the working set (1 reproduces CBA).

    With ``require_class_match`` a rule only covers instances of its own
    class; off by default.
    """

    cover_threshold: int = 3
    require_class_match: bool = False

    def __post_init__(self):
        if self.cover_threshold < 1:
            raise ConfigurationError(f"cover threshold must be >= 1, got {self.cover_threshold}")


def match_mask(rule: CARRule, data: np.ndarray) -> np.ndarray:
    """Boolean mask of the rows of ``data`` satisfying the rule's antecedent."""
    mask = np.ones(data.shape[0], dtype=bool)
    for it in rule.antecedent:
        mask &= data[:, it.attribute] == it.value
    return mask


def select_by_coverage(
    ordered: Sequence[CARRule], train: Dataset, cfg: CoverageConfig = CoverageConfig()
) -> list[CARRule]:
    """Walk ``ordered`` from the top, keeping each rule that matches at
    least one instance still in the working set.

    Each matched instance's cover count goes up by one; an instance leaves
    the set once its count reaches the threshold. Rejected rules are never
    revisited. Stops when either the rules or the instances run out.
    """
    if len(train) == 0:
        raise EmptyDatasetError("coverage selection needs training instances")
    data = train.matrix
    labels = train.labels
    alive = np.ones(len(train), dtype=bool)
    covered = np.zeros(len(train), dtype=np.int64)
    remaining = len(train)
    selected = []
    for rule in ordered:
        if remaining == 0:
            break
        hit = match_mask(rule, data) & alive
        if cfg.require_class_match:
            hit &= labels == rule.consequent
        if not hit.any():
            continue
        selected.append(rule)
        covered[hit] += 1
        done = hit & (covered >= cfg.cover_threshold)
        alive[done] = False
        remaining -= int(done.sum())
    return selected


def select_all(ordered: Sequence[CARRule], train: Dataset = None, cfg=None) -> list[CARRule]:
    return list(ordered)
