"""Multi-rule prediction with weighted chi-square group scoring."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from .dataset import Dataset, Instance, majority_class
from .errors import InputError
from .measures import chi_square, max_chi_square
from .mining import CARRule
from .ordering import csa_key
from .selection import match_mask

UNANIMOUS = "unanimous"
WEIGHTED = "weighted-chi2"
DEFAULT = "default"


def weighted_contribution(rule: CARRule) -> float:
    """``chi2 ** 2 / max_chi2`` for one rule; 0 when either is undefined."""
    chi = chi_square(rule.table)
    top = max_chi_square(rule.table)
    if math.isnan(chi) or math.isnan(top) or top == 0:
        return 0.0
    return chi * chi / top


def weighted_chi2_score(group: Sequence[CARRule]) -> float:
    return sum(weighted_contribution(r) for r in group)


@dataclass(frozen=True)
class Prediction:
    label: int
    basis: str
    scores: dict[int, float] = field(default_factory=dict)


class ClassifierModel:
    """Selected rules plus a fallback label.

    Parameters
    ----------
    rules : sequence of CARRule
        The selected rules, in the order selection produced them.
    default_class : int
        Label returned when no rule matches.
    n_attributes : int, optional
        Expected instance width; checked by :meth:`predict` when given.
    """

    def __init__(self, rules: Sequence[CARRule], default_class: int, n_attributes: Optional[int] = None):
        self.rules = tuple(rules)
        self.default_class = default_class
        self.n_attributes = n_attributes
        self.chi2 = tuple(chi_square(r.table) for r in self.rules)
        self.max_chi2 = tuple(max_chi_square(r.table) for r in self.rules)
        self.contributions = tuple(weighted_contribution(r) for r in self.rules)
        # position of each rule in CSA order, for breaking score ties
        by_csa = sorted(range(len(self.rules)), key=lambda i: csa_key(self.rules[i]))
        self._csa_rank = np.empty(len(self.rules), dtype=np.int64)
        self._csa_rank[by_csa] = np.arange(len(self.rules))

    @classmethod
    def build(cls, rules: Sequence[CARRule], train: Dataset) -> "ClassifierModel":
        return cls(rules, majority_class(train), len(train.schema.attributes))

    def _decide(self, matched: Sequence[int]) -> Prediction:
        if not matched:
            return Prediction(self.default_class, DEFAULT)
        classes = {self.rules[i].consequent for i in matched}
        if len(classes) == 1:
            return Prediction(classes.pop(), UNANIMOUS)
        scores: dict[int, float] = {}
        best_rank: dict[int, int] = {}
        for i in matched:
            c = self.rules[i].consequent
            scores[c] = scores.get(c, 0.0) + self.contributions[i]
            best_rank[c] = min(best_rank.get(c, len(self.rules)), int(self._csa_rank[i]))
        label = min(scores, key=lambda c: (-scores[c], best_rank[c], c))
        return Prediction(label, WEIGHTED, dict(sorted(scores.items())))

    def predict(self, instance: Instance) -> Prediction:
        if self.n_attributes is not None and len(instance.values) != self.n_attributes:
            raise InputError(
                f"instance has {len(instance.values)} values, model expects {self.n_attributes}"
            )
        return self._decide([i for i, r in enumerate(self.rules) if r.matches(instance)])

    def predict_dataset(self, d: Dataset) -> list[Prediction]:
        if self.n_attributes is not None and len(d.schema.attributes) != self.n_attributes:
            raise InputError("dataset width does not match the model")
        if len(d) == 0:
            return []
        data = d.matrix
        hits = np.zeros((len(self.rules), len(d)), dtype=bool)
        for i, r in enumerate(self.rules):
            hits[i] = match_mask(r, data)
        return [self._decide(np.flatnonzero(hits[:, j]).tolist()) for j in range(len(d))]


def evaluate_accuracy(model: ClassifierModel, test: Dataset) -> tuple[int, int]:
    """(correct, total) over ``test``."""
    preds = model.predict_dataset(test)
    correct = sum(p.label == inst.class_label for p, inst in zip(preds, test.instances))
    return correct, len(test)


def format_predictions(model: ClassifierModel, d: Dataset) -> str:
    """Per-instance audit CSV: ``predicted,actual,basis,score_<class>...``."""
    classes = d.schema.class_values
    lines = [",".join(["predicted", "actual", "basis"] + [f"score_{c}" for c in classes])]
    for p, inst in zip(model.predict_dataset(d), d.instances):
        row = [classes[p.label], classes[inst.class_label], p.basis]
        row += [repr(p.scores[c]) if c in p.scores else "" for c in range(len(classes))]
        lines.append(",".join(row))
    return "\n".join(lines) + "\n"
