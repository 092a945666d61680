"""Rule ranking, ordering strategies and pruning.

Every ordering ends with the canonical rule identity (sorted antecedent,
then class index) as a final key, so each strategy is a total order and
sorting is deterministic whatever the input order.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Optional, Sequence

from .errors import ConfigurationError
from .measures import MeasureId, at_least, desc_key, evaluate
from .mining import CARRule

STRATEGY_KINDS = ("csa", "acs", "mcsa", "sm", "hybrid")


def csa_key(r: CARRule) -> tuple:
    """Confidence desc, support desc, antecedent size asc, canonical."""
    return (-r.confidence, -r.table.n11, r.size, r.key)


def acs_key(r: CARRule) -> tuple:
    """Antecedent size desc, confidence desc, support desc, canonical."""
    return (-r.size, -r.confidence, -r.table.n11, r.key)


def _cmp(k1, k2) -> int:
    return (k1 > k2) - (k1 < k2)


def compare_csa(r1: CARRule, r2: CARRule) -> int:
    """-1 if ``r1`` ranks above ``r2`` under CSA, 1 if below, 0 if identical."""
    return _cmp(csa_key(r1), csa_key(r2))


def compare_acs(r1: CARRule, r2: CARRule) -> int:
    return _cmp(acs_key(r1), acs_key(r2))


@dataclass(frozen=True)
class OrderingStrategy:
    """One of ``csa``, ``acs``, ``mcsa``, ``sm`` or ``hybrid``.

    ``measure`` is required for the last three; ``k`` (top-k cut) and
    ``inner`` (the re-sort applied after the cut) only apply to hybrid.
    """

    kind: str
    measure: Optional[MeasureId] = None
    k: Optional[int] = None
    inner: str = "csa"

    def __post_init__(self):
        if self.kind not in STRATEGY_KINDS:
            raise ConfigurationError(f"unknown ordering {self.kind!r}")
        if self.kind in ("mcsa", "sm", "hybrid") and self.measure is None:
            raise ConfigurationError(f"{self.kind} ordering needs a measure")
        if self.kind == "hybrid" and (self.k is None or self.k < 1):
            raise ConfigurationError("hybrid ordering needs k >= 1")
        if self.inner not in ("csa", "acs"):
            raise ConfigurationError(f"hybrid inner ordering must be csa or acs, got {self.inner!r}")

    @classmethod
    def parse(cls, text: str) -> "OrderingStrategy":
        """Parse ``csa``, ``acs``, ``mcsa:<m>``, ``sm:<m>`` or ``hybrid:<m>:<k>``."""
        parts = text.strip().split(":")
        kind = parts[0].lower()
        try:
            if kind in ("csa", "acs") and len(parts) == 1:
                return cls(kind)
            if kind in ("mcsa", "sm") and len(parts) == 2:
                return cls(kind, MeasureId.parse(parts[1]))
            if kind == "hybrid" and len(parts) == 3:
                return cls(kind, MeasureId.parse(parts[1]), int(parts[2]))
        except ValueError as exc:
            raise ConfigurationError(f"bad ordering {text!r}: {exc}") from None
        raise ConfigurationError(f"bad ordering {text!r}")

    def __str__(self) -> str:
        if self.kind in ("csa", "acs"):
            return self.kind
        if self.kind == "hybrid":
            return f"hybrid:{self.measure.value}:{self.k}"
        return f"{self.kind}:{self.measure.value}"


def _measure_cache(rules: Sequence[CARRule], m: MeasureId) -> Callable[[CARRule], tuple]:
    cache = {}
    for r in rules:
        if r.table not in cache:
            cache[r.table] = desc_key(evaluate(m, r.table))
    return lambda r: cache[r.table]


def mcsa_key_fn(rules: Sequence[CARRule], m: MeasureId) -> Callable[[CARRule], tuple]:
    mk = _measure_cache(rules, m)
    return lambda r: (mk(r),) + csa_key(r)


def sm_key_fn(rules: Sequence[CARRule], m: MeasureId) -> Callable[[CARRule], tuple]:
    mk = _measure_cache(rules, m)
    return lambda r: (mk(r), r.key)


def order(rules: Sequence[CARRule], s: OrderingStrategy) -> list[CARRule]:
    if s.kind == "csa":
        return sorted(rules, key=csa_key)
    if s.kind == "acs":
        return sorted(rules, key=acs_key)
    if s.kind == "mcsa":
        return sorted(rules, key=mcsa_key_fn(rules, s.measure))
    if s.kind == "sm":
        return sorted(rules, key=sm_key_fn(rules, s.measure))
    top = prune_top_k(rules, s.measure, s.k)
    return sorted(top, key=csa_key if s.inner == "csa" else acs_key)


def prune_top_k(rules: Sequence[CARRule], m: MeasureId, k: int) -> list[CARRule]:
    """First ``k`` rules in single-measure order."""
    if k < 1:
        raise ConfigurationError(f"k must be >= 1, got {k}")
    return sorted(rules, key=sm_key_fn(rules, m))[:k]


def prune_threshold(rules: Sequence[CARRule], m: MeasureId, threshold: float) -> list[CARRule]:
    """Keep rules whose measure value is at least ``threshold``; order kept."""
    return [r for r in rules if at_least(evaluate(m, r.table), threshold)]


def prune_specific(rules: Sequence[CARRule]) -> list[CARRule]:
    """Drop every rule that has a more general, higher-ranked rule.

    R1 is more general than R2 when R1's antecedent is a subset of R2's
    (the classes need not agree). Survivors keep their input order.
    """
    best: dict[tuple, tuple] = {}
    for r in rules:
        ante = r.key[0]
        k = csa_key(r)
        if ante not in best or k < best[ante]:
            best[ante] = k
    antecedents = list(best)

    def dominated(r: CARRule) -> bool:
        ante = r.key[0]
        k = csa_key(r)
        if best[ante] < k:
            return True
        n = len(ante)
        if 2 ** n <= 2 * len(antecedents):
            for size in range(n):
                for sub in combinations(ante, size):
                    if sub in best and best[sub] < k:
                        return True
            return False
        own = set(ante)
        return any(best[a] < k and len(a) < n and own.issuperset(a) for a in antecedents)

    return [r for r in rules if not dominated(r)]
