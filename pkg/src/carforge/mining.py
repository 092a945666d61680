"""Level-wise mining of class association rules.

Instance sets are held as Python integers used as bitsets (bit ``i`` set
means instance ``i`` matches), so counting a candidate antecedent is one
chain of ``&`` followed by ``int.bit_count``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .dataset import AttributeSchema, Dataset, Instance, Item
from .errors import ConfigurationError, EmptyDatasetError, ParseError


@dataclass(frozen=True)
class ContingencyTable:
    """2x2 counts for a rule X -> Y.

    ``n11`` matches X and Y, ``n10`` X but not Y, ``n01`` Y but not X and
    ``n00`` neither.
    """

    n11: int
    n10: int
    n01: int
    n00: int

    def __post_init__(self):
        if min(self.n11, self.n10, self.n01, self.n00) < 0:
            raise ValueError(f"negative count in {self}")
        if self.N < 1:
            raise ValueError("contingency table must cover at least one instance")

    @property
    def nX(self) -> int:
        return self.n11 + self.n10

    @property
    def nY(self) -> int:
        return self.n11 + self.n01

    @property
    def N(self) -> int:
        return self.n11 + self.n10 + self.n01 + self.n00

    @classmethod
    def from_margins(cls, n11: int, nX: int, nY: int, N: int) -> "ContingencyTable":
        return cls(n11, nX - n11, nY - n11, N - nX - nY + n11)

    def scaled(self, k: int) -> "ContingencyTable":
        return ContingencyTable(k * self.n11, k * self.n10, k * self.n01, k * self.n00)


@dataclass(frozen=True)
class CARRule:
    antecedent: tuple[Item, ...]
    consequent: int
    table: ContingencyTable

    def __post_init__(self):
        ante = tuple(sorted(self.antecedent))
        if len({it.attribute for it in ante}) != len(ante):
            raise ValueError(f"antecedent repeats an attribute: {ante}")
        object.__setattr__(self, "antecedent", ante)

    @property
    def key(self) -> tuple:
        """Canonical identity: sorted antecedent items, then class index."""
        return (tuple((it.attribute, it.value) for it in self.antecedent), self.consequent)

    @property
    def size(self) -> int:
        return len(self.antecedent)

    @property
    def confidence(self) -> float:
        return self.table.n11 / self.table.nX if self.table.nX else 0.0

    @property
    def support(self) -> float:
        return self.table.n11 / self.table.N

    def matches(self, instance: Instance) -> bool:
        values = instance.values
        return all(values[it.attribute] == it.value for it in self.antecedent)

    def format(self, schema: AttributeSchema) -> str:
        lhs = " & ".join(schema.item_text(it) for it in self.antecedent)
        t = self.table
        return f"{lhs} => {schema.class_values[self.consequent]} ; {t.n11} {t.nX} {t.nY} {t.N}"


@dataclass(frozen=True)
class MiningConfig:
    min_support: float = 0.10
    min_confidence: float = 0.50
    max_antecedent_len: Optional[int] = None
    max_rules: Optional[int] = 100_000

    def __post_init__(self):
        for name in ("min_support", "min_confidence"):
            v = getattr(self, name)
            if not 0.0 < v <= 1.0:
                raise ConfigurationError(f"{name} must lie in (0, 1], got {v}")
        for name in ("max_antecedent_len", "max_rules"):
            v = getattr(self, name)
            if v is not None and v < 1:
                raise ConfigurationError(f"{name} must be positive or None, got {v}")

    def min_count(self, n: int) -> int:
        # ceil with slack so that e.g. 0.1 * 30 = 3.0000000000000004 stays 3
        return max(1, math.ceil(self.min_support * n - 1e-9))

    def confident(self, n11: int, nX: int) -> bool:
        return n11 >= self.min_confidence * nX - 1e-9


def count_table(antecedent: Iterable[Item], consequent: int, d: Dataset) -> ContingencyTable:
    """Exact contingency counts of ``antecedent -> consequent`` in one pass."""
    items = list(antecedent)
    n11 = n10 = n01 = n00 = 0
    for inst in d.instances:
        x = all(inst.values[it.attribute] == it.value for it in items)
        y = inst.class_label == consequent
        if x and y:
            n11 += 1
        elif x:
            n10 += 1
        elif y:
            n01 += 1
        else:
            n00 += 1
    return ContingencyTable(n11, n10, n01, n00)


def _bitsets(d: Dataset):
    schema = d.schema
    item_bits: dict[Item, int] = {}
    class_bits = [0] * schema.n_classes
    for i, inst in enumerate(d.instances):
        bit = 1 << i
        class_bits[inst.class_label] |= bit
        for a, v in enumerate(inst.values):
            if a == schema.class_index:
                continue
            it = Item(a, v)
            item_bits[it] = item_bits.get(it, 0) | bit
    return item_bits, class_bits


def _next_level(frequent: dict[tuple[Item, ...], int], item_bits: dict[Item, int], min_count: int):
    """Join frequent k-itemsets sharing a (k-1)-prefix; keep candidates whose
    every k-subset is frequent and whose own count reaches ``min_count``."""
    keys = sorted(frequent)
    by_prefix: dict[tuple[Item, ...], list[tuple[Item, ...]]] = {}
    for k in keys:
        by_prefix.setdefault(k[:-1], []).append(k)
    out: dict[tuple[Item, ...], int] = {}
    for group in by_prefix.values():
        for i, a in enumerate(group):
            last_a = a[-1]
            bits_a = frequent[a]
            for b in group[i + 1:]:
                last_b = b[-1]
                if last_b.attribute == last_a.attribute:
                    continue
                cand = a + (last_b,)
                if any(cand[:j] + cand[j + 1:] not in frequent for j in range(len(cand) - 2)):
                    continue
                bits = bits_a & item_bits[last_b]
                if bits.bit_count() >= min_count:
                    out[cand] = bits
    return out


def mine_cars(d: Dataset, cfg: MiningConfig) -> list[CARRule]:
    """All rules meeting the support and confidence thresholds.

    Support is tested on the joint count ``n11`` and candidate antecedents
    are pruned on their own count, both against ``ceil(min_support * N)``.
    Rules come out grouped by antecedent size, each group in canonical
    order; with a finite ``max_rules`` the list is cut at that length.
    """
    if len(d) == 0:
        raise EmptyDatasetError("cannot mine an empty dataset")
    n = len(d)
    min_count = cfg.min_count(n)
    item_bits, class_bits = _bitsets(d)
    class_totals = [b.bit_count() for b in class_bits]

    level = {(it,): bits for it, bits in item_bits.items() if bits.bit_count() >= min_count}
    size = 1
    rules: list[CARRule] = []
    while level:
        for ante in sorted(level):
            bits = level[ante]
            nX = bits.bit_count()
            for c, cbits in enumerate(class_bits):
                n11 = (bits & cbits).bit_count()
                if n11 < min_count or not cfg.confident(n11, nX):
                    continue
                table = ContingencyTable.from_margins(n11, nX, class_totals[c], n)
                rules.append(CARRule(ante, c, table))
                if cfg.max_rules is not None and len(rules) >= cfg.max_rules:
                    return rules
        if cfg.max_antecedent_len is not None and size >= cfg.max_antecedent_len:
            break
        level = _next_level(level, item_bits, min_count)
        size += 1
    return rules


def format_rules(rules: Sequence[CARRule], schema: AttributeSchema) -> str:
    """One rule per line: ``A=a & B=b => class ; n11 nX nY N``."""
    return "".join(r.format(schema) + "\n" for r in rules)


def parse_rules(text: str, schema: AttributeSchema) -> list[CARRule]:
    """Inverse of :func:`format_rules` for the given schema."""
    rules = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            body, counts = line.split(";")
            lhs, rhs = body.split("=>")
            n11, nX, nY, N = (int(x) for x in counts.split())
        except ValueError:
            raise ParseError(f"malformed rule line {line!r}", row=lineno) from None
        items = []
        for part in lhs.split("&"):
            name, _, value = part.strip().partition("=")
            a = schema.attribute_index(name)
            items.append(Item(a, schema.attributes[a].index_of(value)))
        c = schema.class_attribute.index_of(rhs.strip())
        rules.append(CARRule(tuple(items), c, ContingencyTable.from_margins(n11, nX, nY, N)))
    return rules
