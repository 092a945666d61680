"""Nominal datasets: CSV loading, integer encoding and stratified splitting.

Every attribute value is encoded as the index of its first appearance in
the file, so the same CSV always yields the same encoding.
"""
from __future__ import annotations

import io
import math
import os
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from importlib import resources
from typing import Iterable, Sequence, TextIO, Union

import numpy as np

from .errors import ConfigurationError, EmptyDatasetError, InputError, ParseError


@dataclass(frozen=True)
class Attribute:
    name: str
    values: tuple[str, ...]

    def index_of(self, token: str) -> int:
        try:
            return self.values.index(token)
        except ValueError:
            raise InputError(f"unknown value {token!r} for attribute {self.name!r}") from None


@dataclass(frozen=True)
class AttributeSchema:
    """Ordered attributes plus the position of the class attribute."""

    attributes: tuple[Attribute, ...]
    class_index: int

    def __post_init__(self):
        names = [a.name for a in self.attributes]
        if len(set(names)) != len(names):
            raise ConfigurationError(f"duplicate attribute names in {names}")
        for a in self.attributes:
            if len(set(a.values)) != len(a.values):
                raise ConfigurationError(f"duplicate values in attribute {a.name!r}")
        if not 0 <= self.class_index < len(self.attributes):
            raise ConfigurationError(f"class index {self.class_index} out of range")

    @property
    def class_attribute(self) -> Attribute:
        return self.attributes[self.class_index]

    @property
    def class_values(self) -> tuple[str, ...]:
        return self.class_attribute.values

    @property
    def n_classes(self) -> int:
        return len(self.class_values)

    def attribute_index(self, name_or_index: Union[str, int]) -> int:
        if isinstance(name_or_index, int):
            if not 0 <= name_or_index < len(self.attributes):
                raise ConfigurationError(f"attribute index {name_or_index} out of range")
            return name_or_index
        for i, a in enumerate(self.attributes):
            if a.name == name_or_index:
                return i
        raise ConfigurationError(f"no attribute named {name_or_index!r}")

    def item_text(self, item: "Item") -> str:
        a = self.attributes[item.attribute]
        return f"{a.name}={a.values[item.value]}"


@dataclass(frozen=True, order=True)
class Item:
    """One attribute-value pair, both as indices into the schema."""

    attribute: int
    value: int


@dataclass(frozen=True)
class Instance:
    values: tuple[int, ...]
    class_label: int


@dataclass(frozen=True)
class Dataset:
    schema: AttributeSchema
    instances: tuple[Instance, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "instances", tuple(self.instances))
        n_attr = len(self.schema.attributes)
        for i, inst in enumerate(self.instances):
            if len(inst.values) != n_attr:
                raise InputError(f"instance {i} has {len(inst.values)} values, expected {n_attr}")
            for a, v in zip(self.schema.attributes, inst.values):
                if not 0 <= v < len(a.values):
                    raise InputError(f"instance {i}: value index {v} invalid for {a.name!r}")
            if inst.class_label != inst.values[self.schema.class_index]:
                raise InputError(f"instance {i}: class label disagrees with class column")

    def __len__(self) -> int:
        return len(self.instances)

    @cached_property
    def matrix(self) -> np.ndarray:
        """Instances as an (n_instances, n_attributes) integer array."""
        if not self.instances:
            return np.zeros((0, len(self.schema.attributes)), dtype=np.int32)
        return np.array([inst.values for inst in self.instances], dtype=np.int32)

    @cached_property
    def labels(self) -> np.ndarray:
        return np.array([inst.class_label for inst in self.instances], dtype=np.int32)

    def class_counts(self) -> list[int]:
        counts = Counter(inst.class_label for inst in self.instances)
        return [counts.get(c, 0) for c in range(self.schema.n_classes)]

    def decode(self, instance: Instance) -> tuple[str, ...]:
        return tuple(a.values[v] for a, v in zip(self.schema.attributes, instance.values))

    def encode(self, tokens: Sequence[str]) -> Instance:
        """Encode a full token row (class column included) against this schema."""
        attrs = self.schema.attributes
        if len(tokens) != len(attrs):
            raise InputError(f"expected {len(attrs)} tokens, got {len(tokens)}")
        values = tuple(a.index_of(t) for a, t in zip(attrs, tokens))
        return Instance(values, values[self.schema.class_index])

    def subset(self, indices: Iterable[int]) -> "Dataset":
        return Dataset(self.schema, tuple(self.instances[i] for i in indices))

    def to_csv(self) -> str:
        lines = [",".join(a.name for a in self.schema.attributes)]
        lines.extend(",".join(self.decode(inst)) for inst in self.instances)
        return "\n".join(lines) + "\n"


def parse_csv(source: Union[str, TextIO], class_column: Union[str, int]) -> Dataset:
    """Parse comma-separated nominal data whose first row is a header.

    ``source`` is either the CSV text itself or an open text stream. No
    quoting is supported; every cell is taken verbatim after stripping
    surrounding whitespace.
    """
    stream = io.StringIO(source) if isinstance(source, str) else source
    rows = []
    header = None
    for lineno, line in enumerate(stream, start=1):
        line = line.rstrip("\r\n")
        if not line.strip():
            continue
        cells = [c.strip() for c in line.split(",")]
        if header is None:
            header = cells
            continue
        if len(cells) != len(header):
            raise ParseError(f"expected {len(header)} cells, found {len(cells)}", row=lineno)
        rows.append(cells)
    if header is None:
        raise EmptyDatasetError("no header row")
    if len(set(header)) != len(header):
        raise ConfigurationError(f"duplicate column names in header {header}")
    if isinstance(class_column, int):
        if not 0 <= class_column < len(header):
            raise ConfigurationError(f"class column index {class_column} out of range")
        class_index = class_column
    elif class_column in header:
        class_index = header.index(class_column)
    else:
        raise ConfigurationError(f"class column {class_column!r} not in header {header}")
    if not rows:
        raise EmptyDatasetError("header present but no data rows")

    lookups: list[dict[str, int]] = [{} for _ in header]
    encoded = []
    for cells in rows:
        codes = tuple(lk.setdefault(tok, len(lk)) for lk, tok in zip(lookups, cells))
        encoded.append(Instance(codes, codes[class_index]))
    attributes = tuple(Attribute(name, tuple(lk)) for name, lk in zip(header, lookups))
    return Dataset(AttributeSchema(attributes, class_index), tuple(encoded))


def read_csv(path: Union[str, os.PathLike], class_column: Union[str, int]) -> Dataset:
    with open(path, encoding="utf-8") as fh:
        return parse_csv(fh, class_column)


def load_weather() -> Dataset:
    """The 14-row weather data bundled with the package (class column ``Play``)."""
    text = resources.files("carforge").joinpath("data/weather.csv").read_text(encoding="utf-8")
    return parse_csv(text, "Play")


def _round_half_up(x: float) -> int:
    # guard against 0.5 * n landing a hair below .5
    return math.floor(x + 0.5 + 1e-9)


def split_stratified(d: Dataset, train_fraction: float, seed: int) -> tuple[Dataset, Dataset]:
    """Split ``d`` so each class contributes ``round(train_fraction * n_c)``
    instances to the training side, chosen by a seeded permutation.

    Both halves keep the original instance order.
    """
    if not 0.0 < train_fraction <= 1.0:
        raise ConfigurationError(f"train_fraction must lie in (0, 1], got {train_fraction}")
    rng = np.random.default_rng(seed)
    labels = d.labels
    train_idx: list[int] = []
    for c in range(d.schema.n_classes):
        members = np.flatnonzero(labels == c)
        if members.size == 0:
            continue
        take = _round_half_up(train_fraction * members.size)
        chosen = rng.permutation(members)[:take]
        train_idx.extend(int(i) for i in chosen)
    train_set = set(train_idx)
    train = sorted(train_set)
    test = [i for i in range(len(d)) if i not in train_set]
    return d.subset(train), d.subset(test)


def majority_class(d: Dataset) -> int:
    """Most frequent class value index; ties go to the lower index."""
    if len(d) == 0:
        raise EmptyDatasetError("majority class of an empty dataset")
    counts = d.class_counts()
    return max(range(len(counts)), key=lambda c: (counts[c], -c))
