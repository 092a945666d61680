import io
import random

import pytest
from hypothesis import given, settings, strategies as st

from carforge import (
    ConfigurationError,
    EmptyDatasetError,
    ParseError,
    majority_class,
    parse_csv,
    split_stratified,
)
from carforge.dataset import Instance, read_csv

from conftest import random_dataset


def test_weather_shape(weather):
    assert len(weather) == 14
    assert [a.name for a in weather.schema.attributes] == ["Outlook", "Temperature", "Humidity", "Windy", "Play"]
    assert set(weather.schema.class_values) == {"yes", "no"}
    assert weather.schema.class_index == 4


def test_weather_class_counts(weather):
    counts = dict(zip(weather.schema.class_values, weather.class_counts()))
    assert counts == {"yes": 9, "no": 5}


def test_encoding_by_first_appearance(weather):
    assert weather.schema.attributes[0].values == ("sunny", "overcast", "rainy")
    assert weather.schema.class_values == ("no", "yes")


def test_class_column_by_index():
    d = parse_csv("a,b\nx,p\ny,q\n", 0)
    assert d.schema.class_index == 0
    assert d.schema.class_values == ("x", "y")


def test_stream_source(tmp_path, weather):
    path = tmp_path / "w.csv"
    path.write_text(weather.to_csv())
    assert read_csv(path, "Play") == weather
    with open(path) as fh:
        assert parse_csv(fh, "Play") == weather


def test_ragged_row_reports_line():
    with pytest.raises(ParseError) as err:
        parse_csv("a,b,c\nx,y,z\nx,y\n", "c")
    assert err.value.row == 3


def test_unknown_class_column():
    with pytest.raises(ConfigurationError):
        parse_csv("a,b\nx,y\n", "zzz")


@pytest.mark.parametrize("text", ["a,b,c\n", "a,b,c\n\n\n", ""])
def test_header_only_is_empty(text):
    with pytest.raises(EmptyDatasetError):
        parse_csv(text, "a")


def test_roundtrip_tokens(weather):
    lines = weather.to_csv().splitlines()[1:]
    for inst, line in zip(weather.instances, lines):
        assert ",".join(weather.decode(inst)) == line
        assert weather.encode(line.split(",")) == inst


class TestSplit:
    def test_weather_half(self, weather):
        for seed in range(5):
            train, test = split_stratified(weather, 0.5, seed)
            counts = dict(zip(weather.schema.class_values, train.class_counts()))
            # round-half-up: 4.5 -> 5 yes, 2.5 -> 3 no
            assert counts == {"yes": 5, "no": 3}
            assert len(test) == 6

    def test_reproducible(self, weather):
        assert split_stratified(weather, 0.5, 11) == split_stratified(weather, 0.5, 11)

    def test_balanced_2000(self):
        d = random_dataset(random.Random(0), 2000, [3, 3], 2)
        # force 1000 per class
        insts = tuple(Instance(i.values[:-1] + (k % 2,), k % 2) for k, i in enumerate(d.instances))
        d = type(d)(d.schema, insts)
        train, test = split_stratified(d, 0.5, 3)
        assert len(train) == len(test) == 1000
        assert train.class_counts() == [500, 500]
        assert test.class_counts() == [500, 500]

    def test_fraction_one(self, weather):
        train, test = split_stratified(weather, 1.0, 0)
        assert train == weather
        assert len(test) == 0

    @pytest.mark.parametrize("f", [0.0, -0.1, 1.01])
    def test_bad_fraction(self, weather, f):
        with pytest.raises(ConfigurationError):
            split_stratified(weather, f, 0)

    @settings(max_examples=50, deadline=None)
    @given(st.floats(0.01, 1.0), st.integers(0, 10_000), st.integers(1, 60))
    def test_partition(self, f, seed, n):
        d = random_dataset(random.Random(n), n, [2, 3], 3)
        train, test = split_stratified(d, f, seed)
        assert len(train) + len(test) == len(d)
        pooled = sorted(train.instances + test.instances, key=lambda i: i.values)
        assert pooled == sorted(d.instances, key=lambda i: i.values)


class TestMajority:
    def test_weather(self, weather):
        assert weather.schema.class_values[majority_class(weather)] == "yes"

    def test_single(self):
        d = parse_csv("a,c\nx,q\n", "c")
        assert majority_class(d) == 0

    def test_tie_goes_low(self):
        d = parse_csv("a,c\nx,q\ny,p\n", "c")
        assert majority_class(d) == 0

    def test_empty(self, weather):
        with pytest.raises(EmptyDatasetError):
            majority_class(weather.subset([]))

    @settings(max_examples=30, deadline=None)
    @given(st.randoms(use_true_random=False))
    def test_order_invariant(self, rnd):
        d = random_dataset(random.Random(1), 25, [2], 3)
        idx = list(range(len(d)))
        rnd.shuffle(idx)
        assert majority_class(d.subset(idx)) == majority_class(d)
