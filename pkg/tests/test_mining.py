import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from carforge import ConfigurationError, ContingencyTable, MiningConfig, count_table, mine_cars
from carforge.dataset import Attribute, AttributeSchema, Dataset, Instance, Item
from carforge.mining import format_rules, parse_rules

from conftest import WEATHER_SAMPLE_RULES, random_dataset
from oracles import brute_force_cars


def _items(d, **pairs):
    out = []
    for name, value in pairs.items():
        a = d.schema.attribute_index(name)
        out.append(Item(a, d.schema.attributes[a].index_of(value)))
    return out


def _as_oracle_dict(rules):
    return {(r.key[0], r.consequent): (r.table.n11, r.table.nX, r.table.nY, r.table.N) for r in rules}


def _oracle_for(d, min_sup, min_conf):
    ci = d.schema.class_index
    rows = [tuple(v for a, v in enumerate(i.values) if a != ci) for i in d.instances]
    nvals = [len(a.values) for k, a in enumerate(d.schema.attributes) if k != ci]
    return brute_force_cars(rows, [i.class_label for i in d.instances], nvals, min_sup, min_conf)


class TestCountTable:
    def test_overcast_yes(self, weather):
        yes = weather.schema.class_attribute.index_of("yes")
        assert count_table(_items(weather, Outlook="overcast"), yes, weather) == ContingencyTable(4, 0, 5, 5)

    def test_sunny_high_no(self, weather):
        no = weather.schema.class_attribute.index_of("no")
        t = count_table(_items(weather, Outlook="sunny", Humidity="high"), no, weather)
        assert t == ContingencyTable(3, 0, 2, 9)

    def test_empty_antecedent(self, weather):
        yes = weather.schema.class_attribute.index_of("yes")
        assert count_table([], yes, weather) == ContingencyTable(9, 5, 0, 0)

    def test_derived_margins(self):
        t = ContingencyTable(3, 0, 2, 9)
        assert (t.nX, t.nY, t.N) == (3, 5, 14)
        assert ContingencyTable.from_margins(3, 3, 5, 14) == t


class TestWeatherGolden:
    CFG = MiningConfig(0.10, 0.90, None, None)

    def test_contains_every_sample_rule(self, weather):
        mined = {(r.key[0], r.consequent): r for r in mine_cars(weather, self.CFG)}
        schema = weather.schema
        for items, cls, count in WEATHER_SAMPLE_RULES:
            ante = tuple(sorted(
                (schema.attribute_index(n), schema.attributes[schema.attribute_index(n)].index_of(v))
                for n, v in items.items()
            ))
            rule = mined[(ante, schema.class_attribute.index_of(cls))]
            assert rule.table.nX == count
            assert rule.table.n11 == count
            assert rule.confidence == 1.0

    def test_equals_brute_force(self, weather):
        assert _as_oracle_dict(mine_cars(weather, self.CFG)) == _oracle_for(weather, 0.10, 0.90)

    def test_exactly_twenty(self, weather):
        assert len(mine_cars(weather, self.CFG)) == 20


def test_degenerate_thresholds():
    # one class everywhere; attribute c is constant, a and b vary
    schema = AttributeSchema(
        (Attribute("a", ("x", "y")), Attribute("b", ("p", "q")), Attribute("c", ("k",)), Attribute("cls", ("only", "other"))),
        3,
    )
    rows = [(0, 0, 0, 0), (1, 1, 0, 0), (0, 1, 0, 0)]
    d = Dataset(schema, tuple(Instance(r, r[3]) for r in rows))
    rules = mine_cars(d, MiningConfig(1.0, 1.0, None, None))
    assert [(r.key, r.table) for r in rules] == [(((((2, 0),), 0)), ContingencyTable(3, 0, 0, 0))]


@pytest.mark.parametrize("bad", [0.0, 1.5, -0.2])
def test_bad_thresholds(bad):
    with pytest.raises(ConfigurationError):
        MiningConfig(bad, 0.5)
    with pytest.raises(ConfigurationError):
        MiningConfig(0.5, bad)


def test_min_count_ceiling():
    assert MiningConfig(0.10, 0.5).min_count(14) == 2
    assert MiningConfig(0.10, 0.5).min_count(30) == 3
    assert MiningConfig(0.10, 0.5).min_count(31) == 4


def test_max_len(weather):
    rules = mine_cars(weather, MiningConfig(0.10, 0.90, 2, None))
    assert len(rules) == 14
    assert max(r.size for r in rules) == 2


def test_max_rules_is_prefix_of_unbounded(weather):
    full = mine_cars(weather, MiningConfig(0.10, 0.50, None, None))
    for cap in (1, 7, 30, len(full) + 5):
        capped = mine_cars(weather, MiningConfig(0.10, 0.50, None, cap))
        assert capped == full[:cap]
    sizes = [r.size for r in full]
    assert sizes == sorted(sizes)


def test_export_roundtrip(weather):
    rules = mine_cars(weather, MiningConfig(0.10, 0.90, None, None))
    text = format_rules(rules, weather.schema)
    assert text.splitlines()[0] == "Outlook=overcast => yes ; 4 4 9 14"
    assert parse_rules(text, weather.schema) == rules


small_data = st.builds(
    lambda seed, n, vals, k: random_dataset(random.Random(seed), n, vals, k),
    st.integers(0, 10**6),
    st.integers(1, 30),
    st.lists(st.integers(1, 3), min_size=1, max_size=5),
    st.integers(2, 3),
)


@settings(max_examples=60, deadline=None)
@given(small_data, st.sampled_from([0.05, 0.1, 0.2, 0.3]), st.sampled_from([0.3, 0.5, 0.8, 1.0]))
def test_oracle_equivalence(d, sup, conf):
    rules = mine_cars(d, MiningConfig(sup, conf, None, None))
    assert _as_oracle_dict(rules) == _oracle_for(d, sup, conf)
    assert len(rules) == len({r.key for r in rules})


@settings(max_examples=40, deadline=None)
@given(small_data, st.sampled_from([0.1, 0.2]), st.sampled_from([0.3, 0.6]))
def test_rule_invariants(d, sup, conf):
    cfg = MiningConfig(sup, conf, None, None)
    minc = cfg.min_count(len(d))
    for r in mine_cars(d, cfg):
        assert r.table == count_table(r.antecedent, r.consequent, d)
        assert r.table.N == len(d)
        for size in range(1, r.size + 1):
            for sub in itertools.combinations(r.antecedent, size):
                assert count_table(sub, r.consequent, d).nX >= minc
