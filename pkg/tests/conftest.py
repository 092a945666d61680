import random
import sys

import pytest

from carforge import CARRule, Dataset, Item, count_table, load_weather
from carforge.dataset import Attribute, AttributeSchema, Instance

# The 20 sample rules printed for the weather data at 10% support / 90%
# confidence: (antecedent items, class, antecedent count). Every one has
# confidence 1, so the rule count equals the antecedent count.
WEATHER_SAMPLE_RULES = [
    ({"Outlook": "overcast"}, "yes", 4),
    ({"Humidity": "normal", "Windy": "FALSE"}, "yes", 4),
    ({"Outlook": "sunny", "Humidity": "high"}, "no", 3),
    ({"Outlook": "rainy", "Windy": "FALSE"}, "yes", 3),
    ({"Outlook": "sunny", "Temperature": "hot"}, "no", 2),
    ({"Outlook": "sunny", "Humidity": "normal"}, "yes", 2),
    ({"Outlook": "overcast", "Temperature": "hot"}, "yes", 2),
    ({"Outlook": "overcast", "Humidity": "high"}, "yes", 2),
    ({"Outlook": "overcast", "Humidity": "normal"}, "yes", 2),
    ({"Outlook": "overcast", "Windy": "FALSE"}, "yes", 2),
    ({"Outlook": "overcast", "Windy": "TRUE"}, "yes", 2),
    ({"Outlook": "rainy", "Windy": "TRUE"}, "no", 2),
    ({"Temperature": "mild", "Humidity": "normal"}, "yes", 2),
    ({"Temperature": "cool", "Windy": "FALSE"}, "yes", 2),
    ({"Outlook": "sunny", "Temperature": "hot", "Humidity": "high"}, "no", 2),
    ({"Outlook": "sunny", "Humidity": "high", "Windy": "FALSE"}, "no", 2),
    ({"Outlook": "overcast", "Temperature": "hot", "Windy": "FALSE"}, "yes", 2),
    ({"Outlook": "rainy", "Temperature": "mild", "Windy": "FALSE"}, "yes", 2),
    ({"Outlook": "rainy", "Humidity": "normal", "Windy": "FALSE"}, "yes", 2),
    ({"Temperature": "cool", "Humidity": "normal", "Windy": "FALSE"}, "yes", 2),
]


def make_rule(d: Dataset, items: dict, cls: str) -> CARRule:
    schema = d.schema
    ante = []
    for name, value in items.items():
        a = schema.attribute_index(name)
        ante.append(Item(a, schema.attributes[a].index_of(value)))
    c = schema.class_attribute.index_of(cls)
    return CARRule(tuple(ante), c, count_table(ante, c, d))


@pytest.fixture(scope="session")
def weather():
    return load_weather()


@pytest.fixture(scope="session")
def sample_rules(weather):
    """Sample rules 1..20 as CARRule objects, index 0 = rule 1."""
    return [make_rule(weather, items, cls) for items, cls, _ in WEATHER_SAMPLE_RULES]


def random_dataset(rng: random.Random, n_instances: int, value_counts, n_classes: int) -> Dataset:
    """Uniform random nominal data; the class is the last attribute."""
    attrs = [Attribute(f"a{i}", tuple(f"v{j}" for j in range(k))) for i, k in enumerate(value_counts)]
    attrs.append(Attribute("cls", tuple(f"c{j}" for j in range(n_classes))))
    schema = AttributeSchema(tuple(attrs), len(attrs) - 1)
    instances = []
    for _ in range(n_instances):
        vals = tuple(rng.randrange(k) for k in value_counts) + (rng.randrange(n_classes),)
        instances.append(Instance(vals, vals[-1]))
    return Dataset(schema, tuple(instances))


def planted_dataset(seed: int = 7, n: int = 500) -> Dataset:
    """Attribute ``key`` fully determines the class; three noise attributes.

    Exactly half of the instances fall in each class.
    """
    rng = random.Random(seed)
    attrs = (
        Attribute("noise1", ("a", "b", "c")),
        Attribute("key", ("k0", "k1")),
        Attribute("noise2", ("a", "b", "c")),
        Attribute("noise3", ("a", "b")),
        Attribute("label", ("pos", "neg")),
    )
    schema = AttributeSchema(attrs, 4)
    instances = []
    for i in range(n):
        key = i % 2
        vals = (rng.randrange(3), key, rng.randrange(3), rng.randrange(2), key)
        instances.append(Instance(vals, key))
    return Dataset(schema, tuple(instances))


def random_tables(seed: int, count: int, max_count: int = 10_000):
    """Random 2x2 tables with positive margins; about a third have one
    empty cell so infinite and boundary values get exercised."""
    rng = random.Random(seed)
    tables = []
    for _ in range(count):
        cells = [rng.randint(1, max_count) for _ in range(4)]
        if rng.random() < 0.35:
            cells[rng.randrange(4)] = 0
        tables.append(tuple(cells))
    return tables


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
