"""
Mining class association rules from the weather data
=====================================================

The bundled 14-row weather table, mined at 10% support and 90% confidence.
"""

# %%
from carforge import MiningConfig, load_weather, mine_cars
from carforge.mining import format_rules

weather = load_weather()
print(weather.schema.class_values, weather.class_counts())

# the integer matrix everything else works from
print(weather.matrix[:3])

# %%
rules = mine_cars(weather, MiningConfig(min_support=0.10, min_confidence=0.90))
print(len(rules), "rules")
print(format_rules(rules[:5], weather.schema))

# %%
# each rule carries its 2x2 table: n11 n10 n01 n00
top = rules[0]
print(top.format(weather.schema), top.table, top.confidence, top.support)

# %%
# antecedent length can be capped
short = mine_cars(weather, MiningConfig(0.10, 0.90, max_antecedent_len=1))
print(format_rules(short, weather.schema))
