"""
Ordering and pruning rule lists
===============================
"""

# %%
from carforge import MeasureId, MiningConfig, OrderingStrategy, load_weather, mine_cars, order
from carforge import prune_specific, prune_threshold, prune_top_k

weather = load_weather()
rules = mine_cars(weather, MiningConfig(0.10, 0.50))
show = lambda rs: [r.format(weather.schema) for r in rs[:4]]

# CSA: confidence, then support, then shorter antecedent
print(show(order(rules, OrderingStrategy("csa"))))
# ACS puts long antecedents first
print(show(order(rules, OrderingStrategy("acs"))))

# %%
# a measure in front of CSA, a measure alone, and the top-k hybrid
for text in ("mcsa:Kulczynski", "sm:Lift", "hybrid:Lift:10"):
    s = OrderingStrategy.parse(text)
    print(s, show(order(rules, s)))

# %%
# dropping rules that a more general, better ranked rule already covers
general = prune_specific(order(rules, OrderingStrategy("csa")))
print(len(rules), "->", len(general))

print(len(prune_top_k(rules, MeasureId.ChiSquare, 15)))
print(len(prune_threshold(rules, MeasureId.Lift, 1.2)))
