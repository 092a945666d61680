"""
Database coverage and weighted chi-square prediction
====================================================
"""

# %%
from carforge import ClassifierModel, CoverageConfig, MiningConfig, OrderingStrategy
from carforge import evaluate_accuracy, load_weather, mine_cars, order, select_by_coverage
from carforge.classifier import format_predictions

weather = load_weather()
ranked = order(mine_cars(weather, MiningConfig(0.10, 0.50)), OrderingStrategy("csa"))

# a rule survives only if it still covers some row seen fewer than delta times
for delta in (1, 3):
    chosen = select_by_coverage(ranked, weather, CoverageConfig(delta))
    print(delta, len(chosen), "of", len(ranked))

# %%
model = ClassifierModel.build(select_by_coverage(ranked, weather, CoverageConfig(3)), weather)
print(weather.schema.class_values[model.default_class], evaluate_accuracy(model, weather))

# %%
# one prediction; basis is default, unanimous or weighted-chi2
p = model.predict(weather.encode(["sunny", "hot", "normal", "FALSE", "yes"]))
print(weather.schema.class_values[p.label], p.basis, p.scores)

# %%
print(format_predictions(model, weather))
