"""
The measure-by-pipeline experiment matrix
=========================================

A synthetic dataset with one attribute that decides the class and three
noise attributes, split in half, then every measure under pipeline
types 1 to 3 plus the two CSA baselines.
"""

# %%
import numpy as np

from carforge import Dataset, MeasureId, PipelineConfig, run_matrix, split_stratified
from carforge.dataset import Attribute, AttributeSchema, Instance
from carforge.harness import report_csv
from carforge.measures import ALL_MEASURES

rng = np.random.default_rng(3)
n = 400
key = rng.integers(0, 2, n)
noise = rng.integers(0, 3, (n, 3))
# 10% label noise keeps the matrix from being all 100%
label = np.where(rng.random(n) < 0.1, 1 - key, key)
table = np.column_stack([noise[:, 0], key, noise[:, 1], noise[:, 2], label])

schema = AttributeSchema((
    Attribute("n1", ("a", "b", "c")),
    Attribute("key", ("k0", "k1")),
    Attribute("n2", ("a", "b", "c")),
    Attribute("n3", ("a", "b", "c")),
    Attribute("cls", ("pos", "neg")),
), class_index=4)
data = Dataset(schema, tuple(Instance(tuple(map(int, row)), int(row[4])) for row in table))

# %%
train, test = split_stratified(data, 0.5, seed=0)
rows = run_matrix(train, test, PipelineConfig(), ALL_MEASURES)
print(report_csv(rows[:8]))

# %%
acc = np.array([r.accuracy for r in rows])
print(len(rows), "rows; accuracy min/median/max", acc.min(), np.median(acc), acc.max())
worst = sorted(rows, key=lambda r: r.accuracy)[:5]
for r in worst:
    print(r.measure, r.pipeline, r.correct, "/", r.total, r.selected_rules, "rules")
