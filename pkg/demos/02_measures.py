"""
Interestingness measures on one contingency table
==================================================
"""

# %%
import math

import numpy as np

from carforge import ContingencyTable, MeasureId, evaluate, max_chi_square
from carforge.measures import ALL_MEASURES, evaluate_all, sort_key

overcast = ContingencyTable(4, 0, 5, 5)   # overcast -> yes on the weather data
values = evaluate_all(overcast)
for m in ALL_MEASURES:
    print(f"{m.value:26s} {values[m]: .6f}")

# %%
# an exception-free rule sends some measures to infinity
print(values[MeasureId.Conviction], values[MeasureId.OddsRatio])

# zero margins make a measure undefined (nan); undefined sorts below -inf
empty = ContingencyTable(0, 0, 3, 2)
print(evaluate(MeasureId.Confidence, empty))
print(sorted([1.0, math.nan, -math.inf, math.inf], key=sort_key))

# %%
# chi-square and its upper bound for the table's margins
print(evaluate(MeasureId.ChiSquare, overcast), max_chi_square(overcast))

# %%
# measures over many random tables at once, e.g. Lift against Cosine
rng = np.random.default_rng(0)
cells = rng.integers(1, 200, size=(500, 4))
lift = np.array([evaluate(MeasureId.Lift, ContingencyTable(*map(int, c))) for c in cells])
cosine = np.array([evaluate(MeasureId.Cosine, ContingencyTable(*map(int, c))) for c in cells])
print(np.corrcoef(lift, cosine)[0, 1])
