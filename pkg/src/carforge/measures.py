"""Interestingness measures over a rule's 2x2 contingency table.

Values are plain floats on the extended real line: ``inf`` and ``-inf``
for a non-zero numerator over a zero denominator, ``nan`` for "undefined"
(0/0 and anything computed from it). ``sort_key`` gives the total order
used for ranking, with undefined below ``-inf``.

Probabilities are counts over N. Complements such as ``1 - P(Y)`` and the
covariance ``P(XY) - P(X)P(Y)`` are formed from integer counts first, so a
quantity that is zero in exact arithmetic is exactly ``0.0`` here too.
"""
from __future__ import annotations

import enum
import math
from typing import Callable, Union

from .errors import ConfigurationError
from .mining import ContingencyTable

INF = math.inf
NAN = math.nan


class MeasureId(enum.Enum):
    Support = "Support"
    Confidence = "Confidence"
    Coverage = "Coverage"
    Prevalence = "Prevalence"
    Recall = "Recall"
    Specificity1 = "Specificity1"
    Accuracy = "Accuracy"
    Lift = "Lift"
    Leverage1 = "Leverage1"
    AddedValue = "AddedValue"
    RelativeRisk = "RelativeRisk"
    Jaccard = "Jaccard"
    CertaintyFactor = "CertaintyFactor"
    OddsRatio = "OddsRatio"
    YuleQ = "YuleQ"
    YuleY = "YuleY"
    Klosgen = "Klosgen"
    Conviction = "Conviction"
    CollectiveStrength = "CollectiveStrength"
    LaplaceCorrection = "LaplaceCorrection"
    GiniIndex = "GiniIndex"
    PhiCoefficient = "PhiCoefficient"
    JMeasure = "JMeasure"
    PiatetskyShapiro = "PiatetskyShapiro"
    Cosine = "Cosine"
    Loevinger = "Loevinger"
    InformationGain = "InformationGain"
    SebagSchoenauer = "SebagSchoenauer"
    LeastContradiction = "LeastContradiction"
    OddMultiplier = "OddMultiplier"
    ExampleCounterexampleRate = "ExampleCounterexampleRate"
    Zhang = "Zhang"
    Correlation = "Correlation"
    Leverage2 = "Leverage2"
    Coherence = "Coherence"
    Specificity2 = "Specificity2"
    AllConfidence = "AllConfidence"
    MaxConfidence = "MaxConfidence"
    Kulczynski = "Kulczynski"
    ChiSquare = "ChiSquare"
    WRA = "WRA"

    @classmethod
    def parse(cls, name: Union[str, "MeasureId"]) -> "MeasureId":
        """Look a measure up by identifier, ignoring case."""
        if isinstance(name, cls):
            return name
        wanted = str(name).strip().lower()
        for m in cls:
            if m.value.lower() == wanted:
                return m
        raise ConfigurationError(f"unknown measure {name!r}")


ALL_MEASURES: tuple[MeasureId, ...] = tuple(MeasureId)


def div(a: float, b: float) -> float:
    if b == 0:
        if a > 0:
            return INF
        if a < 0:
            return -INF
        return NAN
    return a / b


def _min(a: float, b: float) -> float:
    if math.isnan(a) or math.isnan(b):
        return NAN
    return min(a, b)


def _max(a: float, b: float) -> float:
    if math.isnan(a) or math.isnan(b):
        return NAN
    return max(a, b)


def _log(x: float) -> float:
    if math.isnan(x) or x < 0:
        return NAN
    if x == 0:
        return -INF
    return math.log(x)


def _xlog(x: float, ratio: float) -> float:
    """``x * log(ratio)`` with the convention 0 * log(anything) = 0."""
    if x == 0:
        return 0.0
    return x * _log(ratio)


def _sqrt(x: float) -> float:
    return math.sqrt(x) if x >= 0 else NAN


class _Probs:
    """Joint, marginal and conditional probabilities of one table."""

    __slots__ = (
        "N", "xy", "x_ny", "nx_y", "nx_ny", "x", "y", "nx", "ny", "cov",
        "y_x", "x_y", "ny_x", "y_nx", "ny_nx", "t",
    )

    def __init__(self, t: ContingencyTable):
        N = t.N
        self.t = t
        self.N = N
        self.xy = t.n11 / N
        self.x_ny = t.n10 / N
        self.nx_y = t.n01 / N
        self.nx_ny = t.n00 / N
        self.x = t.nX / N
        self.y = t.nY / N
        self.nx = (t.n01 + t.n00) / N
        self.ny = (t.n10 + t.n00) / N
        self.cov = (t.n11 * t.n00 - t.n10 * t.n01) / (N * N)
        self.y_x = div(self.xy, self.x)
        self.x_y = div(self.xy, self.y)
        self.ny_x = div(self.x_ny, self.x)
        self.y_nx = div(self.nx_y, self.nx)
        self.ny_nx = div(self.nx_ny, self.nx)


def _yule(p: _Probs, root: bool) -> float:
    ad = p.xy * p.nx_ny
    bc = p.x_ny * p.nx_y
    if root:
        ad, bc = math.sqrt(ad), math.sqrt(bc)
    return div(ad - bc, ad + bc)


def _collective_strength(p: _Probs) -> float:
    expected_agree = p.x * p.y + p.nx * p.ny
    expected_disagree = p.x * p.ny + p.nx * p.y
    observed_disagree = (p.t.n10 + p.t.n01) / p.N
    return div(p.xy + p.nx_ny, expected_agree) * div(expected_disagree, observed_disagree)


def _gini(p: _Probs) -> float:
    return (p.x * (p.y_x ** 2 + p.ny_x ** 2)
            + p.nx * (p.y_nx ** 2 + p.ny_nx ** 2)
            - p.y ** 2 - p.ny ** 2)


def chi_square(t: ContingencyTable) -> float:
    """Pearson chi-square of the table; undefined when any margin is zero."""
    nX, nY, N = t.nX, t.nY, t.N
    margins = nX * nY * (N - nX) * (N - nY)
    if margins == 0:
        return NAN
    return N * (t.n11 * t.n00 - t.n10 * t.n01) ** 2 / margins


def max_chi_square(t: ContingencyTable) -> float:
    """Largest chi-square reachable by any table with the margins of ``t``.

    Computed from raw counts as ``(min(nX, nY) - nX*nY/N)^2 * N * e`` where
    ``e`` sums the reciprocals of the four expected-cell products.
    """
    nX, nY, N = t.nX, t.nY, t.N
    nnX, nnY = N - nX, N - nY
    if nX == 0 or nY == 0 or nnX == 0 or nnY == 0:
        return NAN
    e = 1 / (nX * nY) + 1 / (nX * nnY) + 1 / (nnX * nY) + 1 / (nnX * nnY)
    return (min(nX, nY) - nX * nY / N) ** 2 * N * e


def _klosgen_b(p: _Probs) -> float:
    return math.sqrt(p.xy) * _max(p.y_x - p.y, p.x_y - p.x)


_FORMULAS: dict[MeasureId, Callable[[_Probs], float]] = {
    MeasureId.Support: lambda p: p.xy,
    MeasureId.Confidence: lambda p: p.y_x,
    MeasureId.Coverage: lambda p: p.x,
    MeasureId.Prevalence: lambda p: p.y,
    MeasureId.Recall: lambda p: p.x_y,
    MeasureId.Specificity1: lambda p: p.ny_nx,
    MeasureId.Accuracy: lambda p: p.xy + p.nx_ny,
    MeasureId.Lift: lambda p: div(p.y_x, p.y),
    MeasureId.Leverage1: lambda p: p.y_x - p.x * p.y,
    MeasureId.AddedValue: lambda p: p.y_x - p.y,
    MeasureId.RelativeRisk: lambda p: div(p.y_x, p.y_nx),
    MeasureId.Jaccard: lambda p: div(p.xy, p.x + p.y - p.xy),
    MeasureId.CertaintyFactor: lambda p: div(p.y_x - p.y, p.ny),
    MeasureId.OddsRatio: lambda p: div(p.xy * p.nx_ny, p.x_ny * p.nx_y),
    MeasureId.YuleQ: lambda p: _yule(p, root=False),
    MeasureId.YuleY: lambda p: _yule(p, root=True),
    MeasureId.Klosgen: lambda p: math.sqrt(p.xy) * (p.y_x - p.y),
    MeasureId.Conviction: lambda p: div(p.x * p.ny, p.x_ny),
    MeasureId.CollectiveStrength: _collective_strength,
    MeasureId.LaplaceCorrection: lambda p: (p.t.n11 + 1) / (p.t.nX + 2),
    MeasureId.GiniIndex: _gini,
    MeasureId.PhiCoefficient: lambda p: div(p.cov, math.sqrt(p.x * p.y * p.nx * p.ny)),
    MeasureId.JMeasure: lambda p: _xlog(p.xy, div(p.y_x, p.y)) + _xlog(p.x_ny, div(p.ny_x, p.ny)),
    MeasureId.PiatetskyShapiro: lambda p: p.cov,
    MeasureId.Cosine: lambda p: div(p.xy, math.sqrt(p.x * p.y)),
    MeasureId.Loevinger: lambda p: 1 - div(p.x_ny, p.x * p.ny),
    MeasureId.InformationGain: lambda p: _log(div(p.xy, p.x * p.y)),
    MeasureId.SebagSchoenauer: lambda p: div(p.xy, p.x_ny),
    MeasureId.LeastContradiction: lambda p: div(p.xy - p.x_ny, p.y),
    MeasureId.OddMultiplier: lambda p: div(p.xy * p.ny, p.y * p.x_ny),
    MeasureId.ExampleCounterexampleRate: lambda p: 1 - div(p.x_ny, p.xy),
    MeasureId.Zhang: lambda p: div(p.cov, _max(p.xy * p.ny, p.y * p.x_ny)),
    # printed without the square root, unlike PhiCoefficient
    MeasureId.Correlation: lambda p: div(p.cov, p.x * p.y * p.nx * p.ny),
    MeasureId.Leverage2: lambda p: p.cov,
    MeasureId.Coherence: lambda p: div(p.xy, p.x + p.y - p.xy),
    MeasureId.Specificity2: lambda p: p.nx_ny,
    MeasureId.AllConfidence: lambda p: _min(p.x_y, p.y_x),
    MeasureId.MaxConfidence: lambda p: _max(p.x_y, p.y_x),
    MeasureId.Kulczynski: lambda p: (p.x_y + p.y_x) / 2,
    MeasureId.ChiSquare: lambda p: chi_square(p.t),
    MeasureId.WRA: lambda p: p.x * (p.y_x - p.y),
}

assert set(_FORMULAS) == set(MeasureId)


def _loevinger_printed(p: _Probs) -> float:
    return 1 - div(p.x * p.ny, p.x_ny)


def evaluate(
    m: MeasureId,
    t: ContingencyTable,
    *,
    klosgen_variant: str = "A",
    loevinger_variant: str = "standard",
) -> float:
    """Value of measure ``m`` on table ``t`` (``nan`` when undefined).

    ``klosgen_variant="B"`` switches Klosgen to
    ``sqrt(P(XY)) * max(P(Y|X) - P(Y), P(X|Y) - P(X))``.

    Loevinger defaults to ``1 - P(X,not Y) / (P(X) P(not Y))``, which is 1
    for an exception-free rule. ``loevinger_variant="printed"`` gives the
    inverted ``1 - P(X) P(not Y) / P(X,not Y)`` (i.e. ``1 - Conviction``)
    that sends exception-free rules to ``-inf``.
    """
    p = _Probs(t)
    if m is MeasureId.Klosgen and klosgen_variant != "A":
        if klosgen_variant != "B":
            raise ConfigurationError(f"unknown Klosgen variant {klosgen_variant!r}")
        return _klosgen_b(p)
    if m is MeasureId.Loevinger and loevinger_variant != "standard":
        if loevinger_variant != "printed":
            raise ConfigurationError(f"unknown Loevinger variant {loevinger_variant!r}")
        return _loevinger_printed(p)
    return _FORMULAS[m](p)


def evaluate_all(t: ContingencyTable) -> dict[MeasureId, float]:
    p = _Probs(t)
    return {m: f(p) for m, f in _FORMULAS.items()}


def is_undefined(v: float) -> bool:
    return math.isnan(v)


def sort_key(v: float) -> tuple[int, float]:
    """Ascending key: undefined < -inf < finite < +inf."""
    if math.isnan(v):
        return (0, 0.0)
    return (1, v)


def desc_key(v: float) -> tuple[int, float]:
    """Key that sorts measure values in descending order, undefined last."""
    if math.isnan(v):
        return (1, 0.0)
    return (0, -v)


def at_least(v: float, threshold: float) -> bool:
    """``v >= threshold`` under the extended order (undefined is the minimum)."""
    return sort_key(v) >= sort_key(threshold)
