"""Associative classification with class association rules.

Mine rules from nominal data, rank them with interestingness measures,
select a rule list by database coverage and predict by weighted
chi-square voting.
"""
from .classifier import ClassifierModel, Prediction, evaluate_accuracy, weighted_chi2_score
from .dataset import (
    Attribute,
    AttributeSchema,
    Dataset,
    Instance,
    Item,
    load_weather,
    majority_class,
    parse_csv,
    read_csv,
    split_stratified,
)
from .errors import (
    CarForgeError,
    ConfigurationError,
    DataError,
    EmptyDatasetError,
    InputError,
    ParseError,
)
from .harness import PipelineConfig, ReportRow, run_matrix, run_pipeline
from .measures import ALL_MEASURES, MeasureId, evaluate, max_chi_square
from .mining import CARRule, ContingencyTable, MiningConfig, count_table, mine_cars
from .ordering import (
    OrderingStrategy,
    compare_acs,
    compare_csa,
    order,
    prune_specific,
    prune_threshold,
    prune_top_k,
)
from .selection import CoverageConfig, select_by_coverage

__version__ = "0.1.0"
