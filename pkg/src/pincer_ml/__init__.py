"""Multilevel frequent-itemset mining with a bidirectional border search.

The package mines association rules over a concept hierarchy: each
taxonomy level gets its own support threshold, the maximal frequent
itemsets are located by a levelwise search that simultaneously shrinks
an upper border, and the full frequent collection plus rules are
recovered from that border afterwards.
"""
from .baselines import (
    AprioriResult,
    ComparisonReport,
    MlT2l1Result,
    apriori,
    compare,
    ml_t2l1,
)
from .errors import MiningError
from .itemsets import BorderState, Itemset, itemset
from .multilevel import (
    DescentPolicy,
    LevelConfig,
    LevelResult,
    MultiLevelResult,
    mine_multilevel,
)
from .oracle import OracleResult, brute_force
from .pincer import PincerResult, pincer_search
from .rules import FrequentSet, Rule, expand_frequent, generate_rules
from .taxonomy import ItemCode, Taxonomy, load_taxonomy, parse_code, read_taxonomy_csv
from .transactions import (
    LevelMatrix,
    PassCounter,
    TransactionDB,
    count_support,
    load_transactions,
    project_to_level,
    read_transactions_csv,
)

__version__ = "0.1.0"

__all__ = [
    "AprioriResult",
    "BorderState",
    "ComparisonReport",
    "DescentPolicy",
    "FrequentSet",
    "ItemCode",
    "Itemset",
    "LevelConfig",
    "LevelMatrix",
    "LevelResult",
    "MiningError",
    "MlT2l1Result",
    "MultiLevelResult",
    "OracleResult",
    "PassCounter",
    "PincerResult",
    "Rule",
    "Taxonomy",
    "TransactionDB",
    "apriori",
    "brute_force",
    "compare",
    "count_support",
    "expand_frequent",
    "generate_rules",
    "itemset",
    "load_taxonomy",
    "load_transactions",
    "mine_multilevel",
    "ml_t2l1",
    "parse_code",
    "pincer_search",
    "project_to_level",
    "read_taxonomy_csv",
    "read_transactions_csv",
    "__version__",
]
