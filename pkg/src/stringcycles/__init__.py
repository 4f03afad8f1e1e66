"""Exact counts of fixed-length strings over a finite alphabet, grouped by
digit sum and by the order of their orbit under cyclic shifts."""

from .arith import (
    ChainTally,
    binomial,
    chain_tally,
    divisors,
    factorize,
    q_coefficient,
)
from .cyclecount import (
    CountTable,
    OrderCount,
    VerificationError,
    cycle_table,
    order_set,
    strings_of_order,
    strings_of_order_full,
    strings_of_order_recursive,
    strings_of_order_total,
)
from .enumeration import (
    DEFAULT_BUDGET,
    BudgetExceededError,
    Word,
    canonical_rotation,
    classify_all,
    digit_sum,
    epicycle_construction_check,
    shift,
    word_order,
)
from .sumcount import strings_with_sum, sum_distribution_gf

__version__ = "0.1.0"

__all__ = [
    "BudgetExceededError",
    "ChainTally",
    "CountTable",
    "DEFAULT_BUDGET",
    "OrderCount",
    "VerificationError",
    "Word",
    "binomial",
    "canonical_rotation",
    "chain_tally",
    "classify_all",
    "cycle_table",
    "digit_sum",
    "divisors",
    "epicycle_construction_check",
    "factorize",
    "order_set",
    "q_coefficient",
    "shift",
    "strings_of_order",
    "strings_of_order_full",
    "strings_of_order_recursive",
    "strings_of_order_total",
    "strings_with_sum",
    "sum_distribution_gf",
    "word_order",
]
