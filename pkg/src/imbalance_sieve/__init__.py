"""Imbalance sieve: exact enumeration of reduced (p-q)/(p+q) fractions.

Lexicographic pair enumeration with closed-form first-appearance laws for
reduced denominators, a duplicate-free stream of the unit-interval rationals
with totient-based ranking, and a Cayley-transform rank/unrank bijection
between the naturals and all of Q. Arithmetic is exact and confined to
signed 64-bit range, with overflow raised rather than wrapped, and every
closed form is backed by a brute-force verification oracle.
"""

from .arith import (
    I64_MAX,
    I64_MIN,
    MAX_INDEX,
    MAX_PAIR_P,
    Fraction,
    Pair,
    imbalance,
    iteration_index,
    make_fraction,
    pair_from_index,
    phi_inverse,
    reduced_denominator,
)
from .qenum import QEntry, cayley, cayley_inverse, invert, negate, q_entries, q_rank, q_unrank
from .sieve import (
    FirstAppearance,
    RankedFraction,
    SieveItem,
    TotientTable,
    count_new_denominators,
    distinct_fraction_at,
    distinct_fractions,
    first_appearance,
    first_appearance_index,
    first_appearance_order,
    fraction_rank,
    sieve_stream,
)
from .verify import (
    CheckReport,
    Counterexample,
    check_bijection,
    check_density,
    check_first_appearance,
    check_gcd_lemma,
    check_q_enumeration,
)

__version__ = "0.1.0"

__all__ = [
    "CheckReport",
    "Counterexample",
    "FirstAppearance",
    "Fraction",
    "I64_MAX",
    "I64_MIN",
    "MAX_INDEX",
    "MAX_PAIR_P",
    "Pair",
    "QEntry",
    "RankedFraction",
    "SieveItem",
    "TotientTable",
    "cayley",
    "cayley_inverse",
    "check_bijection",
    "check_density",
    "check_first_appearance",
    "check_gcd_lemma",
    "check_q_enumeration",
    "count_new_denominators",
    "distinct_fraction_at",
    "distinct_fractions",
    "first_appearance",
    "first_appearance_index",
    "first_appearance_order",
    "fraction_rank",
    "imbalance",
    "invert",
    "iteration_index",
    "make_fraction",
    "negate",
    "pair_from_index",
    "phi_inverse",
    "q_entries",
    "q_rank",
    "q_unrank",
    "reduced_denominator",
    "sieve_stream",
]
