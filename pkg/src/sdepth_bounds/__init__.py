"""Stanley depth of squarefree monomial ideals after adjoining variables.

Exact interval-partition search for small ideals, closed-form upper bounds for
two families, and exact comparisons between those bounds.
"""

from .bounds import (
    BoundValue,
    bound_corollary,
    bound_iterated_adjoin,
    bound_thm1,
    bound_thm2,
    bound_thm3,
    bound_thm4,
    counting_feasible_intersection,
    counting_feasible_veronese,
    max_k_from_counting,
)
from .comparison import (
    lemma1_check,
    lemma3_check,
    lemma4_check,
    lemma_section4_ordering,
    thm4_beats_thm3,
    thm5_case_thresholds,
    thm6_internals,
    thm6_predicate,
)
from .errors import InvariantViolation, ParameterError, ResourceLimitError, SearchTimeout, UnsupportedComparison
from .ideal import (
    SquarefreeIdeal,
    VarSet,
    adjoin_variables,
    make_two_prime_intersection,
    make_veronese,
    parse_ideal_spec,
)
from .poset import IntervalPartition, build_poset, sdepth_decision, sdepth_exact, validate_partition
from .surd import Surd, cmp_surd, floor_surd

__version__ = "0.1.0"
