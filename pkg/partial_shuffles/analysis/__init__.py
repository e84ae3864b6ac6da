# Exact polynomial fitting and the numerical theory of the delta-restricted classes
from .catalan import binomial, catalan, transposed_catalan_T
from .bounded_sequences import (
    BoundedSumSequence,
    BoundedCount,
    count_bounded_sequences,
    is_b_sequence,
    a_to_b_sequence,
    b_to_a_sequence,
)
from .binomial_polynomial import BinomialPolynomial
from .fitting import (
    FitResult,
    difference_table,
    newton_at_zero,
    fit_binomial_polynomial,
    fit_sequence,
    observed_threshold,
)
from .theorems import (
    default_n_start,
    expected_degree,
    check_degree_and_leading,
    conjecture_polynomial,
    check_conjecture,
)
from .extremal import (
    erdos_szekeres_extremal,
    extremal_witness,
    erdos_szekeres_permutation,
    check_extremal,
)

__all__ = [
    'binomial',
    'catalan',
    'transposed_catalan_T',
    'BoundedSumSequence',
    'BoundedCount',
    'count_bounded_sequences',
    'is_b_sequence',
    'a_to_b_sequence',
    'b_to_a_sequence',
    'BinomialPolynomial',
    'FitResult',
    'difference_table',
    'newton_at_zero',
    'fit_binomial_polynomial',
    'fit_sequence',
    'observed_threshold',
    'default_n_start',
    'expected_degree',
    'check_degree_and_leading',
    'conjecture_polynomial',
    'check_conjecture',
    'erdos_szekeres_extremal',
    'extremal_witness',
    'erdos_szekeres_permutation',
    'check_extremal',
]
