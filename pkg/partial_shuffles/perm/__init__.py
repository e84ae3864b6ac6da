# Permutations, containment, symmetries and statistics
from .permutation import Permutation, make_iota, make_delta, standardize, parse_many
from .containment import (
    Occurrence,
    PatternMatcher,
    matcher_for,
    contains,
    find_occurrence,
    avoids_all,
    is_occurrence,
)
from .basis import PatternBasis
from .statistics import descent_set, longest_decreasing, longest_increasing
from .symmetry import reverse, complement, reverse_complement, inverse

__all__ = [
    'Permutation',
    'make_iota',
    'make_delta',
    'standardize',
    'parse_many',
    'Occurrence',
    'PatternMatcher',
    'matcher_for',
    'contains',
    'find_occurrence',
    'avoids_all',
    'is_occurrence',
    'PatternBasis',
    'descent_set',
    'longest_decreasing',
    'longest_increasing',
    'reverse',
    'complement',
    'reverse_complement',
    'inverse',
]
