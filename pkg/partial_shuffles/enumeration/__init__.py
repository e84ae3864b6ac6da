# Pruned enumeration of avoidance classes and Wilf-equivalence checks
from .count_sequence import CountSequence
from .avoiders import AvoiderSearch, enumerate_avoiders, count_size, count_avoiders
from .wilf import check_wilf, check_symmetry, common_counts

__all__ = [
    'CountSequence',
    'AvoiderSearch',
    'enumerate_avoiders',
    'count_size',
    'count_avoiders',
    'check_wilf',
    'check_symmetry',
    'common_counts',
]
