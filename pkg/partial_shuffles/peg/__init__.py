# Peg permutations, monotone inflation and grid classes
from .peg_permutation import Mark, PegPermutation
from .inflation import Inflation, inflate, inflate_peg, is_monotone, block_for
from .grid_class import compositions, grid_class_members
from .construction import free_slot_count, separated_peg, grid_class_size, max_free_slots

__all__ = [
    'Mark',
    'PegPermutation',
    'Inflation',
    'inflate',
    'inflate_peg',
    'is_monotone',
    'block_for',
    'compositions',
    'grid_class_members',
    'free_slot_count',
    'separated_peg',
    'grid_class_size',
    'max_free_slots',
]
