# The S-map, its iterate, and exhaustive lemma checks
from .s_map import SStep, IterationResult, rotate, s_apply, s_iterate, iteration_cap
from .checks import LEMMA_CHECKS, LemmaTally, LemmaSweep, check_lemmas, check_injectivity

__all__ = [
    'SStep',
    'IterationResult',
    'rotate',
    's_apply',
    's_iterate',
    'iteration_cap',
    'LEMMA_CHECKS',
    'LemmaTally',
    'LemmaSweep',
    'check_lemmas',
    'check_injectivity',
]
