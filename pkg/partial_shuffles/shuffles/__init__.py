# Partial shuffles, the shared pattern sigma and the underline-a mark
from .params import ShuffleParams, splits_of
from .partial_shuffle import partial_shuffle, sigma, basis_for
from .roles import RunProfile, run_profile, displaced_positions
from .mark import ShuffleMark, find_mark

__all__ = [
    'ShuffleParams',
    'splits_of',
    'partial_shuffle',
    'sigma',
    'basis_for',
    'RunProfile',
    'run_profile',
    'displaced_positions',
    'ShuffleMark',
    'find_mark',
]
