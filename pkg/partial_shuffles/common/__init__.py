# Common utilities shared across packages
from .constants import *
from .errors import (
    ShuffleError,
    InvalidParamsError,
    InvalidInputError,
    CountOverflowError,
    NoStabilizationError,
    IntervalViolationError,
)
from .report import CheckReport, REPORT_HEADER

__all__ = [
    'MAX_SWEEP_N', 'MAX_CLASS_N', 'MAX_COUNT_N', 'MAX_DELTA_COUNT_N', 'MAX_PEG_N', 'MAX_EXTREMAL_N',
    'DEFAULT_WORKERS', 'U64_MAX', 'HOLDOUT_POINTS', 'WITNESS_LIMIT',
    'ShuffleError',
    'InvalidParamsError',
    'InvalidInputError',
    'CountOverflowError',
    'NoStabilizationError',
    'IntervalViolationError',
    'CheckReport',
    'REPORT_HEADER',
]
