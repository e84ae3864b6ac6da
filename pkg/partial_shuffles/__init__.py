"""
partial_shuffles - 부분 셔플 Π(a,b) 회피 클래스

S 맵과 그 보조정리 검증, Wilf 동치 검증, δ_m 을 더한 클래스의 개수 다항식,
페그 순열 구성을 제공한다.
"""
from .perm import Permutation, PatternBasis, contains, find_occurrence, avoids_all
from .shuffles import ShuffleParams, partial_shuffle, sigma, basis_for, find_mark
from .smap import s_apply, s_iterate, check_lemmas, check_injectivity
from .enumeration import CountSequence, enumerate_avoiders, count_avoiders, check_wilf
from .analysis import BinomialPolynomial, fit_binomial_polynomial, conjecture_polynomial

__version__ = "0.1.0"

__all__ = [
    'Permutation',
    'PatternBasis',
    'contains',
    'find_occurrence',
    'avoids_all',
    'ShuffleParams',
    'partial_shuffle',
    'sigma',
    'basis_for',
    'find_mark',
    's_apply',
    's_iterate',
    'check_lemmas',
    'check_injectivity',
    'CountSequence',
    'enumerate_avoiders',
    'count_avoiders',
    'check_wilf',
    'BinomialPolynomial',
    'fit_binomial_polynomial',
    'conjecture_polynomial',
]
