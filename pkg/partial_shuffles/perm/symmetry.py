"""대칭 연산: 역순(reverse), 여(complement), 역여(reverse complement), 역원"""
from .permutation import Permutation


def reverse(perm: Permutation) -> Permutation:
    return Permutation(perm.values[::-1])


def complement(perm: Permutation) -> Permutation:
    n = len(perm)
    return Permutation(tuple(n + 1 - v for v in perm.values))


def reverse_complement(perm: Permutation) -> Permutation:
    """π^rc: 여의 역순"""
    return reverse(complement(perm))


def inverse(perm: Permutation) -> Permutation:
    result = [0] * len(perm)
    for i, v in enumerate(perm.values):
        result[v - 1] = i + 1
    return Permutation(tuple(result))
