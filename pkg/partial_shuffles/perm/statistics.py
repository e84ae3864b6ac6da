"""순열 통계: 내림 집합, 최장 감소/증가 부분순열"""
from typing import FrozenSet, List

from .permutation import Permutation


def descent_set(perm: Permutation) -> FrozenSet[int]:
    """{ i in [1, n-1] : π_i > π_{i+1} }"""
    values = perm.values
    return frozenset(i + 1 for i in range(len(values) - 1) if values[i] > values[i + 1])


def _longest_run(values, decreasing: bool) -> int:
    # best[i] = i 에서 끝나는 최장 단조 부분순열 길이
    best: List[int] = []
    for i, v in enumerate(values):
        length = 1
        for j in range(i):
            if (values[j] > v) if decreasing else (values[j] < v):
                length = max(length, best[j] + 1)
        best.append(length)
    return max(best, default=0)


def longest_decreasing(perm: Permutation) -> int:
    return _longest_run(perm.values, decreasing=True)


def longest_increasing(perm: Permutation) -> int:
    return _longest_run(perm.values, decreasing=False)
