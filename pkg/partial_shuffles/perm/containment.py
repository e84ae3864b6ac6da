"""
패턴 포함 판정

깊이 우선 매칭 + 값 창(value window) 가지치기. 패턴의 j번째 원소를 고를 때,
이미 고른 원소 중 값이 바로 아래/바로 위인 원소가 호스트 값의 허용 구간을 정한다.
"""
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, List, Optional, Sequence, Tuple

from .permutation import Permutation, standardize

# (바로 아래 단계, 바로 위 단계) - 없으면 -1
WindowPlan = List[Tuple[int, int]]


def _window_plan(pattern_values: Sequence[int], order: Sequence[int]) -> WindowPlan:
    plan = []
    for step, idx in enumerate(order):
        v = pattern_values[idx]
        lo = hi = -1
        for prev in range(step):
            pv = pattern_values[order[prev]]
            if pv < v and (lo < 0 or pv > pattern_values[order[lo]]):
                lo = prev
            if pv > v and (hi < 0 or pv < pattern_values[order[hi]]):
                hi = prev
        plan.append((lo, hi))
    return plan


class PatternMatcher:
    """한 패턴에 대해 미리 계산한 매칭 계획"""

    def __init__(self, pattern: Permutation):
        self.pattern = pattern
        self.size = len(pattern)
        k = self.size
        self._plan = _window_plan(pattern.values, list(range(k)))
        # 마지막 원소를 먼저 고정하는 순서 (접두사 가지치기용)
        self._tail_plan = _window_plan(pattern.values, [k - 1] + list(range(k - 1))) if k else []

    def find(self, host: Sequence[int]) -> Optional[Tuple[int, ...]]:
        """사전순 첫 출현의 위치(0부터), 없으면 None. host 값은 서로 다른 임의의 정수."""
        k, n = self.size, len(host)
        if k == 0:
            return ()
        if k > n:
            return None
        plan = self._plan
        chosen: List[int] = []

        def search(step: int, start: int) -> bool:
            if step == k:
                return True
            lo, hi = plan[step]
            low = host[chosen[lo]] if lo >= 0 else None
            high = host[chosen[hi]] if hi >= 0 else None
            for pos in range(start, n - (k - step) + 1):
                v = host[pos]
                if low is not None and v < low:
                    continue
                if high is not None and v > high:
                    continue
                chosen.append(pos)
                if search(step + 1, pos + 1):
                    return True
                chosen.pop()
            return False

        return tuple(chosen) if search(0, 0) else None

    def occurs_ending_at_last(self, host: Sequence[int]) -> bool:
        """host의 마지막 원소를 패턴의 마지막 원소로 쓰는 출현이 있는지"""
        k, n = self.size, len(host)
        if k == 0 or k > n:
            return False
        plan = self._tail_plan
        chosen: List[int] = [n - 1]

        def search(step: int, start: int) -> bool:
            if step == k:
                return True
            lo, hi = plan[step]
            low = host[chosen[lo]] if lo >= 0 else None
            high = host[chosen[hi]] if hi >= 0 else None
            for pos in range(start, n - 1 - (k - step) + 1):
                v = host[pos]
                if low is not None and v < low:
                    continue
                if high is not None and v > high:
                    continue
                chosen.append(pos)
                if search(step + 1, pos + 1):
                    return True
                chosen.pop()
            return False

        return search(1, 0)


@lru_cache(maxsize=None)
def matcher_for(pattern: Permutation) -> PatternMatcher:
    return PatternMatcher(pattern)


@dataclass(frozen=True)
class Occurrence:
    """호스트 안의 출현 - 1부터 세는 엄격 증가 위치"""

    positions: Tuple[int, ...]

    def values_in(self, host: Permutation) -> Tuple[int, ...]:
        return tuple(host.value_at(p) for p in self.positions)


def find_occurrence(host: Permutation, pattern: Permutation) -> Optional[Occurrence]:
    found = matcher_for(pattern).find(host.values)
    if found is None:
        return None
    return Occurrence(tuple(p + 1 for p in found))


def contains(host: Permutation, pattern: Permutation) -> bool:
    return matcher_for(pattern).find(host.values) is not None


def avoids_all(host: Permutation, basis: Iterable[Permutation]) -> bool:
    return not any(contains(host, pattern) for pattern in basis)


def is_occurrence(host: Permutation, pattern: Permutation, positions: Sequence[int]) -> bool:
    """positions(1부터)의 부분순열이 pattern과 순서 동형인지"""
    if len(positions) != len(pattern):
        return False
    if any(b <= a for a, b in zip(positions, positions[1:])):
        return False
    if positions and not (1 <= positions[0] and positions[-1] <= len(host)):
        return False
    return standardize([host.value_at(p) for p in positions]) == pattern
