"""
부분 셔플 출현 안에서 원소들이 맡는 역할

Π(c,d) 의 출현은 다음으로 결정된다.
  - 아래 증가열 ι_{c-1} 의 마지막 원소 l (c = 1 이면 원점)
  - 위 증가열 ι_d 의 첫 원소 u (d = 0 이면 무한대 꼭짓점)
  - l, u 사이 값을 갖는 끼워 넣은 원소 z - l 과 u 사이 위치만 아니면 어디든
l 은 남서쪽 최장 증가열 길이, u 는 북동쪽 최장 증가열 길이로 걸러낸다.
"""
from dataclasses import dataclass
from typing import FrozenSet, Iterator, List, Sequence, Set, Tuple

import numpy as np

from ..perm import Permutation

# (0부터 위치, 값)
Anchor = Tuple[int, int]


@dataclass(frozen=True)
class RunProfile:
    southwest: np.ndarray  # i 에서 끝나는 최장 증가 부분순열 길이
    northeast: np.ndarray  # i 에서 시작하는 최장 증가 부분순열 길이


def run_profile(values: Sequence[int]) -> RunProfile:
    v = np.asarray(values, dtype=np.int64)
    n = len(v)
    sw = np.ones(n, dtype=np.int64)
    ne = np.ones(n, dtype=np.int64)
    for i in range(n):
        below = v[:i] < v[i]
        if below.any():
            sw[i] = sw[:i][below].max() + 1
    for i in range(n - 1, -1, -1):
        above = v[i + 1:] > v[i]
        if above.any():
            ne[i] = ne[i + 1:][above].max() + 1
    return RunProfile(southwest=sw, northeast=ne)


def lower_anchors(values: Sequence[int], profile: RunProfile, length: int) -> List[Anchor]:
    if length == 0:
        return [(-1, 0)]
    return [(i, values[i]) for i in range(len(values)) if profile.southwest[i] >= length]


def upper_anchors(values: Sequence[int], profile: RunProfile, length: int) -> List[Anchor]:
    if length == 0:
        n = len(values)
        return [(n, n + 1)]
    return [(i, values[i]) for i in range(len(values)) if profile.northeast[i] >= length]


def inserted_between(values: Sequence[int], low: Anchor, high: Anchor) -> Iterator[int]:
    """(l, u) 쌍에 대해 끼워 넣은 원소가 될 수 있는 위치들"""
    (l_pos, l_val), (u_pos, u_val) = low, high
    if l_pos >= u_pos or l_val >= u_val:
        return
    for pos, v in enumerate(values):
        if l_val < v < u_val and (pos < l_pos or pos > u_pos):
            yield pos


def displaced_positions(perm: Permutation, c: int, d: int) -> FrozenSet[int]:
    """Π(c,d) 출현에서 값 c (끼워 넣은 원소) 역할을 하는 원소의 위치 (1부터)"""
    values = perm.values
    profile = run_profile(values)
    found: Set[int] = set()
    lows = lower_anchors(values, profile, c - 1)
    highs = upper_anchors(values, profile, d)
    for low in lows:
        for high in highs:
            found.update(inserted_between(values, low, high))
    return frozenset(pos + 1 for pos in found)
