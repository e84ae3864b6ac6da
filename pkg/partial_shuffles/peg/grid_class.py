"""
페그 순열의 격자 클래스(grid class) 원소 생성

점(·) 원소는 크기 1, 나머지 원소들에 n - (점 개수) 를 1 이상씩 나눠 주는
모든 합성(composition)을 팽창한다.
"""
from itertools import combinations
from typing import FrozenSet, Iterator, List, Tuple

from ..perm import Permutation
from ..threads import SweepRunner, Task
from .inflation import Inflation, inflate_peg
from .peg_permutation import Mark, PegPermutation


def compositions(total: int, parts: int) -> Iterator[Tuple[int, ...]]:
    """total 을 1 이상인 parts 개로 나누는 모든 방법"""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for cuts in combinations(range(1, total), parts - 1):
        bounds = (0,) + cuts + (total,)
        yield tuple(bounds[i + 1] - bounds[i] for i in range(parts))


def _sizes_for(peg: PegPermutation, free_sizes: Tuple[int, ...]) -> Inflation:
    it = iter(free_sizes)
    return Inflation(tuple(1 if mark is Mark.DOT else next(it) for mark in peg.marks))


def _members_with_first(peg: PegPermutation, free_total: int, first: int) -> List[Permutation]:
    return [
        inflate_peg(peg, _sizes_for(peg, (first,) + rest))
        for rest in compositions(free_total - first, peg.slots - 1)
    ]


def grid_class_members(peg: PegPermutation, n: int, workers: int = 1) -> FrozenSet[Permutation]:
    """첫 자유 원소의 크기별로 나눠 생성하고 합친다"""
    free_total = n - peg.dots
    if free_total < peg.slots:
        return frozenset()
    if peg.slots == 0:
        return frozenset([inflate_peg(peg, _sizes_for(peg, ()))])

    tasks = [
        Task(_members_with_first, peg, free_total, first, name=f"grid n={n} first={first}")
        for first in range(1, free_total - peg.slots + 2)
    ]
    members = set()
    for part in SweepRunner(workers, "peg").run_all(tasks):
        members.update(part)
    return frozenset(members)
