"""
Av_n(Π) 의 생성 트리 열거

원소를 왼쪽에서 오른쪽으로 하나씩 붙인다. 노드는 표준화된 접두사, 즉 Av_k(Π) 의
원소이고, 자식은 오른쪽 끝에 상대 순위 1..k+1 중 하나로 새 원소를 붙인 것이다
(기존 값 중 그 순위 이상은 1씩 올림). 회피 클래스는 마지막 원소를 지워도 닫혀 있으므로
Av_n 의 각 원소는 정확히 한 번 나타난다. 부모는 이미 회피하므로 새 출현은 반드시
마지막 원소를 쓴다 (occurs_ending_at_last). 트리 노드 수는 Σ_k |Av_k|·(k+1).

어느 깊이의 노드들 아래 부분 트리는 서로 독립이라 프로세스 워커에 나눠 실행한다.
"""
import logging
from typing import Iterator, List, Sequence, Tuple

from ..common.constants import TASKS_PER_WORKER, U64_MAX
from ..common.errors import CountOverflowError, InvalidParamsError
from ..perm import PatternBasis, Permutation, matcher_for
from ..profiling import MeasureTime, Tracer
from ..threads import SweepRunner, Task
from .count_sequence import CountSequence

logger = logging.getLogger(__name__)

Node = Tuple[int, ...]


class AvoiderSearch:
    """크기 n 까지의 생성 트리"""

    def __init__(self, basis: PatternBasis, n: int):
        if n < 0:
            raise InvalidParamsError(f"n must be >= 0, got {n}")
        self.basis = basis
        self.n = n
        # 기저가 크기순이라 짧은(싼) 패턴부터 검사
        self.matchers = [matcher_for(p) for p in basis if 0 < len(p) <= max(n, 1)]
        # 빈 패턴은 모든 순열에 들어 있음
        self.blocked = any(len(p) == 0 for p in basis)

    def children(self, node: Node) -> Iterator[Node]:
        for rank in range(1, len(node) + 2):
            child = tuple(v + 1 if v >= rank else v for v in node) + (rank,)
            if not any(m.occurs_ending_at_last(child) for m in self.matchers):
                yield child

    def frontier(self, depth: int) -> List[Node]:
        """깊이 depth(최대 n) 의 노드들"""
        level: List[Node] = [()]
        for _ in range(min(depth, self.n)):
            level = [child for node in level for child in self.children(node)]
        return level

    def _walk(self, node: Node) -> Iterator[Node]:
        if len(node) == self.n:
            yield node
            return
        for child in self.children(node):
            yield from self._walk(child)

    def _count(self, node: Node) -> int:
        if len(node) == self.n:
            return 1
        if len(node) == self.n - 1:
            return sum(1 for _ in self.children(node))
        return sum(self._count(child) for child in self.children(node))

    def members_below(self, nodes: Sequence[Node]) -> List[Node]:
        return [values for node in nodes for values in self._walk(node)]

    def count_below(self, nodes: Sequence[Node]) -> int:
        return sum(self._count(node) for node in nodes)

    def split(self, workers: int) -> List[List[Node]]:
        """워커 수에 맞춰 부분 트리 뿌리들을 나눔. workers == 1 이면 뿌리 하나"""
        if workers == 1:
            return [[()]]
        wanted = workers * TASKS_PER_WORKER
        depth = 0
        nodes = self.frontier(0)
        while len(nodes) < wanted and depth < self.n:
            depth += 1
            nodes = [child for node in nodes for child in self.children(node)]
        chunks = [nodes[i::wanted] for i in range(wanted)]
        return [chunk for chunk in chunks if chunk]


def enumerate_avoiders(basis: PatternBasis, n: int, workers: int = 1) -> Iterator[Permutation]:
    """Av_n(Π) 를 사전순으로, 각 원소 정확히 한 번"""
    search = AvoiderSearch(basis, n)
    if search.blocked:
        return iter(())
    tasks = [Task(search.members_below, chunk, name=f"avoiders n={n} part={i}")
             for i, chunk in enumerate(search.split(workers))]
    with MeasureTime("enumerate_avoiders", "enumeration", {"n": n, "basis": str(basis)}) as span:
        parts = SweepRunner(workers, "enumeration", processes=True).run_all(tasks)
        members = sorted(values for part in parts for values in part)
        span.annotate(count=len(members))
    return (Permutation(values) for values in members)


def count_size(basis: PatternBasis, n: int, workers: int = 1) -> int:
    search = AvoiderSearch(basis, n)
    if search.blocked:
        return 0
    tasks = [Task(search.count_below, chunk, name=f"count n={n} part={i}")
             for i, chunk in enumerate(search.split(workers))]
    with MeasureTime("count_size", "enumeration", {"n": n, "basis": str(basis)}) as span:
        parts = SweepRunner(workers, "enumeration", processes=True).run_all(tasks)
        total = 0
        for part in parts:
            total += part
            if total > U64_MAX:
                raise CountOverflowError(f"#Av_{n}({basis}) exceeds the 64-bit unsigned range")
        span.annotate(count=total)
    return total


def count_avoiders(basis: PatternBasis, n_max: int, n_min: int = 0, workers: int = 1) -> CountSequence:
    """n_min..n_max 각각의 정확한 개수 (순열을 만들지 않고 트리만 셈)"""
    if n_min < 0 or n_max < n_min:
        raise InvalidParamsError(f"need 0 <= n_min <= n_max, got n_min={n_min}, n_max={n_max}")
    counts = []
    for n in range(n_min, n_max + 1):
        counts.append(count_size(basis, n, workers))
        logger.debug("#Av_%d(%s) = %d", n, basis, counts[-1])
        Tracer.get().record_counter("avoiders", "enumeration", {"count": counts[-1]})
    return CountSequence(basis, n_min, tuple(counts))
