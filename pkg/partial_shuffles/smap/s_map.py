"""
S 맵 - 구간 [underline-(a-1), underline-a] 의 값 회전

π 가 Av(Π(a-1,b+1)) 이면 그대로 둔다. 아니면 연관된 a-1 원소들의 값을 1씩 올리고
underline-a 를 underline-(a-1) 로 내린다. 나머지 값은 고정.
"""
import logging
from dataclasses import dataclass, field
from typing import List, Optional

from ..perm import Permutation
from ..shuffles import ShuffleMark, ShuffleParams, find_mark

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SStep:
    input: Permutation
    output: Permutation
    mark: Optional[ShuffleMark] = None  # None 이면 고정점

    @property
    def is_fixed_point(self) -> bool:
        return self.mark is None

    def to_dict(self):
        return {
            "input": self.input.label(),
            "output": self.output.label(),
            "mark": self.mark.to_dict() if self.mark is not None else None,
        }


def rotate(perm: Permutation, mark: ShuffleMark) -> Permutation:
    low, top = mark.assoc_low, mark.underline_a_value
    rotated = []
    for v in perm.values:
        if v == top:
            rotated.append(low)
        elif low <= v < top:
            rotated.append(v + 1)
        else:
            rotated.append(v)
    # Permutation 생성자가 결과가 순열인지 확인함
    return Permutation(tuple(rotated))


def s_apply(perm: Permutation, p: ShuffleParams) -> SStep:
    p.require_shift()
    mark = find_mark(perm, p)
    if mark is None:
        return SStep(perm, perm, None)
    return SStep(perm, rotate(perm, mark), mark)


@dataclass
class IterationResult:
    final: Permutation
    steps: int
    trace: List[SStep] = field(default_factory=list)
    reached_fixed_point: bool = True

    def to_dict(self):
        return {
            "final": self.final.label(),
            "steps": self.steps,
            "reached_fixed_point": self.reached_fixed_point,
            "trace": [step.to_dict() for step in self.trace],
        }


def iteration_cap(perm: Permutation, p: ShuffleParams) -> int:
    return max(len(perm) - p.a, 0)


def s_iterate(perm: Permutation, p: ShuffleParams) -> IterationResult:
    """
    고정점에 닿거나 n-a 번 적용할 때까지 S 를 반복

    Av(σ_{a,b}) 밖의 입력은 n-a 번 안에 멈추지 않을 수 있다.
    그때도 무한 반복하지 않고 reached_fixed_point=False 로 돌려준다.
    trace 에는 값이 실제로 바뀐 단계만 들어간다.
    """
    p.require_shift()
    current = perm
    trace: List[SStep] = []
    for _ in range(iteration_cap(perm, p)):
        step = s_apply(current, p)
        if step.is_fixed_point:
            return IterationResult(current, len(trace), trace, True)
        trace.append(step)
        current = step.output

    settled = find_mark(current, p) is None
    if not settled:
        logger.warning(
            "%s did not reach a fixed point of S for %s within %d steps",
            perm.label(), p, len(trace),
        )
    return IterationResult(current, len(trace), trace, settled)
