"""
자유 슬롯 수 (a+b-2)(m-2)+1 의 구성적 검증

비지배 좌우 최댓값 M_1..M_s 사이에 분리 원소 S_1..S_{s-1} 을 끼운 페그
M_1 S_1 M_2 ... S_{s-1} M_s 를 만든다. 최댓값은 +, 분리 원소는 · 로 표시하고,
분리 원소는 Av_{s-1}(ι_{a+b-1}, δ_{m-1}) 의 층 모양 순열을 따른다.
"""
import logging
from typing import List

from ..analysis import binomial, erdos_szekeres_permutation
from ..common.errors import InvalidParamsError
from ..common.report import CheckReport
from ..perm import Permutation, avoids_all
from ..profiling import MeasureTime
from ..shuffles import ShuffleParams, basis_for
from .grid_class import grid_class_members
from .peg_permutation import Mark, PegPermutation

logger = logging.getLogger(__name__)


def free_slot_count(p: ShuffleParams, m: int) -> int:
    if m < 2:
        raise InvalidParamsError(f"delta size m must be >= 2, got {m}")
    return (p.size - 2) * (m - 2) + 1


def separated_peg(p: ShuffleParams, m: int) -> PegPermutation:
    slots = free_slot_count(p, m)
    separators = erdos_szekeres_permutation(p.size - 1, m - 1)
    values: List[int] = []
    marks: List[Mark] = []
    for i in range(slots):
        values.append(slots + i)
        marks.append(Mark.PLUS)
        if i < slots - 1:
            values.append(separators.values[i])
            marks.append(Mark.DOT)
    return PegPermutation(Permutation(tuple(values)), tuple(marks))


def grid_class_size(peg: PegPermutation, n: int) -> int:
    """자유 원소 사이 합성의 수 C(n - dots - 1, slots - 1)"""
    if peg.slots == 0:
        return 1 if n == peg.dots else 0
    return binomial(n - peg.dots - 1, peg.slots - 1) if n - peg.dots >= peg.slots else 0


def max_free_slots(p: ShuffleParams, m: int, check_up_to: int, workers: int = 1) -> CheckReport:
    """
    구성한 페그의 격자 클래스가 크기 check_up_to 까지 Π(a+b,0) ∪ {δ_m} 를 피하는지,
    원소 수가 합성의 수와 같은지 확인
    """
    slots = free_slot_count(p, m)
    peg = separated_peg(p, m)
    # 구성은 Π(a+b,0) 기준. 다른 분할은 Wilf 동치로 같은 개수
    basis = basis_for(ShuffleParams(p.size, 0), m)

    violation = None
    sizes = {}
    with MeasureTime("max_free_slots", "peg", {"params": str(p), "m": m}):
        for n in range(len(peg), check_up_to + 1):
            members = grid_class_members(peg, n, workers)
            sizes[n] = len(members)
            if len(members) != grid_class_size(peg, n):
                violation = {"n": n, "members": len(members), "expected": grid_class_size(peg, n)}
                break
            witness = next((perm for perm in sorted(members, key=lambda q: q.values)
                            if not avoids_all(perm, basis)), None)
            if witness is not None:
                violation = {"n": n, "perm": witness.label()}
                break

    if violation is not None:
        logger.info("peg %s failed at %s", peg, violation)
    return CheckReport(
        check="max_free_slots",
        params={**p.to_dict(), "m": m},
        n=check_up_to,
        passed=violation is None,
        counterexample=violation,
        details={"slots": slots, "peg": str(peg), "class_sizes": sizes},
    )
