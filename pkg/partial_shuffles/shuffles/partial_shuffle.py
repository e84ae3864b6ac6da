"""부분 셔플 Π(a,b) 와 공통 패턴 σ_{a,b} 생성"""
from typing import Optional

from ..common.errors import InvalidParamsError
from ..perm import PatternBasis, Permutation, make_delta
from .params import ShuffleParams


def partial_shuffle(p: ShuffleParams) -> PatternBasis:
    """[a+b]\\{a} 의 증가 배열에 a를 끼워 넣되, 항등순열이 되는 자리만 뺀다"""
    rest = [v for v in range(1, p.size + 1) if v != p.a]
    patterns = []
    for slot in range(len(rest) + 1):
        if slot == p.a - 1:
            continue
        patterns.append(Permutation(tuple(rest[:slot] + [p.a] + rest[slot:])))
    return PatternBasis(tuple(patterns))


def sigma(p: ShuffleParams) -> Permutation:
    """ι_{a+b} 에서 a 와 a-1 을 맞바꾼 순열"""
    p.require_shift()
    values = list(range(1, p.size + 1))
    values[p.a - 2], values[p.a - 1] = values[p.a - 1], values[p.a - 2]
    return Permutation(tuple(values))


def basis_for(p: ShuffleParams, delta_m: Optional[int] = None) -> PatternBasis:
    """Π(a,b) ∪ {δ_m}"""
    basis = partial_shuffle(p)
    if delta_m is None:
        return basis
    if delta_m < 1:
        raise InvalidParamsError(f"delta_m must be >= 1, got {delta_m}")
    return basis.union([make_delta(delta_m)])
