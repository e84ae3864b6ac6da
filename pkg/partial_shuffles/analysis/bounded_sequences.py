"""
부분합 제한 수열 a_1..a_k (모든 j 에 대해 a_1 + ... + a_j < j)

길이 k 인 수열의 수는 C_k 이고, a_j -> 1 + S_j 가 b 수열
(1 ≤ b_1 ≤ ... ≤ b_k, b_j ≤ j) 로 가는 전단사다.
"""
from dataclasses import dataclass
from functools import lru_cache
from itertools import accumulate
from typing import Iterator, List, Optional, Sequence, Tuple

from ..common.constants import WITNESS_LIMIT
from ..common.errors import InvalidInputError, InvalidParamsError


@dataclass(frozen=True)
class BoundedSumSequence:
    terms: Tuple[int, ...]

    def __post_init__(self):
        terms = tuple(int(t) for t in self.terms)
        object.__setattr__(self, "terms", terms)
        if any(t < 0 for t in terms):
            raise InvalidInputError(f"{terms} has a negative term")
        for j, total in enumerate(accumulate(terms), start=1):
            if total >= j:
                raise InvalidInputError(f"{terms}: prefix sum {total} at j={j} is not below {j}")

    @classmethod
    def parse(cls, text: str) -> "BoundedSumSequence":
        text = text.strip()
        if "," in text or " " in text:
            return cls(tuple(int(t) for t in text.replace(",", " ").split()))
        return cls(tuple(int(c) for c in text))

    def __len__(self) -> int:
        return len(self.terms)

    def __str__(self) -> str:
        if all(t < 10 for t in self.terms):
            return "".join(str(t) for t in self.terms)
        return ",".join(str(t) for t in self.terms)


@dataclass(frozen=True)
class BoundedCount:
    k: int
    count: int
    witnesses: Optional[Tuple[BoundedSumSequence, ...]] = None


@lru_cache(maxsize=None)
def _count_from(j: int, total: int, k: int) -> int:
    # 위치 j (1부터) 에 놓을 값은 0..j-1-total
    if j > k:
        return 1
    return sum(_count_from(j + 1, total + t, k) for t in range(j - total))


def _walk(k: int) -> Iterator[Tuple[int, ...]]:
    def step(prefix: List[int], total: int):
        j = len(prefix) + 1
        if j > k:
            yield tuple(prefix)
            return
        for t in range(j - total):
            prefix.append(t)
            yield from step(prefix, total + t)
            prefix.pop()

    return step([], 0)


def count_bounded_sequences(k: int, witness_limit: int = WITNESS_LIMIT) -> BoundedCount:
    if k < 0:
        raise InvalidParamsError(f"sequence length must be >= 0, got {k}")
    count = _count_from(1, 0, k)
    witnesses = None
    if k <= witness_limit:
        witnesses = tuple(BoundedSumSequence(terms) for terms in _walk(k))
    return BoundedCount(k, count, witnesses)


def is_b_sequence(values: Sequence[int]) -> bool:
    previous = 1
    for j, b in enumerate(values, start=1):
        if b < previous or b > j:
            return False
        previous = b
    return True


def a_to_b_sequence(seq: BoundedSumSequence) -> Tuple[int, ...]:
    return tuple(1 + total for total in accumulate(seq.terms))


def b_to_a_sequence(values: Sequence[int]) -> BoundedSumSequence:
    """a_j = b_j - b_{j-1}, b_0 = 1"""
    values = tuple(int(b) for b in values)
    if not is_b_sequence(values):
        raise InvalidInputError(f"{values} is not a b-sequence (1 <= b_1 <= ... <= b_k, b_j <= j)")
    return BoundedSumSequence(tuple(b - prev for prev, b in zip((1,) + values, values)))
