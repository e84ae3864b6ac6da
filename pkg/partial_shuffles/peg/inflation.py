"""
팽창(inflation) σ[α_1, ..., α_m]

σ 의 각 원소를 값이 연속된 블록으로 바꾼다. 값 v 의 블록은
σ 에서 v 보다 작은 원소들의 블록 크기 합만큼 위로 올라간다.
"""
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from ..common.errors import InvalidInputError
from ..perm import Permutation, make_delta, make_iota
from .peg_permutation import Mark, PegPermutation


def is_monotone(part: Permutation) -> bool:
    values = part.values
    return values == tuple(sorted(values)) or values == tuple(sorted(values, reverse=True))


def inflate(base: Permutation, parts: Sequence[Permutation]) -> Permutation:
    if len(parts) != len(base):
        raise InvalidInputError(f"{base.label()} needs {len(base)} parts, got {len(parts)}")
    for part in parts:
        if len(part) == 0:
            raise InvalidInputError("inflation parts must be nonempty")
        if not is_monotone(part):
            raise InvalidInputError(f"part {part.label()} is not monotone")

    size_by_value = {v: len(part) for v, part in zip(base, parts)}
    offsets = {}
    running = 0
    for v in sorted(size_by_value):
        offsets[v] = running
        running += size_by_value[v]

    values: List[int] = []
    for v, part in zip(base, parts):
        values.extend(offsets[v] + x for x in part)
    return Permutation(tuple(values))


@dataclass(frozen=True)
class Inflation:
    sizes: Tuple[int, ...]

    def __post_init__(self):
        if any(size < 1 for size in self.sizes):
            raise InvalidInputError(f"inflation sizes must be positive, got {self.sizes}")

    def validate(self, peg: PegPermutation):
        if len(self.sizes) != len(peg):
            raise InvalidInputError(f"peg {peg} needs {len(peg)} sizes, got {len(self.sizes)}")
        for size, mark in zip(self.sizes, peg.marks):
            if mark is Mark.DOT and size != 1:
                raise InvalidInputError(f"dot-marked element of {peg} must keep size 1")

    def __len__(self) -> int:
        return sum(self.sizes)


def block_for(mark: Mark, size: int) -> Permutation:
    if mark is Mark.MINUS:
        return make_delta(size)
    return make_iota(size)


def inflate_peg(peg: PegPermutation, inflation: Inflation) -> Permutation:
    inflation.validate(peg)
    return inflate(peg.base, [block_for(mark, size) for mark, size in zip(peg.marks, inflation.sizes)])
