"""
Permutation - 일행 표기(one-line notation) 순열

공개 계약에서 위치는 모두 1부터 센다. 내부 values 튜플은 파이썬 인덱스(0부터).
빈 순열(n = 0)도 유효하다.
"""
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence, Tuple

from ..common.errors import InvalidInputError

_SEPARATORS = re.compile(r"[\s,]+")


@dataclass(frozen=True)
class Permutation:
    """1..n 의 재배열"""

    values: Tuple[int, ...]

    def __post_init__(self):
        values = tuple(int(v) for v in self.values)
        object.__setattr__(self, "values", values)
        if sorted(values) != list(range(1, len(values) + 1)):
            raise InvalidInputError(f"{values} is not a permutation of 1..{len(values)}")

    # -- 컨테이너 --

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)

    def value_at(self, position: int) -> int:
        """1부터 세는 위치의 값"""
        if not 1 <= position <= len(self.values):
            raise InvalidInputError(f"position {position} out of range 1..{len(self.values)}")
        return self.values[position - 1]

    def position_of(self, value: int) -> int:
        """값의 위치 (1부터)"""
        return self.values.index(value) + 1

    @property
    def size(self) -> int:
        return len(self.values)

    @property
    def sort_key(self) -> Tuple[int, Tuple[int, ...]]:
        """정렬 기준: 크기, 그다음 사전순"""
        return (len(self.values), self.values)

    # -- 텍스트 형식 --

    def __str__(self) -> str:
        return " ".join(str(v) for v in self.values)

    def __repr__(self) -> str:
        return f"Permutation({self.label()})"

    def compact(self) -> str:
        """숫자 붙여쓰기 형식 (n ≤ 9 일 때만)"""
        if len(self.values) > 9:
            raise InvalidInputError("compact digit form needs n <= 9")
        return "".join(str(v) for v in self.values)

    def label(self) -> str:
        """사람용 출력: n ≤ 9 이면 붙여쓰기, 아니면 쉼표 구분"""
        if len(self.values) <= 9:
            return self.compact()
        return ",".join(str(v) for v in self.values)

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        """공백/쉼표 구분 형식과 붙여쓰기 형식을 모두 받음"""
        text = text.strip()
        if not text:
            return cls(())
        if _SEPARATORS.search(text):
            tokens = [t for t in _SEPARATORS.split(text) if t]
            if not all(t.isdigit() for t in tokens):
                raise InvalidInputError(f"cannot parse permutation {text!r}")
            return cls(tuple(int(t) for t in tokens))
        if text.isdigit():
            if len(text) > 9:
                raise InvalidInputError(
                    f"compact form {text!r} is ambiguous for n >= 10; separate values with spaces"
                )
            return cls(tuple(int(c) for c in text))
        raise InvalidInputError(f"cannot parse permutation {text!r}")


def make_iota(k: int) -> Permutation:
    """증가 순열 1 2 ... k"""
    if k < 0:
        raise InvalidInputError(f"size must be nonnegative, got {k}")
    return Permutation(tuple(range(1, k + 1)))


def make_delta(k: int) -> Permutation:
    """감소 순열 k ... 2 1"""
    if k < 0:
        raise InvalidInputError(f"size must be nonnegative, got {k}")
    return Permutation(tuple(range(k, 0, -1)))


def standardize(sequence: Sequence[int]) -> Permutation:
    """서로 다른 정수 수열을 순서 동형인 순열로 축약"""
    if len(set(sequence)) != len(sequence):
        raise InvalidInputError(f"{tuple(sequence)} has repeated values")
    rank = {v: i + 1 for i, v in enumerate(sorted(sequence))}
    return Permutation(tuple(rank[v] for v in sequence))


def parse_many(texts: Iterable[str]) -> Tuple[Permutation, ...]:
    return tuple(Permutation.parse(t) for t in texts)
