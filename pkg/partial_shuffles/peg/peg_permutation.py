"""
PegPermutation - 원소마다 +, -, · 표시가 붙은 순열

텍스트 형식: 값 뒤에 표시 문자, 공백 구분. 예) "3+ 1. 2-"
"""
import re
from dataclasses import dataclass
from enum import Enum
from typing import Tuple

from ..common.errors import InvalidInputError
from ..perm import Permutation

_TOKEN = re.compile(r"^(\d+)([+\-.·])$")


class Mark(Enum):
    PLUS = "+"   # 증가 블록
    MINUS = "-"  # 감소 블록
    DOT = "."    # 원소 하나

    @classmethod
    def parse(cls, symbol: str) -> "Mark":
        return cls.DOT if symbol == "·" else cls(symbol)


@dataclass(frozen=True)
class PegPermutation:
    base: Permutation
    marks: Tuple[Mark, ...]

    def __post_init__(self):
        if len(self.marks) != len(self.base):
            raise InvalidInputError(
                f"peg needs one mark per element: {len(self.base)} elements, {len(self.marks)} marks"
            )

    @classmethod
    def parse(cls, text: str) -> "PegPermutation":
        values, marks = [], []
        for token in text.split():
            match = _TOKEN.match(token)
            if match is None:
                raise InvalidInputError(f"cannot parse peg element {token!r}")
            values.append(int(match.group(1)))
            marks.append(Mark.parse(match.group(2)))
        return cls(Permutation(tuple(values)), tuple(marks))

    def __len__(self) -> int:
        return len(self.base)

    @property
    def dots(self) -> int:
        return sum(1 for mark in self.marks if mark is Mark.DOT)

    @property
    def slots(self) -> int:
        """크기를 자유롭게 늘릴 수 있는 원소 수"""
        return len(self.marks) - self.dots

    @property
    def plus_count(self) -> int:
        return sum(1 for mark in self.marks if mark is Mark.PLUS)

    def __str__(self) -> str:
        return " ".join(f"{v}{mark.value}" for v, mark in zip(self.base, self.marks))
