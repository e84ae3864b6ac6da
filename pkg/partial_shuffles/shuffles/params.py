"""ShuffleParams - 부분 셔플 Π(a,b)의 파라미터"""
from dataclasses import dataclass
from typing import Dict

from ..common.errors import InvalidParamsError


@dataclass(frozen=True)
class ShuffleParams:
    """a ≥ 1, b ≥ 0, a + b ≥ 2"""

    a: int
    b: int

    def __post_init__(self):
        if self.a < 1 or self.b < 0 or self.a + self.b < 2:
            raise InvalidParamsError(
                f"partial shuffle needs a >= 1, b >= 0, a + b >= 2; got a={self.a}, b={self.b}"
            )

    @property
    def size(self) -> int:
        return self.a + self.b

    def require_shift(self) -> "ShuffleParams":
        """S 맵이 정의되려면 a ≥ 2"""
        if self.a < 2:
            raise InvalidParamsError(f"S-map and sigma need a >= 2, got a={self.a}")
        return self

    def shifted(self) -> "ShuffleParams":
        """(a-1, b+1)"""
        self.require_shift()
        return ShuffleParams(self.a - 1, self.b + 1)

    def reverse_complement(self) -> "ShuffleParams":
        """Π(a,b)^rc = Π(b+1, a-1)"""
        self.require_shift()
        return ShuffleParams(self.b + 1, self.a - 1)

    def to_dict(self) -> Dict[str, int]:
        return {"a": self.a, "b": self.b}

    def __str__(self) -> str:
        return f"Π({self.a},{self.b})"


def splits_of(size_sum: int):
    """a + b = size_sum 인 모든 (a, b), a 내림차순"""
    if size_sum < 2:
        raise InvalidParamsError(f"size_sum must be >= 2, got {size_sum}")
    return [ShuffleParams(a, size_sum - a) for a in range(size_sum, 0, -1)]
