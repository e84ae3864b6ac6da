"""
ShuffleMark - underline-a 와 연관된 a-1 원소들의 값 구간

underline-a 는 Π(a-1,b+1) 패턴에서 a 역할(위 증가열 ι_{b+1} 의 최솟값)을 하는
가장 작은 원소다. 연관된 a-1 원소들은 [underline-(a-1), underline-a - 1] 구간을 이룬다.
"""
from dataclasses import dataclass
from typing import Dict, Optional, Set, Tuple

from ..common.errors import IntervalViolationError
from ..perm import Permutation
from .params import ShuffleParams
from .roles import inserted_between, lower_anchors, run_profile, upper_anchors


@dataclass(frozen=True)
class ShuffleMark:
    underline_a_value: int
    underline_a_position: int  # 1부터
    assoc_low: int
    assoc_high: int

    def __post_init__(self):
        if self.assoc_low > self.assoc_high or self.assoc_high != self.underline_a_value - 1:
            raise IntervalViolationError(
                f"associated interval [{self.assoc_low},{self.assoc_high}] "
                f"does not end below underline-a {self.underline_a_value}"
            )

    @property
    def interval(self) -> Tuple[int, int]:
        return (self.assoc_low, self.assoc_high)

    def is_associated(self, value: int) -> bool:
        return self.assoc_low <= value <= self.assoc_high

    def associated_positions(self, perm: Permutation) -> Tuple[int, ...]:
        """연관 원소의 위치는 저장하지 않고 필요할 때 다시 계산"""
        return tuple(i + 1 for i, v in enumerate(perm.values) if self.is_associated(v))

    def to_dict(self) -> Dict[str, int]:
        return {
            "underline_a_value": self.underline_a_value,
            "underline_a_position": self.underline_a_position,
            "assoc_low": self.assoc_low,
            "assoc_high": self.assoc_high,
        }

    def __str__(self) -> str:
        return (
            f"value {self.underline_a_value} at position {self.underline_a_position}, "
            f"interval [{self.assoc_low},{self.assoc_high}]"
        )


def find_mark(perm: Permutation, p: ShuffleParams) -> Optional[ShuffleMark]:
    """π 가 Av(Π(a-1,b+1)) 이면 None"""
    target = p.shifted()
    values = perm.values
    profile = run_profile(values)
    lows = lower_anchors(values, profile, target.a - 1)
    # a 역할 후보를 값이 작은 순서로 시험
    highs = sorted(upper_anchors(values, profile, target.b), key=lambda anchor: anchor[1])

    for high in highs:
        associated: Set[int] = set()
        for low in lows:
            associated.update(values[pos] for pos in inserted_between(values, low, high))
        if not associated:
            continue
        u_pos, u_val = high
        low_value = min(associated)
        if associated != set(range(low_value, u_val)):
            raise IntervalViolationError(
                f"associated values {sorted(associated)} of {u_val} in {perm.label()} are not an interval"
            )
        return ShuffleMark(
            underline_a_value=u_val,
            underline_a_position=u_pos + 1,
            assoc_low=low_value,
            assoc_high=u_val - 1,
        )
    return None
