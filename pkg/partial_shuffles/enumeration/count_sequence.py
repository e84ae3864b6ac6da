"""CountSequence - n = n_min.. 에 대한 #Av_n(Π)"""
from dataclasses import dataclass
from typing import Any, Dict, List, Tuple

from ..common.constants import U64_MAX
from ..common.errors import CountOverflowError, InvalidInputError
from ..perm import PatternBasis


@dataclass(frozen=True)
class CountSequence:
    basis: PatternBasis
    n_min: int
    counts: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "counts", tuple(int(c) for c in self.counts))
        if self.n_min < 0:
            raise InvalidInputError(f"n_min must be >= 0, got {self.n_min}")
        for c in self.counts:
            if c < 0:
                raise InvalidInputError(f"negative count {c}")
            if c > U64_MAX:
                raise CountOverflowError(f"count {c} exceeds the 64-bit unsigned range")

    @property
    def n_max(self) -> int:
        return self.n_min + len(self.counts) - 1

    def count(self, n: int) -> int:
        if not self.n_min <= n <= self.n_max:
            raise InvalidInputError(f"n={n} outside [{self.n_min}, {self.n_max}]")
        return self.counts[n - self.n_min]

    def covers(self, n: int) -> bool:
        return self.n_min <= n <= self.n_max

    def items(self) -> List[Tuple[int, int]]:
        return [(self.n_min + i, c) for i, c in enumerate(self.counts)]

    def tail(self, n_start: int) -> "CountSequence":
        if not self.covers(n_start):
            raise InvalidInputError(f"n_start={n_start} outside [{self.n_min}, {self.n_max}]")
        return CountSequence(self.basis, n_start, self.counts[n_start - self.n_min:])

    def to_csv(self) -> str:
        lines = ["n,count"] + [f"{n},{c}" for n, c in self.items()]
        return "\n".join(lines) + "\n"

    def to_dict(self) -> Dict[str, Any]:
        return {
            "basis": self.basis.labels(),
            "n_min": self.n_min,
            "counts": [{"n": n, "count": c} for n, c in self.items()],
        }

    def to_rows(self) -> List[List[str]]:
        return [[str(n), str(c)] for n, c in self.items()]
