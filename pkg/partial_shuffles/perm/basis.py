"""PatternBasis - 피해야 할 패턴들의 유한 집합"""
import logging
from dataclasses import dataclass
from typing import Iterable, Iterator, List, Tuple

from .containment import contains
from .permutation import Permutation
from .symmetry import reverse_complement

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PatternBasis:
    """중복 제거 + 정규 순서(크기, 사전순)"""

    patterns: Tuple[Permutation, ...] = ()

    def __post_init__(self):
        unique = {p.values: p for p in self.patterns}
        ordered = tuple(sorted(unique.values(), key=lambda p: p.sort_key))
        object.__setattr__(self, "patterns", ordered)

    @classmethod
    def parse(cls, text: str) -> "PatternBasis":
        """"132,312" 또는 "1 3 2; 3 1 2" 형식"""
        separator = ";" if ";" in text else ","
        return cls(tuple(Permutation.parse(t) for t in text.split(separator) if t.strip()))

    def __iter__(self) -> Iterator[Permutation]:
        return iter(self.patterns)

    def __len__(self) -> int:
        return len(self.patterns)

    def __contains__(self, pattern: object) -> bool:
        return pattern in self.patterns

    def __str__(self) -> str:
        return "{" + ", ".join(p.label() for p in self.patterns) + "}"

    def union(self, *others: Iterable[Permutation]) -> "PatternBasis":
        merged = list(self.patterns)
        for other in others:
            merged.extend(other)
        return PatternBasis(tuple(merged))

    def reverse_complement(self) -> "PatternBasis":
        return PatternBasis(tuple(reverse_complement(p) for p in self.patterns))

    def labels(self) -> List[str]:
        return [p.label() for p in self.patterns]

    def redundant_pairs(self) -> List[Tuple[Permutation, Permutation]]:
        """(큰 패턴, 그 안에 포함된 작은 패턴) 쌍"""
        pairs = []
        for big in self.patterns:
            for small in self.patterns:
                if small is not big and len(small) < len(big) and contains(big, small):
                    pairs.append((big, small))
        return pairs

    def validate(self) -> bool:
        """반사슬(antichain)이 아니면 경고만 남김"""
        pairs = self.redundant_pairs()
        for big, small in pairs:
            logger.warning("basis %s: %s contains %s", self, big.label(), small.label())
        return not pairs
