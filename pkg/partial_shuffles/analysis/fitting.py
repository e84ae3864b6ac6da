"""
개수 수열의 꼬리를 정수 계수 이항 다항식으로 맞춘다

n_start 부터의 꼬리에서 전진 차분표를 만들고, (D+1)차 차분이 창 전체에서 0 인
가장 작은 D 를 차수로 본다. 맞추는 데 쓰는 D+1 개 점 뒤로 최소 HOLDOUT_POINTS 개의
점이 남아야 한다. 차분표는 numpy object 배열이라 정수 연산이 정확하다.
"""
import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Optional

import numpy as np

from ..common.constants import HOLDOUT_POINTS
from ..common.errors import NoStabilizationError
from ..enumeration import CountSequence
from .binomial_polynomial import BinomialPolynomial
from .catalan import binomial

logger = logging.getLogger(__name__)


def difference_table(values: List[int]) -> List[np.ndarray]:
    rows = [np.array(values, dtype=object)]
    while len(rows[-1]) > 1:
        rows.append(np.diff(rows[-1]))
    return rows


def newton_at_zero(values: List[int]) -> List[int]:
    """p(0), p(1), ... 로부터 C(n,k) 계수"""
    return [int(row[0]) for row in difference_table(values)]


def _rebase(shifted: List[int], n_start: int) -> BinomialPolynomial:
    # Σ d_k C(n - n_start, k) 를 n = 0..D 에서 계산한 뒤 0 에서의 차분으로 바꿈
    degree = len(shifted) - 1
    samples = [sum(d * binomial(n - n_start, k) for k, d in enumerate(shifted)) for n in range(degree + 1)]
    return BinomialPolynomial(tuple(newton_at_zero(samples)))


def fit_binomial_polynomial(seq: CountSequence, n_start: int) -> BinomialPolynomial:
    if not seq.covers(n_start):
        raise NoStabilizationError(f"sequence covers [{seq.n_min}, {seq.n_max}], not n_start={n_start}")
    tail = list(seq.tail(n_start).counts)
    table = difference_table(tail)
    for degree in range(len(tail) - HOLDOUT_POINTS):
        window = table[degree + 1]
        if len(window) < HOLDOUT_POINTS:
            break
        if all(d == 0 for d in window):
            shifted = [int(table[k][0]) for k in range(degree + 1)]
            polynomial = _rebase(shifted, n_start)
            for n, count in seq.tail(n_start).items():
                if polynomial.evaluate(n) != count:
                    raise NoStabilizationError(f"re-based fit disagrees with count at n={n}")
            return polynomial

    raise NoStabilizationError(
        f"differences of {len(tail)} counts from n={n_start} never vanish with "
        f"{HOLDOUT_POINTS} holdout points; raise n_max"
    )


def observed_threshold(seq: CountSequence, polynomial: BinomialPolynomial) -> Optional[int]:
    """다항식이 이후 모든 개수와 맞기 시작하는 가장 작은 n (마지막 점도 안 맞으면 None)"""
    threshold = None
    for n, count in reversed(seq.items()):
        if polynomial.evaluate(n) != count:
            break
        threshold = n
    return threshold


@dataclass
class FitResult:
    polynomial: BinomialPolynomial
    n_start: int
    n_max: int
    threshold: Optional[int]

    @property
    def degree(self) -> int:
        return self.polynomial.degree

    def to_dict(self) -> Dict[str, Any]:
        return {
            "polynomial": str(self.polynomial),
            **self.polynomial.to_dict(),
            "degree": self.degree,
            "n_start": self.n_start,
            "n_max": self.n_max,
            "observed_threshold": self.threshold,
        }


def fit_sequence(seq: CountSequence, n_start: int) -> FitResult:
    """n_start 에서 맞지 않으면 시작점을 하나씩 올려 본다"""
    last_error: Optional[NoStabilizationError] = None
    for start in range(max(n_start, seq.n_min), seq.n_max + 1):
        try:
            polynomial = fit_binomial_polynomial(seq, start)
        except NoStabilizationError as error:
            last_error = error
            continue
        if start != n_start:
            logger.info("fit for %s stabilized from n=%d (requested %d)", seq.basis, start, n_start)
        return FitResult(polynomial, start, seq.n_max, observed_threshold(seq, polynomial))
    raise NoStabilizationError(
        f"no polynomial tail for {seq.basis} up to n={seq.n_max}: {last_error}"
    )
