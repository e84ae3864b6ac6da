"""정수 이항계수, 카탈란 수, 전치 카탈란 삼각형"""
import threading
from typing import List, Tuple

from ..common.errors import InvalidParamsError, ShuffleError

# 파스칼 삼각형 행 캐시 (워커 스레드에서 함께 씀)
_rows: List[Tuple[int, ...]] = [(1,)]
_rows_lock = threading.Lock()


def _pascal_row(x: int) -> Tuple[int, ...]:
    with _rows_lock:
        while len(_rows) <= x:
            prev = _rows[-1]
            _rows.append((1,) + tuple(prev[k - 1] + prev[k] for k in range(1, len(prev))) + (1,))
        return _rows[x]


def binomial(x: int, k: int) -> int:
    """
    C(x, k) = x(x-1)...(x-k+1) / k!

    x 는 음수여도 된다: C(x, k) = (-1)^k C(k-x-1, k).
    k < 0 이면 0.
    """
    if k < 0:
        return 0
    if x >= 0:
        return _pascal_row(x)[k] if k <= x else 0
    sign = -1 if k % 2 else 1
    return sign * _pascal_row(k - x - 1)[k]


def catalan(k: int) -> int:
    if k < 0:
        raise InvalidParamsError(f"catalan needs k >= 0, got {k}")
    return binomial(2 * k, k) // (k + 1)


def transposed_catalan_T(p: int, q: int) -> int:
    """T_{p,q} = q C(2p-q, p) / (2p-q), 1 ≤ q ≤ p"""
    if not 1 <= q <= p:
        raise InvalidParamsError(f"transposed Catalan triangle needs 1 <= q <= p, got p={p}, q={q}")
    top = 2 * p - q
    value, remainder = divmod(q * binomial(top, p), top)
    if remainder:
        raise ShuffleError(f"T_{p},{q} = {q}·C({top},{p})/{top} is not an integer")
    return value
