"""Erdős–Szekeres: Av(ι_p, δ_q) 의 가장 큰 원소"""
from typing import Optional

from ..common.errors import InvalidParamsError
from ..common.report import CheckReport
from ..enumeration import enumerate_avoiders
from ..perm import PatternBasis, Permutation, make_delta, make_iota


def _basis(p: int, q: int) -> PatternBasis:
    return PatternBasis((make_iota(p), make_delta(q)))


def erdos_szekeres_extremal(p: int, q: int, workers: int = 1) -> int:
    """Av_n(ι_p, δ_q) 가 비지 않는 가장 큰 n. 열거로 찾는다"""
    if p < 2 or q < 2:
        raise InvalidParamsError(f"need p, q >= 2, got p={p}, q={q}")
    basis = _basis(p, q)
    n = 0
    while next(iter(enumerate_avoiders(basis, n + 1, workers)), None) is not None:
        n += 1
    return n


def extremal_witness(p: int, q: int, workers: int = 1) -> Optional[Permutation]:
    """가장 큰 크기에서 사전순 첫 원소"""
    n = erdos_szekeres_extremal(p, q, workers)
    return next(iter(enumerate_avoiders(_basis(p, q), n, workers)), None)


def erdos_szekeres_permutation(p: int, q: int) -> Permutation:
    """
    길이 p-1 인 증가 구간 q-1 개를 값이 큰 블록부터 늘어놓은 순열

    크기 (p-1)(q-1) 이고 ι_p, δ_q 를 모두 피한다. (3,4) 이면 563412.
    """
    if p < 1 or q < 1:
        raise InvalidParamsError(f"need p, q >= 1, got p={p}, q={q}")
    run = p - 1
    values = []
    for block in range(q - 2, -1, -1):
        values.extend(range(block * run + 1, block * run + run + 1))
    return Permutation(tuple(values))


def check_extremal(p: int, q: int, workers: int = 1) -> CheckReport:
    """열거로 찾은 최대 크기가 (p-1)(q-1) 인지"""
    n = erdos_szekeres_extremal(p, q, workers)
    expected = (p - 1) * (q - 1)
    witness = next(iter(enumerate_avoiders(_basis(p, q), n, workers)), None)
    return CheckReport(
        check="extremal",
        params={"p": p, "q": q},
        n=n,
        passed=n == expected,
        counterexample=None if n == expected else {"found": n, "expected": expected},
        details={
            "expected": expected,
            "witness": witness.label() if witness is not None else None,
            "layered": erdos_szekeres_permutation(p, q).label(),
        },
    )
