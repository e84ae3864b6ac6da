"""
Av(Π(a,b), δ_m) 개수 다항식에 대한 검사

- 차수 (a+b-2)(m-2)
- m = 3 이면 최고차항 C_{a+b-2} C(n, a+b-2)
- m = 3 추측 다항식: C_p C(n,p) - Σ_{h=1}^{p-1} T_{p,h} C(n, p-1-h), p = a+b-2
"""
import logging
from typing import Optional

from ..common.errors import InvalidParamsError
from ..common.report import CheckReport
from ..enumeration import count_avoiders
from ..shuffles import ShuffleParams, basis_for
from .binomial_polynomial import BinomialPolynomial
from .catalan import catalan, transposed_catalan_T
from .fitting import fit_sequence

logger = logging.getLogger(__name__)


def default_n_start(p: ShuffleParams) -> int:
    return 2 * (p.size - 2) + 1


def expected_degree(p: ShuffleParams, m: int) -> int:
    return (p.size - 2) * (m - 2)


def check_degree_and_leading(
    p: ShuffleParams,
    m: int,
    n_max: int,
    n_start: Optional[int] = None,
    workers: int = 1,
) -> CheckReport:
    """NoStabilizationError 는 그대로 올려 보낸다"""
    if m < 2:
        raise InvalidParamsError(f"delta size m must be >= 2, got {m}")
    seq = count_avoiders(basis_for(p, m), n_max, workers=workers)
    fit = fit_sequence(seq, default_n_start(p) if n_start is None else n_start)

    degree_ok = fit.degree == expected_degree(p, m)
    details = {
        **fit.to_dict(),
        "expected_degree": expected_degree(p, m),
        "leading": fit.polynomial.leading_coefficient,
    }
    leading_ok = True
    if m == 3 and p.size >= 3:
        details["expected_leading"] = catalan(p.size - 2)
        leading_ok = fit.polynomial.leading_coefficient == details["expected_leading"]

    counterexample = None
    if not (degree_ok and leading_ok):
        counterexample = {"degree": fit.degree, "leading": fit.polynomial.leading_coefficient}
    return CheckReport(
        check="degree_and_leading",
        params={**p.to_dict(), "m": m},
        n=n_max,
        passed=degree_ok and leading_ok,
        counterexample=counterexample,
        details=details,
    )


def conjecture_polynomial(p: ShuffleParams) -> BinomialPolynomial:
    """a+b 에만 의존"""
    top = p.size - 2
    if top < 1:
        raise InvalidParamsError(f"conjecture needs a + b >= 3, got {p.size}")
    coeffs = [0] * (top + 1)
    coeffs[top] = catalan(top)
    for h in range(1, top):
        coeffs[top - 1 - h] = -transposed_catalan_T(top, h)
    return BinomialPolynomial(tuple(coeffs))


def check_conjecture(
    p: ShuffleParams,
    n_max: int,
    m: int = 3,
    workers: int = 1,
    n_min: Optional[int] = None,
) -> CheckReport:
    """
    추측 다항식과 열거한 개수를 n_min .. n_max 에서 비교

    n_min 기본값은 2(a+b-2)+1 과 n_max 중 작은 값. 문턱보다 작은 n 의 행은
    below_threshold 로 표시하되 똑같이 비교한다.
    불일치는 예외가 아니라 리포트의 발견 사항이다.
    """
    if m != 3:
        raise InvalidParamsError(f"the coefficient conjecture is stated for m = 3 only, got m={m}")
    polynomial = conjecture_polynomial(p)
    threshold = default_n_start(p)
    if n_min is None:
        n_min = min(threshold, n_max)
    if n_min < 0 or n_max < n_min:
        raise InvalidParamsError(f"need 0 <= n_min <= n_max, got n_min={n_min}, n_max={n_max}")
    seq = count_avoiders(basis_for(p, m), n_max, n_min=n_min, workers=workers)

    rows = []
    mismatch = None
    for n, count in seq.items():
        predicted = polynomial.evaluate(n)
        below = n < threshold
        rows.append({"n": n, "predicted": predicted, "enumerated": count,
                     "match": predicted == count, "below_threshold": below})
        if predicted != count and mismatch is None:
            mismatch = {"n": n, "predicted": predicted, "enumerated": count, "below_threshold": below}
            logger.info("conjecture mismatch for a+b=%d at n=%d: %d != %d", p.size, n, predicted, count)

    return CheckReport(
        check="conjecture",
        params={"sum": p.size, "m": m},
        n=n_max,
        passed=mismatch is None,
        counterexample=mismatch,
        details={"polynomial": str(polynomial), "coeffs": list(polynomial.coeffs),
                 "threshold": threshold, "rows": rows},
    )
