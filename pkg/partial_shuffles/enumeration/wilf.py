"""
Wilf 동치 검증

같은 크기 a+b 의 모든 Π(a,b) (δ_m 추가 가능) 에 대해 개수 수열이 같은지 본다.
"""
import logging
from typing import Dict, List, Optional

from ..common.report import CheckReport
from ..perm import PatternBasis
from ..shuffles import basis_for, splits_of
from .avoiders import count_avoiders
from .count_sequence import CountSequence

logger = logging.getLogger(__name__)


def _first_divergence(reference: CountSequence, other: CountSequence) -> Optional[int]:
    for (n, expected), (_, actual) in zip(reference.items(), other.items()):
        if expected != actual:
            return n
    return None


def check_wilf(
    size_sum: int,
    n_max: int,
    delta_m: Optional[int] = None,
    n_min: int = 0,
    workers: int = 1,
) -> CheckReport:
    splits = splits_of(size_sum)
    sequences: Dict[str, CountSequence] = {}
    for p in splits:
        basis = basis_for(p, delta_m)
        sequences[str(p)] = count_avoiders(basis, n_max, n_min, workers)

    params = {"size": size_sum, "delta": delta_m}
    labels = list(sequences)
    reference = sequences[labels[0]]
    for label in labels[1:]:
        n = _first_divergence(reference, sequences[label])
        if n is not None:
            logger.info("Wilf divergence at n=%d between %s and %s", n, labels[0], label)
            return CheckReport(
                check="wilf",
                params=params,
                n=n_max,
                passed=False,
                counterexample={
                    "n": n,
                    "basis": label,
                    "count": sequences[label].count(n),
                    "reference_basis": labels[0],
                    "reference_count": reference.count(n),
                },
                details={"sequences": {k: list(v.counts) for k, v in sequences.items()}},
            )

    return CheckReport(
        check="wilf",
        params=params,
        n=n_max,
        passed=True,
        details={"bases": labels, "n_min": n_min, "common": list(reference.counts)},
    )


def check_symmetry(basis: PatternBasis, n_max: int, workers: int = 1) -> CheckReport:
    """Π 와 Π^rc 의 개수 수열 비교"""
    mirrored = basis.reverse_complement()
    forward = count_avoiders(basis, n_max, workers=workers)
    backward = count_avoiders(mirrored, n_max, workers=workers)
    params = {"basis": str(basis), "rc": str(mirrored)}
    n = _first_divergence(forward, backward)
    if n is not None:
        return CheckReport(
            check="symmetry",
            params=params,
            n=n_max,
            passed=False,
            counterexample={"n": n, "count": forward.count(n), "rc_count": backward.count(n)},
        )
    return CheckReport(check="symmetry", params=params, n=n_max, passed=True,
                       details={"common": list(forward.counts)})


def common_counts(report: CheckReport) -> List[int]:
    return list(report.details.get("common", []))
