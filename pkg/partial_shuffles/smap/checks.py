"""
S 맵 보조정리들의 전수 검증

S_n 전체를 첫 값으로 나눠 워커에 맡기고, 각 검사별로 가장 앞선(사전순) 반례를 모은다.
검사 이름과 정의역:
  sigma_avoidance_preserved     Av(σ) 에서 S(π) ∈ Av(σ)
  new_a_elements_localized      모든 π. 새로 a 역할을 얻은 원소는 underline-a 또는 연관 구간
  descent_set_preserved         Av(σ) 에서 하강 집합 보존
  no_longer_decreasing          Av(σ) 에서 최장 감소 부분순열이 길어지지 않음
  longest_decreasing_preserved  Av(Π(a,b)) 에서 S^{n-a} 가 최장 감소 길이를 보존
  termination_within_bound      Av(σ) 에서 n-a 번 안에 Av(Π(a-1,b+1)) 도달
  underline_a_progress          Av(σ) 에서 underline-a 값이 엄격히 증가
"""
import logging
from dataclasses import dataclass, field
from itertools import permutations
from typing import Any, Dict, List, Optional

from ..common.report import CheckReport
from ..enumeration import enumerate_avoiders
from ..perm import Permutation, avoids_all, contains, descent_set, longest_decreasing
from ..profiling import MeasureTime
from ..shuffles import ShuffleParams, displaced_positions, find_mark, partial_shuffle, sigma
from ..threads import SweepRunner, Task
from .s_map import iteration_cap, s_apply, s_iterate

logger = logging.getLogger(__name__)

LEMMA_CHECKS = (
    "sigma_avoidance_preserved",
    "new_a_elements_localized",
    "descent_set_preserved",
    "no_longer_decreasing",
    "longest_decreasing_preserved",
    "termination_within_bound",
    "underline_a_progress",
)


@dataclass
class LemmaTally:
    """한 부분 트리(첫 값)의 검사 결과"""

    checked: Dict[str, int] = field(default_factory=lambda: {name: 0 for name in LEMMA_CHECKS})
    witnesses: Dict[str, Dict[str, Any]] = field(default_factory=dict)

    def record(self, name: str, ok: bool, witness: Dict[str, Any]):
        self.checked[name] += 1
        if not ok and name not in self.witnesses:
            self.witnesses[name] = witness

    def merge(self, other: "LemmaTally"):
        for name, count in other.checked.items():
            self.checked[name] += count
        for name, witness in other.witnesses.items():
            # 앞선 부분 트리의 반례 우선
            self.witnesses.setdefault(name, witness)


class LemmaSweep:
    def __init__(self, p: ShuffleParams, n: int):
        p.require_shift()
        self.p = p
        self.n = n
        self.sigma = sigma(p)
        self.basis = partial_shuffle(p)

    def _check_one(self, perm: Permutation, tally: LemmaTally):
        p = self.p
        step = s_apply(perm, p)
        image = step.output
        label = perm.label()

        if step.mark is not None:
            before = displaced_positions(perm, p.a, p.b)
            after = displaced_positions(image, p.a, p.b)
            strays = sorted(
                perm.value_at(pos)
                for pos in after - before
                if not (perm.value_at(pos) == step.mark.underline_a_value
                        or step.mark.is_associated(perm.value_at(pos)))
            )
            tally.record("new_a_elements_localized", not strays,
                         {"perm": label, "image": image.label(), "values": strays})
        else:
            tally.record("new_a_elements_localized", True, {})

        if contains(perm, self.sigma):
            return

        tally.record("sigma_avoidance_preserved", not contains(image, self.sigma),
                     {"perm": label, "image": image.label()})
        before_desc, after_desc = descent_set(perm), descent_set(image)
        tally.record("descent_set_preserved", before_desc == after_desc,
                     {"perm": label, "image": image.label(),
                      "before": sorted(before_desc), "after": sorted(after_desc)})
        tally.record("no_longer_decreasing", longest_decreasing(image) <= longest_decreasing(perm),
                     {"perm": label, "image": image.label()})

        result = s_iterate(perm, p)
        within = result.reached_fixed_point and result.steps <= iteration_cap(perm, p)
        tally.record("termination_within_bound", within,
                     {"perm": label, "final": result.final.label(), "steps": result.steps})

        if step.mark is not None:
            next_mark = find_mark(image, p)
            progressed = next_mark is None or next_mark.underline_a_value > step.mark.underline_a_value
            tally.record("underline_a_progress", progressed,
                         {"perm": label, "before": step.mark.underline_a_value,
                          "after": next_mark.underline_a_value if next_mark else None})

        if avoids_all(perm, self.basis):
            tally.record("longest_decreasing_preserved",
                         longest_decreasing(result.final) == longest_decreasing(perm),
                         {"perm": label, "final": result.final.label()})

    def run_subtree(self, first: int) -> LemmaTally:
        tally = LemmaTally()
        rest = [v for v in range(1, self.n + 1) if v != first]
        for tail in permutations(rest):
            self._check_one(Permutation((first,) + tail), tally)
        return tally

    def run(self, workers: int = 1) -> LemmaTally:
        total = LemmaTally()
        if self.n == 0:
            self._check_one(Permutation(()), total)
            return total
        tasks = [Task(self.run_subtree, first, name=f"lemmas n={self.n} first={first}")
                 for first in range(1, self.n + 1)]
        with MeasureTime("check_lemmas", "smap", {"params": str(self.p), "n": self.n}) as span:
            for part in SweepRunner(workers, "smap", processes=True).run_all(tasks):
                total.merge(part)
            span.annotate(checked=dict(total.checked))
        return total


def check_lemmas(p: ShuffleParams, n: int, workers: int = 1) -> List[CheckReport]:
    tally = LemmaSweep(p, n).run(workers)
    reports = []
    for name in LEMMA_CHECKS:
        witness = tally.witnesses.get(name)
        if witness is not None:
            logger.info("%s failed for %s at n=%d: %s", name, p, n, witness)
        reports.append(CheckReport(
            check=name,
            params=p.to_dict(),
            n=n,
            passed=witness is None,
            counterexample=witness,
            details={"checked": tally.checked[name]},
        ))
    return reports


def check_injectivity(p: ShuffleParams, n: int, workers: int = 1) -> CheckReport:
    """
    S^{n-a}: Av_n(Π(a,b)) -> Av_n(Π(a-1,b+1)) 가 단사이고 상이 목표 집합 전체인지

    전사성은 역사상을 만들지 않고 개수 비교로 확인한다.
    """
    p.require_shift()
    target_params = p.shifted()
    domain = list(enumerate_avoiders(partial_shuffle(p), n, workers))
    target = set(enumerate_avoiders(partial_shuffle(target_params), n, workers))

    seen: Dict[Permutation, Permutation] = {}
    collision: Optional[Dict[str, Any]] = None
    outside: Optional[Dict[str, Any]] = None
    with MeasureTime("check_injectivity", "smap", {"params": str(p), "n": n}) as span:
        for perm in domain:
            image = s_iterate(perm, p).final
            if image in seen and collision is None:
                collision = {"perm": perm.label(), "other": seen[image].label(), "image": image.label()}
            seen.setdefault(image, perm)
            if image not in target and outside is None:
                outside = {"perm": perm.label(), "image": image.label()}
        span.annotate(images=len(seen))

    distinct = collision is None
    in_target = outside is None
    bijective = distinct and in_target and len(seen) == len(target)
    return CheckReport(
        check="injectivity",
        params=p.to_dict(),
        n=n,
        passed=bijective,
        counterexample=collision or outside,
        details={
            "domain_size": len(domain),
            "image_size": len(seen),
            "target_size": len(target),
            "distinct": distinct,
            "in_target": in_target,
            "bijective": bijective,
        },
    )
