"""
검증 리포트

모든 check_* 연산은 CheckReport를 돌려준다. 실패는 예외가 아니라
리포트 내용(passed=False + counterexample)이다.
"""
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional


@dataclass
class CheckReport:
    """단일 검증 결과"""

    check: str
    params: Dict[str, Any]
    n: Optional[int]
    passed: bool
    counterexample: Optional[Dict[str, Any]] = None
    details: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        report = {
            "check": self.check,
            "params": dict(self.params),
            "n": self.n,
            "pass": self.passed,
        }
        if self.counterexample is not None:
            report["counterexample"] = self.counterexample
        if self.details:
            report["details"] = self.details
        return report

    def to_rows(self) -> List[List[str]]:
        params = " ".join(f"{k}={v}" for k, v in self.params.items())
        witness = ""
        if self.counterexample is not None:
            witness = " ".join(f"{k}={v}" for k, v in self.counterexample.items())
        return [[self.check, params, str(self.n), "pass" if self.passed else "FAIL", witness]]


REPORT_HEADER = ["check", "params", "n", "result", "counterexample"]
