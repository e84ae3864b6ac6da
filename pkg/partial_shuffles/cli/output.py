"""
명령 결과 출력 (table / json / csv)

같은 입력이면 워커 수와 상관없이 바이트 단위로 같은 출력을 낸다.
"""
import csv
import io
import json
from dataclasses import dataclass, field
from typing import Any, List, Optional

from ..common.report import REPORT_HEADER, CheckReport
from .run_config import OutputFormat


@dataclass
class CommandResult:
    payload: Any
    lines: List[str] = field(default_factory=list)
    header: Optional[List[str]] = None
    rows: List[List[Any]] = field(default_factory=list)
    passed: bool = True

    @classmethod
    def from_reports(cls, reports: List[CheckReport], lines: Optional[List[str]] = None) -> "CommandResult":
        rows = [row for report in reports for row in report.to_rows()]
        payload: Any = [r.to_dict() for r in reports]
        if len(reports) == 1:
            payload = payload[0]
        return cls(
            payload=payload,
            lines=list(lines or []),
            header=list(REPORT_HEADER),
            rows=rows,
            passed=all(r.passed for r in reports),
        )


def _table(header: Optional[List[str]], rows: List[List[Any]]) -> List[str]:
    cells = [[str(c) for c in row] for row in ([header] if header else []) + rows]
    if not cells:
        return []
    widths = [max(len(row[i]) for row in cells if i < len(row)) for i in range(max(len(r) for r in cells))]
    return ["  ".join(c.ljust(widths[i]) for i, c in enumerate(row)).rstrip() for row in cells]


def _csv(header: Optional[List[str]], rows: List[List[Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    if header:
        writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def render(result: CommandResult, output_format: OutputFormat) -> str:
    if output_format is OutputFormat.JSON:
        return json.dumps(result.payload, sort_keys=True, ensure_ascii=False, indent=2) + "\n"
    if output_format is OutputFormat.CSV:
        if result.rows:
            return _csv(result.header, result.rows)
        return "".join(line + "\n" for line in result.lines)
    lines = list(result.lines)
    if result.rows:
        lines.extend(_table(result.header, result.rows))
    return "".join(line + "\n" for line in lines)

