"""RunConfig - 명령 하나의 실행 설정 (argparse 결과에서 만듦)"""
import argparse
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Optional

from ..common.constants import DEFAULT_WORKERS
from ..common.errors import InvalidParamsError

GLOBAL_OPTIONS = ("command", "workers", "format", "force", "trace", "log_level")


class OutputFormat(Enum):
    TABLE = "table"
    JSON = "json"
    CSV = "csv"


@dataclass
class RunConfig:
    command: str
    params: Dict[str, Any] = field(default_factory=dict)
    workers: int = DEFAULT_WORKERS
    output_format: OutputFormat = OutputFormat.TABLE
    force: bool = False
    trace_file: Optional[str] = None
    log_level: str = "WARNING"

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "RunConfig":
        options = vars(args)
        return cls(
            command=args.command,
            params={k: v for k, v in options.items() if k not in GLOBAL_OPTIONS},
            workers=args.workers,
            output_format=OutputFormat(args.format),
            force=args.force,
            trace_file=args.trace,
            log_level=args.log_level,
        )

    def __post_init__(self):
        if self.workers < 1:
            raise InvalidParamsError(f"--workers must be positive, got {self.workers}")

    def get(self, name: str, default: Any = None) -> Any:
        value = self.params.get(name)
        return default if value is None else value

    def require_within(self, value: int, bound: int, what: str):
        """데스크 규모를 넘는 요청은 --force 가 있어야 실행"""
        if value > bound and not self.force:
            raise InvalidParamsError(f"{what}={value} exceeds the desk-scale bound {bound}; pass --force to run anyway")
