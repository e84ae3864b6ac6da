"""Command-line front end"""
import logging
import sys
from typing import List, Optional

from ..common.errors import (
    CountOverflowError,
    IntervalViolationError,
    InvalidInputError,
    InvalidParamsError,
    NoStabilizationError,
)
from ..profiling import Tracer
from .commands import COMMANDS
from .output import CommandResult, render
from .parser import build_parser
from .run_config import OutputFormat, RunConfig

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


def _configure_logging(level: str):
    logging.basicConfig(
        stream=sys.stderr,
        level=getattr(logging, level),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        force=True,
    )


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exit_request:
        # argparse 는 사용법 오류에 2, --help 에 0 으로 끝낸다
        return exit_request.code if isinstance(exit_request.code, int) else EXIT_USAGE

    try:
        config = RunConfig.from_args(args)
    except InvalidParamsError as error:
        print(f"error: {error}", file=sys.stderr)
        return EXIT_USAGE

    _configure_logging(config.log_level)
    tracer = Tracer.get()
    if config.trace_file:
        tracer.enable(config.trace_file)

    try:
        result = COMMANDS[config.command](config)
    except (InvalidParamsError, InvalidInputError) as error:
        print(f"error: {error}", file=sys.stderr)
        return EXIT_USAGE
    except (NoStabilizationError, CountOverflowError, IntervalViolationError) as error:
        print(f"error: {error}", file=sys.stderr)
        return EXIT_FAIL
    finally:
        tracer.finish()

    sys.stdout.write(render(result, config.output_format))
    return EXIT_PASS if result.passed else EXIT_FAIL


__all__ = [
    'main',
    'build_parser',
    'COMMANDS',
    'CommandResult',
    'render',
    'OutputFormat',
    'RunConfig',
    'EXIT_PASS',
    'EXIT_FAIL',
    'EXIT_USAGE',
]
