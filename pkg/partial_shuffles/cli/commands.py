"""명령별 실행 함수. 모두 RunConfig 를 받아 CommandResult 를 돌려준다"""
from typing import Callable, Dict, List, Optional

from ..analysis import (
    a_to_b_sequence,
    catalan,
    check_conjecture,
    check_degree_and_leading,
    check_extremal,
    count_bounded_sequences,
    default_n_start,
    fit_sequence,
)
from ..common.constants import (
    MAX_CLASS_N,
    MAX_COUNT_N,
    MAX_DELTA_COUNT_N,
    MAX_EXTREMAL_N,
    MAX_PEG_N,
    MAX_SWEEP_N,
)
from ..common.errors import InvalidParamsError
from ..enumeration import check_symmetry, check_wilf, common_counts, count_avoiders
from ..peg import inflate, max_free_slots, separated_peg
from ..perm import PatternBasis, Permutation
from ..shuffles import ShuffleParams, basis_for, partial_shuffle, sigma
from ..smap import check_injectivity, check_lemmas, s_apply, s_iterate
from .output import CommandResult
from .run_config import RunConfig


def _params(config: RunConfig) -> ShuffleParams:
    a, b = config.get("a"), config.get("b")
    if a is None or b is None:
        raise InvalidParamsError("--a and --b are required")
    return ShuffleParams(a, b)


def _count_bound(config: RunConfig, delta: Optional[int], n_max: int):
    if delta is not None:
        config.require_within(n_max, MAX_DELTA_COUNT_N, "--max-n")
    else:
        config.require_within(n_max, MAX_COUNT_N, "--max-n")


def _basis(config: RunConfig) -> PatternBasis:
    text = config.get("basis")
    if text is not None:
        if config.get("a") is not None or config.get("b") is not None:
            raise InvalidParamsError("--basis cannot be combined with --a/--b")
        if config.get("delta") is not None:
            raise InvalidParamsError("--basis cannot be combined with --delta; list the decreasing pattern in --basis")
        basis = PatternBasis.parse(text)
        basis.validate()
        return basis
    return basis_for(_params(config), config.get("delta"))


def cmd_shuffle(config: RunConfig) -> CommandResult:
    p = _params(config)
    if config.get("sigma", False):
        s = sigma(p)
        return CommandResult(payload={"params": p.to_dict(), "sigma": s.label()}, lines=[s.label()])
    basis = partial_shuffle(p)
    return CommandResult(
        payload={"params": p.to_dict(), "basis": basis.labels()},
        lines=[" ".join(basis.labels())],
    )


def cmd_smap(config: RunConfig) -> CommandResult:
    p = _params(config)
    perm = Permutation.parse(config.get("perm"))
    if not config.get("iterate", False):
        step = s_apply(perm, p)
        detail = "fixed point" if step.is_fixed_point else f"mark: {step.mark}"
        return CommandResult(payload=step.to_dict(), lines=[step.output.label(), detail])

    result = s_iterate(perm, p)
    lines = [f"{i}: {step.output.label()} (mark: {step.mark})" for i, step in enumerate(result.trace, start=1)]
    ending = "fixed point" if result.reached_fixed_point else "no fixed point within n-a steps"
    lines.append(f"final {result.final.label()} after {result.steps} steps, {ending}")
    return CommandResult(payload=result.to_dict(), lines=lines, passed=result.reached_fixed_point)


def cmd_count(config: RunConfig) -> CommandResult:
    basis = _basis(config)
    n_max = config.get("max_n")
    _count_bound(config, config.get("delta"), n_max)
    seq = count_avoiders(basis, n_max, config.get("min_n", 0), config.workers)
    return CommandResult(
        payload=seq.to_dict(),
        lines=[f"basis {basis}"],
        header=["n", "count"],
        rows=seq.to_rows(),
    )


def cmd_wilf(config: RunConfig) -> CommandResult:
    delta = config.get("delta")
    n_max = config.get("max_n")
    _count_bound(config, delta, n_max)
    report = check_wilf(config.get("size"), n_max, delta, workers=config.workers)
    lines = []
    if report.passed:
        lines.append("common " + " ".join(str(c) for c in common_counts(report)))
    return CommandResult.from_reports([report], lines)


def cmd_fit(config: RunConfig) -> CommandResult:
    p = _params(config)
    delta = config.get("delta")
    n_max = config.get("max_n")
    _count_bound(config, delta, n_max)
    seq = count_avoiders(basis_for(p, delta), n_max, workers=config.workers)
    fit = fit_sequence(seq, config.get("n_start", default_n_start(p)))
    return CommandResult(
        payload=fit.to_dict(),
        lines=[
            str(fit.polynomial),
            f"degree {fit.degree}",
            f"n_start {fit.n_start}",
            f"observed_threshold {fit.threshold}",
        ],
    )


def cmd_conjecture(config: RunConfig) -> CommandResult:
    n_max = config.get("max_n")
    config.require_within(n_max, MAX_DELTA_COUNT_N, "--max-n")
    report = check_conjecture(ShuffleParams(config.get("sum"), 0), n_max, workers=config.workers,
                              n_min=config.get("min_n"))
    rows = [[row["n"], row["predicted"], row["enumerated"], "yes" if row["match"] else "NO",
             "below" if row["below_threshold"] else ""]
            for row in report.details["rows"]]
    return CommandResult(
        payload=report.to_dict(),
        lines=[report.details["polynomial"], f"threshold {report.details['threshold']}"],
        header=["n", "predicted", "enumerated", "match", "threshold"],
        rows=rows,
        passed=report.passed,
    )


def cmd_verify_lemmas(config: RunConfig) -> CommandResult:
    n = config.get("n")
    config.require_within(n, MAX_SWEEP_N, "--n")
    return CommandResult.from_reports(check_lemmas(_params(config), n, config.workers))


def cmd_injectivity(config: RunConfig) -> CommandResult:
    n = config.get("n")
    config.require_within(n, MAX_CLASS_N, "--n")
    report = check_injectivity(_params(config), n, config.workers)
    sizes = report.details
    line = f"domain {sizes['domain_size']}, image {sizes['image_size']}, target {sizes['target_size']}"
    return CommandResult.from_reports([report], [line])


def cmd_degree(config: RunConfig) -> CommandResult:
    n_max = config.get("max_n")
    config.require_within(n_max, MAX_DELTA_COUNT_N, "--max-n")
    report = check_degree_and_leading(
        _params(config), config.get("m"), n_max, config.get("n_start"), config.workers
    )
    return CommandResult.from_reports([report], [report.details["polynomial"]])


def cmd_catalan(config: RunConfig) -> CommandResult:
    k = config.get("k")
    result = count_bounded_sequences(k)
    expected = catalan(k)
    lines = [f"catalan {expected}", f"bounded sequences {result.count}"]
    witnesses: List[Dict[str, str]] = []
    for seq in result.witnesses or ():
        b = "".join(str(v) for v in a_to_b_sequence(seq))
        witnesses.append({"a": str(seq), "b": b})
        lines.append(f"{seq} -> {b}")
    return CommandResult(
        payload={"k": k, "catalan": expected, "count": result.count, "witnesses": witnesses},
        lines=lines,
        passed=result.count == expected,
    )


def cmd_peg(config: RunConfig) -> CommandResult:
    p = ShuffleParams(config.get("sum"), 0)
    m = config.get("m")
    peg = separated_peg(p, m)
    check_up_to = config.get("check_up_to", len(peg) + 2)
    config.require_within(check_up_to, MAX_PEG_N, "--check-up-to")
    report = max_free_slots(p, m, check_up_to, config.workers)
    return CommandResult.from_reports(
        [report], [f"slots {report.details['slots']}", f"peg {report.details['peg']}"]
    )


def _parse_parts(text: str) -> List[Permutation]:
    separator = ";" if ";" in text else ","
    return [Permutation.parse(part) for part in text.split(separator) if part.strip()]


def cmd_inflate(config: RunConfig) -> CommandResult:
    base = Permutation.parse(config.get("base"))
    parts = _parse_parts(config.get("parts"))
    result = inflate(base, parts)
    return CommandResult(
        payload={"base": base.label(), "parts": [p.label() for p in parts], "result": result.label()},
        lines=[result.label()],
    )


def cmd_extremal(config: RunConfig) -> CommandResult:
    p, q = config.get("p"), config.get("q")
    config.require_within((p - 1) * (q - 1), MAX_EXTREMAL_N, "(p-1)(q-1)")
    report = check_extremal(p, q, config.workers)
    return CommandResult.from_reports([report], [f"n {report.n}", f"witness {report.details['witness']}"])


def cmd_symmetry(config: RunConfig) -> CommandResult:
    basis = _basis(config)
    n_max = config.get("max_n")
    _count_bound(config, config.get("delta"), n_max)
    return CommandResult.from_reports([check_symmetry(basis, n_max, config.workers)])


COMMANDS: Dict[str, Callable[[RunConfig], CommandResult]] = {
    "shuffle": cmd_shuffle,
    "smap": cmd_smap,
    "count": cmd_count,
    "wilf": cmd_wilf,
    "fit": cmd_fit,
    "conjecture": cmd_conjecture,
    "verify-lemmas": cmd_verify_lemmas,
    "injectivity": cmd_injectivity,
    "degree": cmd_degree,
    "catalan": cmd_catalan,
    "peg": cmd_peg,
    "inflate": cmd_inflate,
    "extremal": cmd_extremal,
    "symmetry": cmd_symmetry,
}
