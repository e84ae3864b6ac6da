"""argparse 정의. 긴 옵션만, 약어 허용 안 함"""
import argparse

from ..common.constants import DEFAULT_WORKERS
from .run_config import OutputFormat


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False, allow_abbrev=False)
    common.add_argument("--workers", type=int, default=DEFAULT_WORKERS, help="worker threads for sweeps")
    common.add_argument("--format", choices=[f.value for f in OutputFormat], default=OutputFormat.TABLE.value)
    common.add_argument("--force", action="store_true", help="run beyond the desk-scale bounds")
    common.add_argument("--trace", metavar="FILE", default=None, help="write a Chrome trace to FILE")
    common.add_argument("--log-level", default="WARNING",
                        choices=["DEBUG", "INFO", "WARNING", "ERROR"])
    return common


def _shuffle_options(parser: argparse.ArgumentParser, required: bool = True):
    parser.add_argument("--a", type=int, required=required)
    parser.add_argument("--b", type=int, required=required)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="partial_shuffles",
        description="Partial shuffle avoidance classes: S-map, Wilf checks, polynomial counts",
        allow_abbrev=False,
    )
    commands = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
    common = _common_options()

    def add(name: str, help_text: str) -> argparse.ArgumentParser:
        return commands.add_parser(name, help=help_text, parents=[common], allow_abbrev=False)

    shuffle = add("shuffle", "print the partial shuffle basis")
    _shuffle_options(shuffle)
    shuffle.add_argument("--sigma", action="store_true", help="print sigma_{a,b} instead")

    smap = add("smap", "apply the S-map")
    smap.add_argument("--perm", required=True)
    _shuffle_options(smap)
    smap.add_argument("--iterate", action="store_true")

    count = add("count", "count avoiders for n = min-n..max-n")
    _shuffle_options(count, required=False)
    count.add_argument("--delta", type=int, default=None)
    count.add_argument("--basis", default=None, help='explicit basis, e.g. "132,312"')
    count.add_argument("--max-n", type=int, required=True)
    count.add_argument("--min-n", type=int, default=0)

    wilf = add("wilf", "check Wilf-equivalence of all splits of one size")
    wilf.add_argument("--size", type=int, required=True)
    wilf.add_argument("--max-n", type=int, required=True)
    wilf.add_argument("--delta", type=int, default=None)

    fit = add("fit", "fit the count tail with a binomial-basis polynomial")
    _shuffle_options(fit)
    fit.add_argument("--delta", type=int, default=None)
    fit.add_argument("--max-n", type=int, required=True)
    fit.add_argument("--n-start", type=int, default=None)

    conjecture = add("conjecture", "compare the m=3 coefficient conjecture with enumerated counts")
    conjecture.add_argument("--sum", type=int, required=True)
    conjecture.add_argument("--max-n", type=int, required=True)
    conjecture.add_argument("--min-n", type=int, default=None,
                            help="first n to compare (default: the threshold 2(a+b-2)+1, or --max-n if smaller)")

    lemmas = add("verify-lemmas", "exhaustively check the S-map lemmas over S_n")
    _shuffle_options(lemmas)
    lemmas.add_argument("--n", type=int, required=True)

    injectivity = add("injectivity", "check that S^(n-a) is a bijection between the classes")
    _shuffle_options(injectivity)
    injectivity.add_argument("--n", type=int, required=True)

    degree = add("degree", "check degree (a+b-2)(m-2) and the m=3 leading coefficient")
    _shuffle_options(degree)
    degree.add_argument("--m", type=int, required=True)
    degree.add_argument("--max-n", type=int, required=True)
    degree.add_argument("--n-start", type=int, default=None)

    catalan = add("catalan", "count bounded partial-sum sequences against C_k")
    catalan.add_argument("--k", type=int, required=True)

    peg = add("peg", "build and check the separated peg for Av(Pi(a+b,0), delta_m)")
    peg.add_argument("--sum", type=int, required=True)
    peg.add_argument("--m", type=int, required=True)
    peg.add_argument("--check-up-to", type=int, default=None)

    inflate = add("inflate", "inflate a permutation by monotone parts")
    inflate.add_argument("--base", required=True)
    inflate.add_argument("--parts", required=True, help='e.g. "1,321,12,21"')

    extremal = add("extremal", "largest n with Av_n(iota_p, delta_q) nonempty")
    extremal.add_argument("--p", type=int, required=True)
    extremal.add_argument("--q", type=int, required=True)

    symmetry = add("symmetry", "compare counts of a basis and its reverse-complement")
    _shuffle_options(symmetry, required=False)
    symmetry.add_argument("--delta", type=int, default=None)
    symmetry.add_argument("--basis", default=None)
    symmetry.add_argument("--max-n", type=int, required=True)

    return parser
