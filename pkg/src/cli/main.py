"""Command-line surface for the Riordan toolkit.

Every subcommand prints plain text by default and a JSON document with
``--json``. Exit codes: 0 when everything passes, 1 when a check fails
(the first witness is printed), 2 for usage and expression errors.
"""
import argparse
import json
import sys
from typing import Callable, Dict, List, Optional

from pydantic import BaseModel

from ..algebra.almost import chebyshev_T_array
from ..algebra.coeffring import render, render_all
from ..algebra.families import FamilyKind, FamilySpec
from ..algebra.jfrac import series_to_jfraction
from ..algebra.riordan import involution_check, moment_polys, production_matrix
from ..algebra.series import Series
from ..algebra.transforms import hankel
from ..oeis.bfile import OEISClient, compare_terms, normalize_anumber
from ..schemas.payloads import (
    FamilyPayload,
    InvolutionReport,
    JFractionPayload,
    MatrixPayload,
    PairPayload,
    SequencePayload,
    witness_text,
)
from ..utils.config import settings
from ..utils.exceptions import ExpressionError, RiordanError
from ..utils.logger import cli_logger
from ..verification import run_all
from .expressions import describe, parse_pair_or_family, parse_sequence, parse_series

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


class UsageError(Exception):
    """Bad arguments discovered after argparse has accepted them."""


def emit(args: argparse.Namespace, text: str, payload: Optional[BaseModel] = None) -> None:
    if args.json and payload is not None:
        print(json.dumps(payload.model_dump(), indent=2))
    else:
        print(text)


def _size(args: argparse.Namespace) -> int:
    if args.n < 1:
        raise UsageError("--n must be at least 1")
    return args.n


def _enough(values: list, needed: int) -> list:
    if len(values) < needed:
        raise UsageError(f"need {needed} terms, the sequence has {len(values)}")
    return values[:needed]


def _pair(text: str, size: int, extra: int = 0):
    return parse_pair_or_family(text, max(size - 1 + extra, 1))


# -- subcommands ------------------------------------------------------------------


def cmd_show(args: argparse.Namespace) -> int:
    n = _size(args)
    matrix = _pair(args.pair, n).to_matrix(n)
    emit(args, matrix.render(), MatrixPayload.from_matrix(matrix))
    return EXIT_OK


def cmd_mul(args: argparse.Namespace) -> int:
    n = _size(args)
    product = _pair(args.left, n) * _pair(args.right, n)
    matrix = product.to_matrix(n)
    emit(args, matrix.render(), MatrixPayload.from_matrix(matrix))
    return EXIT_OK


def cmd_inv(args: argparse.Namespace) -> int:
    n = _size(args)
    inverse = _pair(args.pair, n).inverse()
    if args.json:
        emit(args, "", PairPayload.from_pair(inverse))
    else:
        emit(args, inverse.to_matrix(n).render())
    return EXIT_OK


def cmd_apply(args: argparse.Namespace) -> int:
    n = _size(args)
    order = max(n - 1, 1)
    result = _pair(args.pair, n).act(parse_series(args.series, order))
    values = list(result.coeffs[:n])
    emit(args, ", ".join(render_all(values)), SequencePayload.from_values(values))
    return EXIT_OK


def cmd_involution(args: argparse.Namespace) -> int:
    n = _size(args)
    result = involution_check(_pair(args.pair, n), n)
    report = InvolutionReport.from_result(describe(args.pair) or args.pair, result)
    if result.holds:
        emit(args, f"involution: PASS (n={n})", report)
        return EXIT_OK
    emit(args, f"involution: FAIL (n={n}) {witness_text(result.witness)}", report)
    return EXIT_FAIL


def cmd_moments(args: argparse.Namespace) -> int:
    count = args.count
    if count < 1:
        raise UsageError("--count must be at least 1")
    spec = FamilySpec.parse(args.family)
    family = spec.family(max(count - 1, 1))
    if family is None:
        raise UsageError(f"{spec.label} has no parameterized moment family")
    moments = moment_polys(family, count)
    lines = [f"mu_{i} = {render(m)}" for i, m in enumerate(moments)]
    emit(args, "\n".join(lines), SequencePayload.from_values(moments))
    return EXIT_OK


def cmd_hankel(args: argparse.Namespace) -> int:
    count = args.count
    if count < 1:
        raise UsageError("--count must be at least 1")
    values = _enough(parse_sequence(args.sequence, 2 * count - 1), 2 * count - 1)
    transform = hankel(values, count - 1)
    emit(args, ", ".join(render_all(transform)), SequencePayload.from_values(transform))
    return EXIT_OK


def cmd_jfrac(args: argparse.Namespace) -> int:
    depth = args.depth
    if depth < 1:
        raise UsageError("--depth must be at least 1")
    values = _enough(parse_sequence(args.sequence, 2 * depth + 1), 2 * depth + 1)
    jf = series_to_jfraction(Series(values, 2 * depth), depth)
    text = "\n".join(
        [
            f"mu0 = {render(jf.mu0)}",
            "alphas: " + ", ".join(render_all(jf.alphas)),
            "betas: " + ", ".join(render_all(jf.betas)),
        ]
    )
    emit(args, text, JFractionPayload.from_jfraction(jf))
    return EXIT_OK


def cmd_prodmat(args: argparse.Namespace) -> int:
    n = _size(args)
    matrix = production_matrix(_pair(args.pair, n, extra=1), n)
    shape = "tridiagonal" if matrix.is_tridiagonal() else f"{matrix.bandwidth()}-diagonal"
    emit(args, f"{matrix.render()}\n({shape})", MatrixPayload.from_matrix(matrix))
    return EXIT_OK


def cmd_family(args: argparse.Namespace) -> int:
    n = _size(args)
    spec = FamilySpec.parse(args.name)
    if spec.kind is FamilyKind.CHEBYSHEV_T:
        matrix = chebyshev_T_array(max(n - 1, 1)).to_matrix(n)
        involution = None
    else:
        pair = spec.pair(max(n - 1, 1))
        matrix = pair.to_matrix(n)
        involution = involution_check(pair, n).holds
    payload = FamilyPayload(name=spec.label, matrix=MatrixPayload.from_matrix(matrix), involution=involution)
    header = spec.label if involution is None else f"{spec.label} (involution: {'yes' if involution else 'no'})"
    emit(args, f"{header}\n{matrix.render()}", payload)
    return EXIT_OK


def cmd_oeis_check(args: argparse.Namespace) -> int:
    anumber = normalize_anumber(args.anumber)
    terms = args.terms
    if terms < 1:
        raise UsageError("--terms must be at least 1")
    expected = OEISClient(cache_dir=args.cache_dir).load(anumber, fetch=args.fetch).values()[args.skip:]
    actual = parse_sequence(args.against, terms)
    mismatch = compare_terms(expected, actual, terms)
    payload = SequencePayload.from_values(actual[:terms])
    if mismatch is None:
        emit(args, f"{anumber}: PASS ({terms} terms)", payload)
        return EXIT_OK
    index, want, got = mismatch
    if want is None:
        emit(args, f"{anumber}: FAIL only {index} comparable terms", payload)
    else:
        emit(args, f"{anumber}: FAIL at index {index}: got {render(got)}, expected {want}", payload)
    return EXIT_FAIL


def cmd_verify_paper(args: argparse.Namespace) -> int:
    report = run_all(prefix=args.only)
    if args.json:
        emit(args, "", report)
    else:
        print("\n".join(report.lines()))
        failure = report.first_failure()
        if failure is not None:
            print(f"first failure {failure.check_id}: {failure.detail}")
    return EXIT_OK if report.all_passed else EXIT_FAIL


COMMANDS: Dict[str, Callable[[argparse.Namespace], int]] = {
    "show": cmd_show,
    "mul": cmd_mul,
    "inv": cmd_inv,
    "apply": cmd_apply,
    "involution": cmd_involution,
    "moments": cmd_moments,
    "hankel": cmd_hankel,
    "jfrac": cmd_jfrac,
    "prodmat": cmd_prodmat,
    "family": cmd_family,
    "oeis-check": cmd_oeis_check,
    "verify-paper": cmd_verify_paper,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="Emit JSON instead of text")
    common.add_argument(
        "--n",
        type=int,
        default=settings.matrix_size,
        help=f"Matrix size (default: {settings.matrix_size})",
    )
    common.add_argument("--log-level", default=None, help="Override LOG_LEVEL for this run")

    parser = argparse.ArgumentParser(
        prog="riordan",
        description="Exact Riordan-array calculus: involutions, moments, Hankel transforms and J-fractions",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("show", parents=[common], help="Print the matrix of a pair or family")
    p.add_argument("pair", help='Pair expression such as "(1/(1-x), x/(1-x))" or a family name')

    p = sub.add_parser("mul", parents=[common], help="Product of two pairs")
    p.add_argument("left")
    p.add_argument("right")

    p = sub.add_parser("inv", parents=[common], help="Inverse of a pair")
    p.add_argument("pair")

    p = sub.add_parser("apply", parents=[common], help="Apply a pair to a series: g * h(f)")
    p.add_argument("pair")
    p.add_argument("series", help='Series expression such as "1/(1-x)"')

    p = sub.add_parser("involution", parents=[common], help="Check that a pair squares to the identity")
    p.add_argument("pair")

    p = sub.add_parser("moments", parents=[common], help="Moment polynomials of a named family")
    p.add_argument("family", help="main-theorem:m, general:a,b or k-theorem:k,m")
    p.add_argument("--count", type=int, default=8, help="Number of moments (default: 8)")

    p = sub.add_parser("hankel", parents=[common], help="Hankel transform of a sequence expression")
    p.add_argument("sequence", help='e.g. "diagsums (c, x*c^3)", "gf c" or "1, 1, 2, 5, 14"')
    p.add_argument("--count", type=int, default=7, help="Number of Hankel terms (default: 7)")

    p = sub.add_parser("jfrac", parents=[common], help="Peel a J-fraction off a sequence")
    p.add_argument("sequence")
    p.add_argument("--depth", type=int, default=5, help="Number of levels (default: 5)")

    p = sub.add_parser("prodmat", parents=[common], help="Production matrix of a pair")
    p.add_argument("pair")

    p = sub.add_parser("family", parents=[common], help="Matrix of a named family")
    p.add_argument("name", help="e.g. general:3,2, rna, corollary:2,1, chebyshev-t")

    p = sub.add_parser("oeis-check", parents=[common], help="Compare a sequence expression with an OEIS b-file")
    p.add_argument("anumber")
    p.add_argument("--against", required=True, help="Sequence expression to compare")
    p.add_argument("--terms", type=int, default=10, help="Terms to compare (default: 10)")
    p.add_argument("--skip", type=int, default=0, help="Drop this many leading b-file terms")
    p.add_argument("--fetch", action="store_true", help="Download the b-file when no fixture exists")
    p.add_argument("--cache-dir", default=None, help=f"Fixture directory (default: {settings.oeis_cache_dir})")

    p = sub.add_parser("verify-paper", parents=[common], help="Run the full reproduction suite")
    p.add_argument("--only", default=None, help="Run only checks whose id starts with this prefix")

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.log_level:
            cli_logger.setLevel(args.log_level.upper())
        cli_logger.debug(f"command {args.command} with {vars(args)}")
        return COMMANDS[args.command](args)
    except (UsageError, ExpressionError) as e:
        return _usage(args, e)
    except RiordanError as e:
        cli_logger.error(f"{args.command} failed: {type(e).__name__}: {e}")
        print(f"riordan {args.command}: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_FAIL
    except ValueError as e:
        return _usage(args, e)


def _usage(args: argparse.Namespace, error: Exception) -> int:
    cli_logger.debug(f"usage error in {args.command}: {error}")
    print(f"riordan {args.command}: error: {error}", file=sys.stderr)
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
