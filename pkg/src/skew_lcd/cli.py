"""Command line interface for the skew LCD code toolkit."""
import argparse
import logging
import pathlib

from skew_lcd import census, config, ring_r, tables
from skew_lcd.codes import Inner

settings = config.get_settings()
logger = logging.getLogger(settings.LOGGER_NAME)


def _output_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(add_help=False)
    formats = parser.add_mutually_exclusive_group()
    formats.add_argument(
        "--json",
        action="store_true",
        help="Write the output as JSON records.",
    )
    formats.add_argument(
        "--csv",
        action="store_true",
        help="Write the output as CSV.",
    )
    parser.add_argument(
        "-v",
        "--verbosity",
        default=None,
        type=lambda x: logging.getLevelName(x.upper()),
        help="Change output verbosity. Follows the same format as the Python logging "
        "module. Values may also be supplied as 'debug', 'info', 'warning', 'error', "
        "or 'critical'. This primarily intended for developer usage.",
        choices=[10, 20, 30, 40, 50],
    )
    return parser


def _code_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument(
        "--field",
        default="GF(2^2)",
        help="The field F_q as 'GF(p^t)', or 'GF(p^t; m0,...,mt)' with a modulus.",
    )
    parser.add_argument(
        "--r",
        default=1,
        type=int,
        help="The automorphism is the r-th power of the Frobenius map.",
    )
    parser.add_argument(
        "--n",
        required=True,
        type=int,
        help="The code length.",
    )
    return parser


def _scan_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument(
        "--budget",
        default=None,
        type=int,
        help="Largest number of candidates per scan; defaults to the settings.",
    )
    parser.add_argument(
        "--threads",
        default=settings.THREADS,
        type=int,
        help="Number of worker processes for divisor scans.",
    )
    parser.add_argument(
        "--wmax",
        default=settings.WEIGHT_LIMIT,
        type=int,
        help="Largest weight of the bounded minimum distance search.",
    )
    return parser


def _inner_argument(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--inner",
        default=Inner.EUCLIDEAN.value,
        type=str.lower,
        choices=[inner.value for inner in Inner],
        help="The inner product.",
    )


def build_parser() -> argparse.ArgumentParser:
    """Build the parser with one sub-command per task.

    Returns:
        argparse.ArgumentParser: The parser.
    """
    output, code, scan = _output_parser(), _code_parser(), _scan_parser()
    parser = argparse.ArgumentParser(
        description="Skew LCD: skew constacyclic and LCD codes over F_q and F_q+vF_q.",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    factor = subparsers.add_parser(
        "factor",
        parents=[code, scan, output],
        help="List the monic right divisors of x^n - lambda with their cofactors.",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    factor.add_argument(
        "--lambda",
        dest="lam",
        default="1",
        help="The constant lambda.",
    )
    factor.add_argument(
        "--max-deg",
        default=None,
        type=int,
        help="Largest divisor degree; defaults to n.",
    )

    lcd_check = subparsers.add_parser(
        "lcd-check",
        parents=[code, scan, output],
        help="Decide whether a skew constacyclic code is LCD.",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    lcd_check.add_argument(
        "--lambda",
        dest="lam",
        default="1",
        help="The constant lambda in F_q+vF_q, e.g. '1-2*v' with two generators.",
    )
    lcd_check.add_argument("--alpha", default=None, help="The constant part of lambda.")
    lcd_check.add_argument("--beta", default="0", help="The v part of lambda.")
    lcd_check.add_argument("--g", default=None, help="The generator over F_q.")
    lcd_check.add_argument(
        "--g1",
        default=None,
        help="The generator of the v-side component.",
    )
    lcd_check.add_argument(
        "--g2",
        default=None,
        help="The generator of the (1 - v)-side component.",
    )
    _inner_argument(lcd_check)

    table = subparsers.add_parser(
        "tables",
        parents=[scan, output],
        help="Recompute the published tables and compare them row by row.",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    table.add_argument(
        "which",
        nargs="?",
        default="all",
        choices=[*tables.TABLE_NAMES, "all"],
        help="The table to recompute.",
    )

    counts = subparsers.add_parser(
        "census",
        parents=[scan, output],
        help="Count LCD skew cyclic and negacyclic codes over F_{p^2}.",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    counts.add_argument("--p", required=True, type=int, help="The characteristic.")
    counts.add_argument("--n", required=True, type=int, help="The even code length.")
    kinds = counts.add_mutually_exclusive_group(required=True)
    kinds.add_argument(
        "--variant",
        type=str.lower,
        choices=[variant.value for variant in census.Variant],
        help="Count codes over F_{p^2}.",
    )
    kinds.add_argument(
        "--lambda",
        dest="lam",
        choices=list(ring_r.LAMBDA_KINDS),
        help="Count codes over F_{p^2}+vF_{p^2} for this lambda.",
    )
    _inner_argument(counts)
    counts.add_argument(
        "--oracle",
        action="store_true",
        help="Confirm the closed form by exhaustive search.",
    )

    search = subparsers.add_parser(
        "search",
        parents=[code, scan, output],
        help="Sweep generator pairs over F_q+vF_q and catalog the LCD codes found.",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    search.add_argument(
        "--lambda",
        dest="lam",
        default="1",
        help="The constant lambda, an element of F_q+vF_q.",
    )
    search.add_argument("--alpha", default=None, help="The constant part of lambda.")
    search.add_argument("--beta", default="0", help="The v part of lambda.")
    search.add_argument(
        "--min-deg",
        default=0,
        type=int,
        help="Smallest generator degree.",
    )
    search.add_argument(
        "--max-deg",
        default=1,
        type=int,
        help="Largest generator degree.",
    )
    search.add_argument(
        "--catalog",
        default=settings.CATALOG_PATH,
        type=pathlib.Path,
        help="The JSON catalog new entries are appended to.",
    )
    _inner_argument(search)
    return parser


def parse_arguments() -> argparse.Namespace:
    """Parse command line arguments for the skew LCD code toolkit.

    Returns:
        argparse.Namespace: The parsed arguments.
    """
    logger.info("Parsing Arguments")
    parser = build_parser()
    args = parser.parse_args()
    if args.command == "lcd-check" and args.g is None and None in (args.g1, args.g2):
        parser.error("lcd-check needs --g, or both --g1 and --g2.")
    logger.debug("Arguments parsed: %s", args)
    return args
