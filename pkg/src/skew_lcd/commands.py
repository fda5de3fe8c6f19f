"""The sub-commands of the command line interface.

Each command takes the parsed arguments, writes its table to stdout and
returns the exit status.
"""
import argparse
import itertools
import logging
import sys
from collections.abc import Callable

import pandas as pd

from skew_lcd import census, codes, config, errors, gf, io, ring_r, skewpoly, tables
from skew_lcd.codes import Inner

settings = config.get_settings()
logger = logging.getLogger(settings.LOGGER_NAME)

FACTOR_COLUMNS = ["degree", "divisor", "cofactor", "k", "euclidean", "hermitian"]
LCD_COLUMNS = ["component", "lambda", "generator", "k", "gcrd", "hull", "lcd"]


def output_format(args: argparse.Namespace) -> io.TableFormat:
    if args.json:
        return "json"
    if args.csv:
        return "csv"
    return "text"


def emit(text: str) -> None:
    sys.stdout.write(text.rstrip("\n") + "\n")


def _ring(args: argparse.Namespace) -> skewpoly.SkewPolyRing:
    return skewpoly.skew_ring(gf.parse_field(args.field), args.r)


def _ring_lambda(
    args: argparse.Namespace, field: gf.FieldSpec
) -> tuple[gf.FieldElem, gf.FieldElem]:
    """(alpha, beta) from --alpha/--beta, else from --lambda read as a + v b."""
    if args.alpha is not None:
        return field(args.alpha), field(args.beta)
    lam = ring_r.parse_ring_element(field, args.lam)
    return lam.a, lam.b


def cmd_factor(args: argparse.Namespace) -> int:
    """List the monic right divisors of x^n - lambda with cofactors and LCD verdicts."""
    ring = _ring(args)
    modulus = ring.modulus(args.n, ring.field(args.lam))
    max_deg = args.n if args.max_deg is None else args.max_deg
    logger.info("Factoring %s up to degree %s.", modulus.poly, max_deg)
    rows = []
    for g in skewpoly.right_divisors_all(modulus, max_deg, args.budget, args.threads):
        code = codes.from_generator_poly(modulus, g)
        rows.append(
            {
                "degree": g.degree,
                "divisor": str(g),
                "cofactor": str(code.h),
                "k": code.k,
                **codes.lcd_verdicts(code, codes.is_skew_lcd),
            },
        )
    frame = pd.DataFrame(rows, columns=FACTOR_COLUMNS)
    emit(io.write_table(frame, output_format(args)))
    return 0


def _component_row(
    name: str, code: codes.SkewConstaCode, inner: Inner
) -> dict[str, object]:
    certificate = codes.lcd_certificate(code, inner)
    return {
        "component": name,
        "lambda": str(code.lam),
        "generator": str(code.g),
        "k": code.k,
        "gcrd": str(certificate),
        "hull": codes.hull_dim(code.base, inner),
        "lcd": codes.is_skew_lcd(code, inner),
    }


def cmd_lcd_check(args: argparse.Namespace) -> int:
    """Decide LCD-ness; a gcrd other than 1 is printed as the failure certificate.

    With --json the code itself is written as a record instead of the table.
    """
    ring = _ring(args)
    inner = Inner(args.inner)
    fmt = output_format(args)
    if args.g is not None:
        modulus = ring.modulus(args.n, ring.field(args.lam))
        code = codes.from_generator_poly(modulus, ring.parse(args.g))
        if fmt == "json":
            record = io.code_record(code, args.wmax)
            emit(record.model_dump_json(indent=4, by_alias=True))
            return 0
        rows = [_component_row("C", code, inner)]
    else:
        alpha, beta = _ring_lambda(args, ring.field)
        g1, g2 = ring.parse(args.g1), ring.parse(args.g2)
        code = ring_r.r_code(ring, args.n, alpha, beta, g1, g2)
        if fmt == "json":
            emit(io.r_code_record(code, args.wmax).model_dump_json(indent=4))
            return 0
        image = code.gray_image()
        rows = [
            _component_row("C1", code.c1, inner),
            _component_row("C2", code.c2, inner),
            {
                "component": "Gray image",
                "lambda": str(code.lam),
                "generator": f"{code.g1}, {code.g2}",
                "k": image.k,
                "gcrd": "",
                "hull": codes.hull_dim(image, inner),
                "lcd": ring_r.r_is_lcd(code, inner),
            },
        ]
    emit(io.write_table(pd.DataFrame(rows, columns=LCD_COLUMNS), fmt))
    return 0


def cmd_tables(args: argparse.Namespace) -> int:
    """Recompute tables; any mismatching row raises after the table is written."""
    names = tables.TABLE_NAMES if args.which == "all" else (args.which,)
    checks = [tables.check_table(name, args.wmax) for name in names]
    frame = pd.concat([check.to_frame() for check in checks], ignore_index=True)
    emit(io.write_table(frame, output_format(args)))
    for check in checks:
        check.raise_for_mismatches()
    return 0


def cmd_census(args: argparse.Namespace) -> int:
    """Closed-form count, optionally confirmed by the exhaustive oracle."""
    report = census.census(
        args.p,
        args.n,
        args.variant or args.lam,
        args.inner,
        oracle=args.oracle,
        budget=args.budget,
        threads=args.threads,
    )
    fmt = output_format(args)
    if fmt == "json":
        emit(report.model_dump_json(indent=4))
    else:
        frame = pd.DataFrame([report.model_dump(exclude={"factor_classes"})])
        emit(io.write_table(frame, fmt))
    return 1 if report.agrees is False else 0


def _divisors(
    modulus: skewpoly.ConstaModulus,
    degrees: range,
    args: argparse.Namespace,
) -> list[skewpoly.SkewPoly]:
    return list(
        itertools.chain.from_iterable(
            skewpoly.right_divisors(modulus, d, args.budget, args.threads)
            for d in degrees
        ),
    )


def cmd_search(args: argparse.Namespace) -> int:
    """Sweep generator pairs, keep the LCD codes and append them to the catalog."""
    ring = _ring(args)
    inner = Inner(args.inner)
    alpha, beta = _ring_lambda(args, ring.field)
    degrees = range(args.min_deg, args.max_deg + 1)
    first = _divisors(ring.modulus(args.n, alpha + beta), degrees, args)
    second = _divisors(ring.modulus(args.n, alpha), degrees, args)
    logger.info("Sweeping %s generator pairs.", len(first) * len(second))

    entries = []
    for g1, g2 in itertools.product(first, second):
        code = ring_r.r_code(ring, args.n, alpha, beta, g1, g2)
        if code.c1.k + code.c2.k == 0:
            continue
        verdicts = codes.lcd_verdicts(code, ring_r.r_is_lcd)
        lcd = verdicts[inner.value]
        if lcd is None:
            lcd = codes.is_lcd_matrix(code.gray_image(), inner)
        if lcd:
            entries.append(io.catalog_entry(code, verdicts, args.wmax))
    entries.sort(key=lambda entry: entry.sort_key)
    logger.info("Found %s LCD codes.", len(entries))

    if entries:
        catalog = io.append_entries(io.load_catalog(args.catalog), entries)
        io.save_catalog(args.catalog, catalog)
    frame = pd.DataFrame(
        [entry.model_dump(exclude={"timestamp", "lcd", "digest"}) for entry in entries],
    )
    emit(io.write_table(frame, output_format(args)))
    return 0


COMMANDS: dict[str, Callable[[argparse.Namespace], int]] = {
    "factor": cmd_factor,
    "lcd-check": cmd_lcd_check,
    "tables": cmd_tables,
    "census": cmd_census,
    "search": cmd_search,
}


def run(args: argparse.Namespace) -> int:
    """Run a command and map domain errors to exit statuses.

    Args:
        args: The parsed arguments.

    Returns:
        int: 0 on success, 1 on a mismatch and 2 on any other domain error.
    """
    try:
        return COMMANDS[args.command](args)
    except (errors.RowMismatchError, errors.CriterionMismatchError):
        return 1
    except errors.SkewLcdError:
        return 2
