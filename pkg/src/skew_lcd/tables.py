"""Published example tables, recomputed from scratch and compared row by row."""
from __future__ import annotations

import dataclasses
import logging
from collections.abc import Callable

import pandas as pd

from skew_lcd import codes, config, errors, gf, ring_r, skewpoly
from skew_lcd.codes import Inner

settings = config.get_settings()
logger = logging.getLogger(settings.LOGGER_NAME)

TABLE_NAMES = ("1", "2", "3", "examples")

# Skew w^5-constacyclic codes of length 4 over F_16 equivalent to <x^2+w*x+w^6>.
SCALED_W5 = {
    "field": "GF(2^4)",
    "r": 2,
    "n": 4,
    "source": "x^2+w*x+w^6",
    "lambda": "w^5",
    "roots": ("w^2", "w^5", "w^8", "w^11", "w^14"),
    "rows": (
        ("w^2", "x^2+w^9*x+w"),
        ("w^5", "x^2+w^6*x+w"),
        ("w^8", "x^2+w^3*x+w"),
        ("w^11", "x^2+x+w"),
        ("w^14", "x^2+w^12*x+w"),
    ),
}

# Skew cyclic codes of length 4 over F_16 equivalent to <x+w^3>.
SCALED_CYCLIC = {
    "field": "GF(2^4)",
    "r": 2,
    "n": 4,
    "source": "x+w^3",
    "lambda": "1",
    "roots": ("1", "w^3", "w^6", "w^9", "w^12"),
    "rows": (
        ("1", "x+w^3"),
        ("w^3", "x+w^6"),
        ("w^6", "x+w^9"),
        ("w^9", "x+w^12"),
        ("w^12", "x+1"),
    ),
}

# Gray images of Euclidean LCD skew cyclic codes over F_4+vF_4: (label, n, g1, g2).
GRAY_IMAGES = (
    ("[12,10,2]", 6, "x+w^2", "x+w"),
    ("[20,18,2]", 10, "x+w^2", "x+w^2"),
    ("[28,25,2]", 14, "x+w", "x^2+1"),
    ("[28,26,2]", 14, "x+w", "x+w"),
    ("[36,33,2]", 18, "x+w", "x^2+w*x+1"),
    ("[36,33,2]", 18, "x+w^2", "x^2+w^2*x+1"),
    ("[36,34,2]", 18, "x+w^2", "x+w"),
)

# Factorizations x^n - lambda = left * right: (field, r, n, lambda, left, right).
FACTORIZATIONS = (
    ("GF(2^4)", 2, 4, "1", "x^2+w*x+w^9", "x^2+w*x+w^6"),
    ("GF(2^4)", 2, 4, "1", "x^3+w^12*x^2+x+w^12", "x+w^3"),
    ("GF(3^2)", 1, 10, "1", "x^4+w*x^2+1", "x^6+w^5*x^4+w*x^2+2"),
    ("GF(3^2)", 1, 10, "1", "x^4+w^3*x^2+1", "x^6+w^7*x^4+w^3*x^2+2"),
    ("GF(3^2)", 1, 10, "1", "x^4+2*x^2+w*x+w^2", "x^6+x^4+w^5*x^3+w^5*x^2+w*x+w^2"),
    ("GF(3^2)", 1, 10, "1", "x^4+2*x^2+w^5*x+w^6", "x^6+x^4+w*x^3+w^7*x^2+w^5*x+w^6"),
    ("GF(3^2)", 1, 10, "-1", "x^4+w^5*x^2+1", "x^6+w*x^4+w*x^2+1"),
    ("GF(3^2)", 1, 10, "-1", "x^4+w^7*x^2+1", "x^6+w^3*x^4+w^3*x^2+1"),
    ("GF(3^2)", 1, 10, "-1", "x^4+x^2+2*x+w^6", "x^6+2*x^4+x^3+w^7*x^2+x+w^2"),
    (
        "GF(3^2)",
        1,
        10,
        "-1",
        "x^4+x^2+w^6*x+w^2",
        "x^6+2*x^4+w^2*x^3+w^5*x^2+w^2*x+w^6",
    ),
)

# LCD codes over F_9+vF_9 of length 10: (label, lambda, inner, g1, g2).
LCD_CODES = (
    ("euclidean cyclic", "1", Inner.EUCLIDEAN, "x^6+w^7*x^4+w^3*x^2+2", "x^4+w*x^2+1"),
    (
        "hermitian cyclic",
        "1",
        Inner.HERMITIAN,
        "x^4+2*x^2+w^5*x+w^6",
        "x^4+2*x^2+w*x+w^2",
    ),
    (
        "euclidean negacyclic",
        "-1",
        Inner.EUCLIDEAN,
        "x^6+w^3*x^4+w^3*x^2+1",
        "x^6+w*x^4+w*x^2+1",
    ),
    (
        "hermitian negacyclic",
        "-1",
        Inner.HERMITIAN,
        "x^6+2*x^4+x^3+w^7*x^2+x+w^2",
        "x^6+2*x^4+w^2*x^3+w^5*x^2+w^2*x+w^6",
    ),
)


@dataclasses.dataclass(frozen=True)
class TableRow:
    """One recomputed row.

    Attributes:
        label: What the row is about.
        expected: The published value.
        actual: The recomputed value.
        ok: Whether the two agree.
    """

    label: str
    expected: str
    actual: str
    ok: bool


@dataclasses.dataclass(frozen=True)
class TableCheck:
    """Outcome of recomputing a table.

    Attributes:
        which: The table name.
        rows: The recomputed rows.
    """

    which: str
    rows: tuple[TableRow, ...]

    @property
    def mismatches(self) -> tuple[TableRow, ...]:
        return tuple(row for row in self.rows if not row.ok)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def to_frame(self) -> pd.DataFrame:
        frame = pd.DataFrame([dataclasses.asdict(row) for row in self.rows])
        frame.insert(0, "table", self.which)
        return frame

    def raise_for_mismatches(self) -> None:
        if self.ok:
            return
        details = "; ".join(
            f"{row.label}: expected {row.expected}, got {row.actual}"
            for row in self.mismatches
        )
        count = len(self.mismatches)
        message = f"Table {self.which} has {count} mismatching rows: {details}"
        logger.exception(message)
        raise errors.RowMismatchError(message)


def _row(label: str, expected: str, compute: Callable[[], str]) -> TableRow:
    try:
        actual = compute()
    except errors.SkewLcdError as error:
        actual = f"error: {error}"
    return TableRow(label, expected, actual, actual == expected)


def _format_set(elements: set[gf.FieldElem]) -> str:
    ordered = sorted(elements, key=lambda e: e.owner.log(e.value))
    return "{" + ",".join(str(e) for e in ordered) + "}"


def _scaled_rows(fixture: dict) -> list[TableRow]:
    field = gf.parse_field(fixture["field"])
    ring = skewpoly.skew_ring(field, fixture["r"])
    n = fixture["n"]
    source = codes.from_generator_poly(
        ring.modulus(n, 1), ring.parse(fixture["source"])
    )
    lam = field.parse_element(fixture["lambda"])
    expected_roots = {field.parse_element(text) for text in fixture["roots"]}
    rows = [
        _row(
            f"roots of {lam}",
            _format_set(expected_roots),
            lambda: _format_set(codes.lambda_roots(field, fixture["r"], n, lam)),
        ),
    ]
    for delta_text, generator_text in fixture["rows"]:
        delta = field.parse_element(delta_text)
        expected = str(ring.parse(generator_text))

        def compute(delta: gf.FieldElem = delta) -> str:
            image = codes.scale_equivalence(source, delta)
            if image.lam != lam or not codes.is_closed_under_shift(image):
                return f"{image.g} (lambda {image.lam})"
            return str(image.g)

        rows.append(_row(f"delta={delta}", expected, compute))
    return rows


def _gray_rows(w_max: int) -> list[TableRow]:
    field = gf.parse_field("GF(2^2)")
    ring = skewpoly.skew_ring(field, 1)
    rows = []
    for label, n, g1_text, g2_text in GRAY_IMAGES:

        def compute(n: int = n, g1_text: str = g1_text, g2_text: str = g2_text) -> str:
            g1, g2 = ring.parse(g1_text), ring.parse(g2_text)
            code = ring_r.r_code(ring, n, 1, 0, g1, g2)
            params = ring_r.gray_params(code, w_max)
            verdict = "LCD" if ring_r.r_is_lcd(code, Inner.EUCLIDEAN) else "not LCD"
            return f"{params} {verdict}"

        rows.append(_row(f"n={n} g1={g1_text} g2={g2_text}", f"{label} LCD", compute))
    return rows


def _example_rows() -> list[TableRow]:
    rows = []
    for field_text, r, n, lam_text, left_text, right_text in FACTORIZATIONS:
        ring = skewpoly.skew_ring(gf.parse_field(field_text), r)
        modulus = ring.modulus(n, ring.field.parse_element(lam_text))
        left, right = ring.parse(left_text), ring.parse(right_text)

        def compute(
            modulus: skewpoly.ConstaModulus = modulus,
            left: skewpoly.SkewPoly = left,
            right: skewpoly.SkewPoly = right,
        ) -> str:
            if skewpoly.cofactor(right, modulus) != left:
                return f"cofactor {skewpoly.cofactor(right, modulus)}"
            return str(skewpoly.skew_mul(left, right))

        rows.append(_row(f"({left})({right})", str(modulus.poly), compute))

    ring = skewpoly.skew_ring(gf.parse_field("GF(3^2)"), 1)
    for label, lam_text, inner, g1_text, g2_text in LCD_CODES:

        def compute_lcd(
            lam_text: str = lam_text,
            inner: Inner = inner,
            g1_text: str = g1_text,
            g2_text: str = g2_text,
        ) -> str:
            g1, g2 = ring.parse(g1_text), ring.parse(g2_text)
            code = ring_r.r_code(ring, 10, lam_text, 0, g1, g2)
            lcd = ring_r.r_is_lcd(code, inner)
            hull = ring_r.r_hull_dim(code, inner)
            return f"LCD={lcd} hull={hull}"

        rows.append(_row(label, "LCD=True hull=0", compute_lcd))

    field16 = gf.parse_field("GF(2^4)")
    ring16 = skewpoly.skew_ring(field16, 2)

    def compute_r_scale() -> str:
        g1, g2 = ring16.parse("x+w^3"), ring16.parse("x^2+w*x+w^6")
        cyclic = ring_r.r_code(ring16, 4, 1, 0, g1, g2)
        image = ring_r.r_scale_equivalence(
            cyclic,
            field16.parse_element("w^2"),
            field16.parse_element("w^3"),
        )
        return f"alpha={image.alpha} beta={image.beta} g1={image.g1} g2={image.g2}"

    rows.append(
        _row(
            "w^5+v*w^10-constacyclic image of a cyclic code",
            "alpha=w^5 beta=w^10 g1=x+w^6 g2=x^2+w^9*x+w",
            compute_r_scale,
        ),
    )
    return rows


def check_table(which: str, w_max: int | None = None) -> TableCheck:
    """Recompute a published table.

    Args:
        which: One of "1", "2", "3" and "examples".
        w_max: Largest weight of the bounded distance search for table 3.

    Returns:
        TableCheck: The recomputed rows.
    """
    w_max = settings.WEIGHT_LIMIT if w_max is None else w_max
    logger.info("Recomputing table %s.", which)
    match which:
        case "1":
            rows = _scaled_rows(SCALED_W5)
        case "2":
            rows = _scaled_rows(SCALED_CYCLIC)
        case "3":
            rows = _gray_rows(w_max)
        case "examples":
            rows = _example_rows()
        case _:
            message = f"Unknown table {which!r}, expected one of {TABLE_NAMES}."
            logger.exception(message)
            raise errors.UnsupportedVariantError(message)
    check = TableCheck(which, tuple(rows))
    for row in check.mismatches:
        logger.warning(
            "Table %s row %s: expected %s, got %s.",
            which,
            row.label,
            row.expected,
            row.actual,
        )
    return check
