"""Counting LCD skew constacyclic codes of length n = 2k over F_{p^2}.

The codes counted are generated by monic right divisors of degree k of
x^n - 1 or x^n + 1 in F_{p^2}[x; theta], theta the Frobenius, that have no
central right divisor of positive degree. The closed forms factor
x^n -/+ 1 as a polynomial in y = x^2 over F_p; an exhaustive scan of the
divisors serves as the oracle.
"""
from __future__ import annotations

import dataclasses
import enum
import functools
import logging
import math

import galois
import pydantic

from skew_lcd import codes, config, errors, gf, ring_r, skewpoly
from skew_lcd.codes import Inner

settings = config.get_settings()
logger = logging.getLogger(settings.LOGGER_NAME)


class Variant(str, enum.Enum):
    """The four base counts: inner product and sign of x^n -/+ 1."""

    EUCLID_CYCLIC = "euclid-cyclic"
    HERM_CYCLIC = "herm-cyclic"
    EUCLID_NEGA = "euclid-nega"
    HERM_NEGA = "herm-nega"

    @property
    def inner(self) -> Inner:
        return Inner.EUCLIDEAN if self.value.startswith("euclid") else Inner.HERMITIAN

    @property
    def negacyclic(self) -> bool:
        return self.value.endswith("nega")

    @classmethod
    def of(cls, inner: Inner | str, *, negacyclic: bool) -> Variant:
        prefix = "euclid" if Inner(inner) is Inner.EUCLIDEAN else "herm"
        return cls(f"{prefix}-{'nega' if negacyclic else 'cyclic'}")


def parse_variant(text: str) -> Variant:
    try:
        return Variant(text)
    except ValueError:
        message = f"Unknown census variant {text!r}."
        logger.exception(message)
        raise errors.UnsupportedVariantError(message) from None


def census_field(p: int) -> gf.FieldSpec:
    """The field F_{p^2} with its shipped or default modulus."""
    return gf.parse_field(f"GF({p}^2)")


def split_length(p: int, k: int) -> tuple[int, int]:
    """Write k = p^s t with p not dividing t.

    Returns:
        tuple[int, int]: The pair (s, t).
    """
    s = 0
    while k % p == 0:
        k //= p
        s += 1
    return s, k


def reciprocal(f: galois.Poly) -> galois.Poly:
    """The monic reciprocal y^d f(1/y) of a polynomial with f(0) != 0."""
    coeffs = f.coeffs[::-1]
    return galois.Poly(coeffs / coeffs[0])


def format_y(f: galois.Poly) -> str:
    """Display a polynomial over F_p in the variable y = x^2."""
    terms = []
    for degree, c in zip(f.nonzero_degrees, f.nonzero_coeffs, strict=True):
        c = int(c)
        if degree == 0:
            terms.append(str(c))
            continue
        monomial = "y" if degree == 1 else f"y^{degree}"
        terms.append(monomial if c == 1 else f"{c}*{monomial}")
    return "+".join(terms) or "0"


@dataclasses.dataclass(frozen=True)
class FactorClasses:
    """Irreducible factors of y^k -/+ 1 over F_p, sorted into classes.

    Attributes:
        p: The characteristic.
        k: Half the length.
        s: The exponent with k = p^s t.
        t: The part of k prime to p.
        negacyclic: Whether the modulus is y^k + 1.
        linear_part: The self-reciprocal factors y - 1 and y + 1.
        ir_part: Self-reciprocal irreducible factors of degree above one.
        red_part: Pairs (f, f^rec) of distinct reciprocal irreducibles.
    """

    p: int
    k: int
    s: int
    t: int
    negacyclic: bool
    linear_part: tuple[galois.Poly, ...]
    ir_part: tuple[galois.Poly, ...]
    red_part: tuple[tuple[galois.Poly, galois.Poly], ...]

    @property
    def multiplicity(self) -> int:
        return self.p**self.s

    @property
    def modulus(self) -> galois.Poly:
        field = galois.GF(self.p)
        sign = 1 if self.negacyclic else self.p - 1
        return galois.Poly.Degrees([self.k, 0], field([1, sign]))

    def reconstruct(self) -> galois.Poly:
        """The product of every classified factor to the power p^s."""
        product = galois.Poly.One(galois.GF(self.p))
        factors = [*self.linear_part, *self.ir_part]
        factors += [f * g for f, g in self.red_part]
        for f in factors:
            product *= f**self.multiplicity
        return product

    def ir_term(self) -> int:
        """Product over F_ir of (p^d - p^{d/2}) p^{d(p^s - 1)}, d the degree in y."""
        p, ps = self.p, self.multiplicity
        return math.prod(
            (p**f.degree - p ** (f.degree // 2)) * p ** (f.degree * (ps - 1))
            for f in self.ir_part
        )

    def red_term(self) -> int:
        """Product over F_red of (1 + p^{d/2}) p^{(2p^s - 1) d / 2}.

        Here d is the degree in y.
        """
        p, ps = self.p, self.multiplicity
        terms = []
        for f, g in self.red_part:
            half = (f.degree + g.degree) // 2
            terms.append((1 + p**half) * p ** ((2 * ps - 1) * half))
        return math.prod(terms)

    def to_dict(self) -> dict[str, object]:
        return {
            "F_ir": [{"poly": format_y(f), "deg": f.degree} for f in self.ir_part],
            "F_red": [
                {
                    "poly": format_y(f * g),
                    "deg": f.degree + g.degree,
                    "halves": [format_y(f), format_y(g)],
                }
                for f, g in self.red_part
            ],
            "linear": [format_y(f) for f in self.linear_part],
        }


@functools.lru_cache(maxsize=None)
def factor_classes(p: int, k: int, *, negacyclic: bool) -> FactorClasses:
    """Factor y^k -/+ 1 over F_p by trial division and classify the factors.

    Since y^k -/+ 1 = (y^t -/+ 1)^{p^s} with y^t -/+ 1 squarefree, only the
    squarefree part is factored.

    Args:
        p: The characteristic.
        k: Half the length.
        negacyclic: Factor y^k + 1 instead of y^k - 1.

    Returns:
        FactorClasses: The classified factors.
    """
    if not galois.is_prime(p):
        message = f"The characteristic {p} is not a prime."
        logger.exception(message)
        raise errors.NotPrimeError(message)
    s, t = split_length(p, k)
    field = galois.GF(p)
    sign = 1 if negacyclic else p - 1
    remaining = galois.Poly.Degrees([t, 0], field([1, sign]))
    zero = galois.Poly.Zero(field)
    irreducibles = []
    degree = 1
    while remaining.degree > 0:
        if 2 * degree > remaining.degree:
            irreducibles.append(remaining)
            break
        for candidate in galois.irreducible_polys(p, degree):
            while remaining.degree >= degree and remaining % candidate == zero:
                remaining //= candidate
                irreducibles.append(candidate)
        degree += 1

    linear, ir, red = [], [], []
    seen: set[str] = set()
    for f in irreducibles:
        partner = reciprocal(f)
        if partner == f:
            (linear if f.degree == 1 else ir).append(f)
        elif str(f) not in seen:
            red.append((f, partner))
            seen.add(str(partner))
        seen.add(str(f))
    logger.debug("Classified the factors of y^%s -/+ 1 over F_%s.", k, p)
    return FactorClasses(
        p,
        k,
        s,
        t,
        negacyclic,
        tuple(linear),
        tuple(ir),
        tuple(red),
    )


def base_factor(p: int, k: int, variant: Variant) -> int:
    """The leading factor N of a base count.

    In characteristic two x^n + 1 = x^n - 1, so the negacyclic variants take
    the cyclic values, N3 = N1 and N4 = N2, also for even k. The exhaustive
    census agrees at (p, n) = (2, 4), where N3 = 1 would undercount.

    Args:
        p: The characteristic.
        k: Half the length.
        variant: The count.

    Returns:
        int: The factor N1, N2, N3 or N4.
    """
    s, _ = split_length(p, k)
    ps = p**s
    if p == 2:  # noqa: PLR2004
        return 2**ps if variant.inner is Inner.EUCLIDEAN else 0
    even = k % 2 == 0
    match variant:
        case Variant.EUCLID_CYCLIC:
            if even:
                return p ** (2 * (ps - 1)) * (p**2 - 1)
            return p ** (ps - 1) * (p - (-1) ** ((p + 1) // 2))
        case Variant.HERM_CYCLIC:
            return 0 if even else p ** (ps - 1) * (p + 1)
        case Variant.EUCLID_NEGA:
            return 1 if even else p ** (ps - 1) * (p - (-1) ** ((p - 1) // 2))
        case Variant.HERM_NEGA:
            return 1 if even else 0
    message = f"Unknown census variant {variant!r}."
    logger.exception(message)
    raise errors.UnsupportedVariantError(message)


def _check_length(n: int) -> int:
    if n < 2 or n % 2:  # noqa: PLR2004
        message = f"The length {n} is not a positive even integer."
        logger.exception(message)
        raise errors.UnsupportedVariantError(message)
    return n // 2


def products(p: int, n: int, *, negacyclic: bool) -> int:
    """The F_ir and F_red products for x^n -/+ 1."""
    classes = factor_classes(p, _check_length(n), negacyclic=negacyclic)
    return classes.ir_term() * classes.red_term()


def base_count(p: int, n: int, variant: Variant | str) -> int:
    """Closed-form count of LCD skew (nega)cyclic codes of dimension n/2.

    Args:
        p: The characteristic.
        n: The even length.
        variant: The count.

    Returns:
        int: The count.
    """
    variant = parse_variant(variant) if isinstance(variant, str) else variant
    k = _check_length(n)
    return base_factor(p, k, variant) * products(p, n, negacyclic=variant.negacyclic)


def r_count(p: int, n: int, kind: str, inner: Inner | str) -> int:
    """Closed-form count of LCD skew lambda-constacyclic codes over F_{p^2}+vF_{p^2}.

    The v side carries x^n - (alpha + beta) and the (1 - v) side x^n - alpha.

    Args:
        p: The characteristic.
        n: The even length.
        kind: The constant lambda, "1", "-1" or "1-2v".
        inner: The inner product.

    Returns:
        int: The count.
    """
    inner = Inner(inner)
    ring_r.r_lambda(census_field(p), kind)
    cyclic = base_count(p, n, Variant.of(inner, negacyclic=False))
    nega = base_count(p, n, Variant.of(inner, negacyclic=True))
    match kind:
        case "1":
            return cyclic**2
        case "-1":
            if inner is Inner.HERMITIAN:
                k = _check_length(n)
                squared = products(p, n, negacyclic=True) ** 2
                return base_factor(p, k, Variant.HERM_NEGA) * squared
            return nega**2
    return cyclic * nega


def brute_force_census(
    p: int,
    n: int,
    variant: Variant | str,
    budget: int | None = None,
    threads: int | None = None,
) -> int:
    """Count by scanning every monic degree n/2 right divisor of x^n -/+ 1.

    Args:
        p: The characteristic.
        n: The even length.
        variant: The count.
        budget: Largest number of candidate generators to visit.
        threads: Number of worker processes for the divisor scan.

    Returns:
        int: The number of LCD codes without central divisors.
    """
    variant = parse_variant(variant) if isinstance(variant, str) else variant
    budget = settings.CENSUS_BUDGET if budget is None else budget
    k = _check_length(n)
    ring = skewpoly.skew_ring(census_field(p), 1)
    modulus = ring.modulus(n, -1 if variant.negacyclic else 1)
    count = 0
    for g in skewpoly.right_divisors(modulus, k, budget, threads):
        if skewpoly.has_central_divisor(g):
            continue
        code = codes.from_generator_poly(modulus, g)
        if codes.lcd_by_gcrd(code, variant.inner):
            count += 1
    logger.debug("Oracle count for %s at p=%s, n=%s: %s.", variant.value, p, n, count)
    return count


def brute_force_r_census(
    p: int,
    n: int,
    kind: str,
    inner: Inner | str,
    budget: int | None = None,
    threads: int | None = None,
) -> int:
    """The R-level oracle, the product of the two component counts."""

    ring_r.r_lambda(census_field(p), kind)
    lam1, lam2 = {"1": (False, False), "-1": (True, True), "1-2v": (True, False)}[kind]
    first = brute_force_census(
        p, n, Variant.of(inner, negacyclic=lam1), budget, threads
    )
    second = brute_force_census(
        p, n, Variant.of(inner, negacyclic=lam2), budget, threads
    )
    return first * second


class CensusReport(pydantic.BaseModel):
    """Outcome of a census run.

    Attributes:
        p: The characteristic.
        n: The length.
        s: The exponent with n/2 = p^s t.
        t: The part of n/2 prime to p.
        variant: The base variant, or "R:<lambda>:<inner>" for R-level counts.
        formula_count: The closed-form count.
        oracle_count: The brute-force count, when requested.
        agrees: Whether the two counts agree, when the oracle ran.
        factor_classes: The factor classes of x^n - 1 and x^n + 1.
    """

    p: int
    n: int
    s: int
    t: int
    variant: str
    formula_count: int
    oracle_count: int | None = None
    agrees: bool | None = None
    factor_classes: dict[str, dict[str, object]] = pydantic.Field(default_factory=dict)


def census(
    p: int,
    n: int,
    variant: str,
    inner: Inner | str | None = None,
    *,
    oracle: bool = False,
    budget: int | None = None,
    threads: int | None = None,
) -> CensusReport:
    """Run a base or R-level census and optionally confirm it by exhaustion.

    Args:
        p: The characteristic.
        n: The even length.
        variant: A base variant, or a lambda kind "1", "-1" or "1-2v".
        inner: The inner product of an R-level count.
        oracle: Also run the brute-force count.
        budget: Largest number of candidates per scan.
        threads: Number of worker processes.

    Returns:
        CensusReport: The report.
    """
    k = _check_length(n)
    s, t = split_length(p, k)
    classes = {
        "cyclic": factor_classes(p, k, negacyclic=False).to_dict(),
        "negacyclic": factor_classes(p, k, negacyclic=True).to_dict(),
    }
    if variant in {v.value for v in Variant}:
        label = variant
        formula = base_count(p, n, variant)
        oracle_count = (
            brute_force_census(p, n, variant, budget, threads) if oracle else None
        )
    else:
        inner = Inner(inner or Inner.EUCLIDEAN)
        label = f"R:{variant}:{inner.value}"
        formula = r_count(p, n, variant, inner)
        oracle_count = (
            brute_force_r_census(p, n, variant, inner, budget, threads)
            if oracle
            else None
        )
    report = CensusReport(
        p=p,
        n=n,
        s=s,
        t=t,
        variant=label,
        formula_count=formula,
        oracle_count=oracle_count,
        agrees=None if oracle_count is None else oracle_count == formula,
        factor_classes=classes,
    )
    if report.agrees is False:
        logger.warning(
            "Formula count %s and oracle count %s disagree for %s.",
            formula,
            oracle_count,
            label,
        )
    return report
