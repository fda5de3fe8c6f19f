"""Skew polynomials F_q[x; theta_r] with (a x^i)(b x^j) = a theta^i(b) x^{i+j}."""
from __future__ import annotations

import dataclasses
import functools
import itertools
import logging
import multiprocessing
import re
from collections.abc import Iterator, Sequence

import galois
import numpy as np

from skew_lcd import config, errors
from skew_lcd.gf import Automorphism, FieldElem, FieldSpec, split_terms

settings = config.get_settings()
logger = logging.getLogger(settings.LOGGER_NAME)

SCAN_BATCH = 2**15

_MONOMIAL = re.compile(r"x(?:\^(\d+))?$")


def _strip(values: Sequence[int]) -> tuple[int, ...]:
    values = list(values)
    while values and values[-1] == 0:
        values.pop()
    return tuple(values)


@dataclasses.dataclass(frozen=True)
class SkewPolyRing:
    """The skew polynomial ring F_q[x; theta_r].

    Attributes:
        field: The coefficient field.
        r: The power of the Frobenius automorphism.
    """

    field: FieldSpec
    r: int

    @property
    def automorphism(self) -> Automorphism:
        return Automorphism(self.field, self.r)

    @property
    def order(self) -> int:
        """Order m of theta_r; the center is F_q^theta[x^m]."""
        return self.automorphism.order

    @property
    def zero(self) -> SkewPoly:
        return SkewPoly(self, ())

    @property
    def one(self) -> SkewPoly:
        return SkewPoly(self, (1,))

    @property
    def x(self) -> SkewPoly:
        return SkewPoly(self, (0, 1))

    def poly(self, coeffs: Sequence[FieldElem | int | str]) -> SkewPoly:
        """Build a polynomial from ascending coefficients.

        Integers are read as prime subfield elements, strings are parsed.
        """
        return SkewPoly(self, tuple(self.field(c).value for c in coeffs))

    def monomial(self, coefficient: FieldElem | int, degree: int) -> SkewPoly:
        return SkewPoly(self, (0,) * degree + (self.field(coefficient).value,))

    def constant(self, coefficient: FieldElem | int | str) -> SkewPoly:
        return SkewPoly(self, (self.field(coefficient).value,))

    def modulus(self, n: int, lam: FieldElem | int | str) -> ConstaModulus:
        """The modulus x^n - lambda of a length n lambda-constacyclic code.

        Args:
            n: The code length.
            lam: The nonzero constant lambda.

        Returns:
            ConstaModulus: The modulus.
        """
        lam = self.field(lam)
        if not lam:
            message = "The constant of x^n - lambda must be a unit."
            logger.exception(message)
            raise errors.NonUnitError(message)
        poly = self.monomial(1, n) - self.constant(lam)
        return ConstaModulus(self, n, lam, poly)

    def monic(self, f: SkewPoly) -> SkewPoly:
        return f.monic()

    def random(
        self,
        rng: np.random.Generator,
        degree: int,
        *,
        monic: bool = False,
    ) -> SkewPoly:
        """Draw a random polynomial of exactly the given degree."""
        if degree < 0:
            return self.zero
        values = [int(v) for v in rng.integers(0, self.field.order, size=degree)]
        leading = 1 if monic else int(rng.integers(1, self.field.order))
        return SkewPoly(self, (*values, leading))

    def parse(self, text: str) -> SkewPoly:
        """Parse a sum of terms "c*x^j", e.g. "x^2+w*x+w^6" or "(1+w)*x-2".

        Args:
            text: The polynomial text, terms in any order.

        Returns:
            SkewPoly: The parsed polynomial.
        """
        cleaned = text.replace(" ", "")
        if not cleaned:
            message = "Cannot parse an empty polynomial."
            logger.exception(message)
            raise errors.ParseError(message)
        result = self.zero
        for negative, term in split_terms(cleaned):
            match = _MONOMIAL.search(term)
            if match is None:
                coefficient_text, degree = term, 0
            else:
                coefficient_text = term[: match.start()].removesuffix("*")
                degree = int(match.group(1)) if match.group(1) else 1
            if coefficient_text.startswith("(") and coefficient_text.endswith(")"):
                coefficient_text = coefficient_text[1:-1]
            coefficient = (
                self.field.parse_element(coefficient_text)
                if coefficient_text
                else self.field.one
            )
            monomial = self.monomial(coefficient, degree)
            result = result - monomial if negative else result + monomial
        return result


@dataclasses.dataclass(frozen=True)
class SkewPoly:
    """An element of F_q[x; theta_r].

    Attributes:
        ring: The parent ring.
        values: Ascending coefficients in the galois integer representation,
            with no trailing zeros.
    """

    ring: SkewPolyRing
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", _strip(self.values))

    @property
    def owner(self) -> FieldSpec:
        return self.ring.field

    @property
    def r(self) -> int:
        return self.ring.r

    @property
    def coeffs(self) -> tuple[FieldElem, ...]:
        return tuple(FieldElem(self.owner, v) for v in self.values)

    @property
    def degree(self) -> int:
        """The degree, -1 for the zero polynomial."""
        return len(self.values) - 1

    @property
    def leading(self) -> FieldElem:
        return FieldElem(self.owner, self.values[-1] if self.values else 0)

    def is_zero(self) -> bool:
        return not self.values

    def is_monic(self) -> bool:
        return bool(self.values) and self.values[-1] == 1

    def __bool__(self) -> bool:
        return bool(self.values)

    def __getitem__(self, i: int) -> FieldElem:
        value = self.values[i] if 0 <= i < len(self.values) else 0
        return FieldElem(self.owner, value)

    def coefficient_vector(self, n: int) -> list[int]:
        """Ascending coefficients padded with zeros to length n."""
        return list(self.values) + [0] * (n - len(self.values))

    def _check(self, other: SkewPoly) -> None:
        if other.ring != self.ring:
            message = f"Cannot combine elements of {self.ring} and {other.ring}."
            logger.exception(message)
            raise errors.RingMismatchError(message)

    def __add__(self, other: SkewPoly) -> SkewPoly:
        self._check(other)
        add = self.owner.add
        values = [
            add(a, b)
            for a, b in itertools.zip_longest(self.values, other.values, fillvalue=0)
        ]
        return SkewPoly(self.ring, tuple(values))

    def __neg__(self) -> SkewPoly:
        return SkewPoly(self.ring, tuple(self.owner.neg(v) for v in self.values))

    def __sub__(self, other: SkewPoly) -> SkewPoly:
        return self + (-other)

    def __mul__(self, other: object) -> SkewPoly:
        if isinstance(other, SkewPoly):
            return skew_mul(self, other)
        if isinstance(other, FieldElem | int):
            return skew_mul(self, self.ring.constant(other))
        return NotImplemented

    def __rmul__(self, other: object) -> SkewPoly:
        if isinstance(other, FieldElem | int):
            c = self.owner(other).value
            mul = self.owner.mul
            return SkewPoly(self.ring, tuple(mul(c, v) for v in self.values))
        return NotImplemented

    def __pow__(self, k: int) -> SkewPoly:
        result = self.ring.one
        for _ in range(k):
            result = result * self
        return result

    def monic(self) -> SkewPoly:
        """Left multiply by the inverse of the leading coefficient."""
        if not self.values:
            message = "The zero polynomial has no monic associate."
            logger.exception(message)
            raise errors.ZeroPolynomialError(message)
        return self.leading.inv() * self

    def map_coefficients(self, table: Sequence[int]) -> SkewPoly:
        return SkewPoly(self.ring, tuple(table[v] for v in self.values))

    def __str__(self) -> str:
        if not self.values:
            return "0"
        terms = []
        for i in range(len(self.values) - 1, -1, -1):
            value = self.values[i]
            if value == 0:
                continue
            coefficient = self.owner.format(value)
            if "+" in coefficient:
                coefficient = f"({coefficient})"
            if i == 0:
                terms.append(coefficient)
                continue
            monomial = "x" if i == 1 else f"x^{i}"
            terms.append(monomial if value == 1 else f"{coefficient}*{monomial}")
        return "+".join(terms)


@dataclasses.dataclass(frozen=True)
class ConstaModulus:
    """The polynomial x^n - lambda.

    Attributes:
        ring: The skew polynomial ring.
        n: The code length.
        lam: The unit lambda.
        poly: The polynomial x^n - lambda.
    """

    ring: SkewPolyRing
    n: int
    lam: FieldElem
    poly: SkewPoly

    def is_central(self) -> bool:
        return is_central(self.poly)

    def inverse(self) -> ConstaModulus:
        """The modulus x^n - lambda^{-1}."""
        return self.ring.modulus(self.n, self.lam.inv())


def skew_mul(f: SkewPoly, g: SkewPoly) -> SkewPoly:
    """Multiply two skew polynomials.

    Args:
        f: The left factor.
        g: The right factor.

    Returns:
        SkewPoly: The product f g.
    """
    f._check(g)  # noqa: SLF001
    if not f.values or not g.values:
        return f.ring.zero
    field = f.owner
    add, mul = field.add, field.mul
    result = [0] * (len(f.values) + len(g.values) - 1)
    for i, a in enumerate(f.values):
        if a == 0:
            continue
        theta = field.frobenius_table(f.r * i)
        for j, b in enumerate(g.values):
            if b:
                result[i + j] = add(result[i + j], mul(a, theta[b]))
    return SkewPoly(f.ring, tuple(result))


def _require_nonzero(g: SkewPoly) -> None:
    if not g.values:
        message = "Division by the zero polynomial."
        logger.exception(message)
        raise errors.DivisionByZeroError(message)


def right_divmod(f: SkewPoly, g: SkewPoly) -> tuple[SkewPoly, SkewPoly]:
    """Right Euclidean division f = q g + rem with deg rem < deg g.

    Args:
        f: The dividend.
        g: The nonzero divisor.

    Returns:
        tuple[SkewPoly, SkewPoly]: The quotient and the remainder.
    """
    f._check(g)  # noqa: SLF001
    _require_nonzero(g)
    field = f.owner
    dg = g.degree
    rem = list(f.values)
    quotient = [0] * max(len(rem) - dg, 0)
    g_lead = g.values[-1]
    for m in range(len(rem) - 1 - dg, -1, -1):
        lead = rem[m + dg]
        if lead == 0:
            continue
        theta = field.frobenius_table(f.r * m)
        c = field.div(lead, theta[g_lead])
        quotient[m] = c
        for j, b in enumerate(g.values):
            if b:
                rem[m + j] = field.sub(rem[m + j], field.mul(c, theta[b]))
    return SkewPoly(f.ring, tuple(quotient)), SkewPoly(f.ring, tuple(rem[:dg]))


def left_divmod(f: SkewPoly, g: SkewPoly) -> tuple[SkewPoly, SkewPoly]:
    """Left Euclidean division f = g q + rem with deg rem < deg g.

    Args:
        f: The dividend.
        g: The nonzero divisor.

    Returns:
        tuple[SkewPoly, SkewPoly]: The quotient and the remainder.
    """
    f._check(g)  # noqa: SLF001
    _require_nonzero(g)
    field = f.owner
    dg = g.degree
    rem = list(f.values)
    quotient = [0] * max(len(rem) - dg, 0)
    g_lead = g.values[-1]
    untwist = field.frobenius_table(-f.r * dg)
    for m in range(len(rem) - 1 - dg, -1, -1):
        lead = rem[m + dg]
        if lead == 0:
            continue
        c = untwist[field.div(lead, g_lead)]
        quotient[m] = c
        for j, b in enumerate(g.values):
            if b:
                twisted = field.frobenius(c, f.r * j)
                rem[m + j] = field.sub(rem[m + j], field.mul(b, twisted))
    return SkewPoly(f.ring, tuple(quotient)), SkewPoly(f.ring, tuple(rem[:dg]))


def right_rem(f: SkewPoly, g: SkewPoly) -> SkewPoly:
    return right_divmod(f, g)[1]


def right_divides(g: SkewPoly, f: SkewPoly) -> bool:
    """Whether g is a right divisor of f."""
    return right_rem(f, g).is_zero()


def gcrd(f: SkewPoly, g: SkewPoly) -> SkewPoly:
    """Monic greatest common right divisor by the right Euclidean algorithm.

    Args:
        f: The first polynomial.
        g: The second polynomial.

    Returns:
        SkewPoly: The monic gcrd.
    """
    f._check(g)  # noqa: SLF001
    if f.is_zero() and g.is_zero():
        message = "The gcrd of two zero polynomials is undefined."
        logger.exception(message)
        raise errors.BothZeroError(message)
    a, b = f, g
    while b:
        a, b = b, right_rem(a, b)
    return a.monic()


def skew_reciprocal(h: SkewPoly, *, monic: bool = False) -> SkewPoly:
    """The skew reciprocal with i-th coefficient theta^i(h_{k-i}), k = deg h.

    Args:
        h: A nonzero polynomial.
        monic: Normalize the result to be monic.

    Returns:
        SkewPoly: The skew reciprocal of h.
    """
    if h.is_zero():
        message = "The skew reciprocal of the zero polynomial is undefined."
        logger.exception(message)
        raise errors.ZeroPolynomialError(message)
    field = h.owner
    k = h.degree
    values = tuple(field.frobenius(h.values[k - i], h.r * i) for i in range(k + 1))
    result = SkewPoly(h.ring, values)
    return result.monic() if monic else result


def conjugate(f: SkewPoly) -> SkewPoly:
    """Apply a -> a^{p^{t/2}} to every coefficient."""
    field = f.owner
    if field.t % 2:
        message = f"Conjugation needs an even extension degree, {field} has odd degree."
        logger.exception(message)
        raise errors.OddExtensionDegreeError(message)
    return f.map_coefficients(field.frobenius_table(field.t // 2))


def is_central(f: SkewPoly) -> bool:
    """Whether f lies in the center F_q^theta[x^m]."""
    fixed = f.owner.fixed_values(f.r)
    m = f.ring.order
    return all(
        value == 0 or (i % m == 0 and value in fixed)
        for i, value in enumerate(f.values)
    )


def central_polynomials(ring: SkewPolyRing, max_degree: int) -> Iterator[SkewPoly]:
    """Monic central polynomials of positive degree at most max_degree.

    Args:
        ring: The skew polynomial ring.
        max_degree: The largest degree in x.

    Yields:
        SkewPoly: The polynomials, by increasing degree.
    """
    m = ring.order
    fixed = sorted(ring.field.fixed_values(ring.r))
    for degree in range(1, max_degree // m + 1):
        for lower in itertools.product(fixed, repeat=degree):
            values = [0] * (degree * m + 1)
            for i, c in enumerate(lower):
                values[i * m] = c
            values[-1] = 1
            yield SkewPoly(ring, tuple(values))


def has_central_divisor(g: SkewPoly) -> bool:
    """Whether some monic central polynomial of positive degree right-divides g."""
    if g.is_zero():
        return True
    return any(
        right_divides(c, g) for c in central_polynomials(g.ring, g.degree)
    )


def skew_generator_matrix(g: SkewPoly, n: int) -> galois.FieldArray:
    """The matrix with rows x^i g for 0 <= i < n - deg g.

    Args:
        g: A nonzero polynomial of degree at most n.
        n: The code length.

    Returns:
        galois.FieldArray: The (n - deg g) x n matrix.
    """
    _require_nonzero(g)
    field = g.owner
    k = n - g.degree
    if k < 0:
        message = f"The generator {g} has degree above the length {n}."
        logger.exception(message)
        raise errors.NotADivisorError(message)
    rows = np.zeros((k, n), dtype=np.int64)
    for i in range(k):
        theta = field.frobenius_table(g.r * i)
        for j, value in enumerate(g.values):
            rows[i, i + j] = theta[value]
    return field.array(rows)


def cofactor(g: SkewPoly, modulus: ConstaModulus) -> SkewPoly:
    """The h with h g = x^n - lambda, checking also g h = x^n - lambda.

    Args:
        g: A right divisor of x^n - lambda.
        modulus: The modulus x^n - lambda.

    Returns:
        SkewPoly: The cofactor h.
    """
    h, rem = right_divmod(modulus.poly, g)
    if rem:
        message = f"{g} does not right-divide {modulus.poly}."
        logger.exception(message)
        raise errors.NotADivisorError(message)
    if skew_mul(g, h) != modulus.poly:
        message = f"{g} and its cofactor {h} do not commute to {modulus.poly}."
        logger.exception(message)
        raise errors.TwoSidedMismatchError(message)
    return h


def _scan_range(
    field: FieldSpec,
    r: int,
    dividend: tuple[int, ...],
    degree: int,
    start: int,
    stop: int,
) -> list[tuple[int, ...]]:
    """Monic degree-d right divisors among the candidates numbered [start, stop).

    Candidate number i has the base-q digits of i as its lower coefficients.
    The whole batch is divided at once with galois array arithmetic.
    """
    gf = field.galois_field
    q = field.order
    found: list[tuple[int, ...]] = []
    for batch_start in range(start, stop, SCAN_BATCH):
        batch_stop = min(batch_start + SCAN_BATCH, stop)
        index = np.arange(batch_start, batch_stop, dtype=np.int64)
        lower = (index[:, None] // q ** np.arange(degree, dtype=np.int64)) % q
        candidates = np.concatenate(
            [lower, np.ones((len(index), 1), dtype=np.int64)],
            axis=1,
        )
        divisors = gf(candidates)
        powers = {(r * m) % field.t for m in range(len(dividend))}
        twists = {k: divisors ** (field.p**k) for k in powers}
        rem = gf(np.tile(np.asarray(dividend, dtype=np.int64), (len(index), 1)))
        for m in range(len(dividend) - 1 - degree, -1, -1):
            lead = rem[:, m + degree]
            twisted = twists[(r * m) % field.t]
            window = slice(m, m + degree + 1)
            rem[:, window] = rem[:, window] - lead[:, None] * twisted
        hits = np.all(rem[:, :degree].view(np.ndarray) == 0, axis=1)
        found.extend(tuple(int(v) for v in row) for row in candidates[hits])
    return found


def _scan_task(args: tuple) -> list[tuple[int, ...]]:
    return _scan_range(*args)


def right_divisors(
    modulus: ConstaModulus,
    degree: int,
    budget: int | None = None,
    threads: int | None = None,
) -> list[SkewPoly]:
    """All monic right divisors of x^n - lambda of a given degree.

    Args:
        modulus: The modulus x^n - lambda.
        degree: The degree of the divisors.
        budget: Largest number of candidates to visit.
        threads: Number of worker processes.

    Returns:
        list[SkewPoly]: The divisors, sorted by coefficient tuple.
    """
    budget = settings.DIVISOR_BUDGET if budget is None else budget
    threads = settings.THREADS if threads is None else threads
    ring = modulus.ring
    if degree == 0:
        return [ring.one]
    if degree < 0 or degree > modulus.n:
        return []
    total = ring.field.order**degree
    if total > budget:
        message = (
            f"Scanning {total} candidates of degree {degree} "
            f"exceeds the budget {budget}."
        )
        logger.exception(message)
        raise errors.BudgetExceededError(message)

    logger.debug("Scanning %s candidates of degree %s.", total, degree)
    dividend = modulus.poly.coefficient_vector(modulus.n + 1)
    if threads > 1 and total > SCAN_BATCH:
        bounds = np.linspace(0, total, threads * 4 + 1, dtype=np.int64)
        tasks = [
            (ring.field, ring.r, tuple(dividend), degree, int(a), int(b))
            for a, b in itertools.pairwise(bounds)
            if b > a
        ]
        with multiprocessing.Pool(processes=threads) as pool:
            results = pool.imap_unordered(_scan_task, tasks)
            found = list(itertools.chain.from_iterable(results))
    else:
        found = _scan_range(ring.field, ring.r, tuple(dividend), degree, 0, total)
    return [SkewPoly(ring, values) for values in sorted(found)]


def right_divisors_all(
    modulus: ConstaModulus,
    max_degree: int,
    budget: int | None = None,
    threads: int | None = None,
) -> list[SkewPoly]:
    """Monic right divisors of every degree from 0 to max_degree."""
    return list(
        itertools.chain.from_iterable(
            right_divisors(modulus, d, budget, threads) for d in range(max_degree + 1)
        ),
    )


@functools.lru_cache(maxsize=None)
def skew_ring(field: FieldSpec, r: int) -> SkewPolyRing:
    return SkewPolyRing(field, r)
