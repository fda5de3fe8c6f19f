"""Linear and skew constacyclic codes over F_q.

Codes are row spaces of generator matrices held as galois FieldArrays in
reduced row echelon form, so two codes are equal exactly when their
matrices are.
"""
from __future__ import annotations

import dataclasses
import enum
import itertools
import logging
from collections.abc import Callable, Iterator, Sequence
from typing import Any

import galois
import numpy as np

from skew_lcd import config, errors, skewpoly
from skew_lcd.gf import FieldElem, FieldSpec
from skew_lcd.skewpoly import ConstaModulus, SkewPoly

settings = config.get_settings()
logger = logging.getLogger(settings.LOGGER_NAME)


class Inner(str, enum.Enum):
    """The inner product a code is paired with."""

    EUCLIDEAN = "euclidean"
    HERMITIAN = "hermitian"


def _rank(matrix: galois.FieldArray) -> int:
    if matrix.shape[0] == 0 or matrix.shape[1] == 0:
        return 0
    return int(np.linalg.matrix_rank(matrix))


def conjugate_matrix(field: FieldSpec, matrix: galois.FieldArray) -> galois.FieldArray:
    """Apply a -> a^{p^{t/2}} to every entry."""
    if field.t % 2:
        message = f"Hermitian products need an even extension degree, not {field}."
        logger.exception(message)
        raise errors.OddExtensionDegreeError(message)
    return matrix ** (field.p ** (field.t // 2))


class LinearCode:
    """A linear code over F_q given by a generator matrix.

    Attributes:
        field: The alphabet.
        n: The length.
        generator: Reduced row echelon generator matrix of full row rank.
    """

    def __init__(self, field: FieldSpec, rows: object, n: int | None = None) -> None:
        """Row reduce the given rows.

        Args:
            field: The alphabet.
            rows: Spanning vectors, as integer representations or a FieldArray.
            n: The length, needed when no rows are given.
        """
        matrix = np.asarray(rows, dtype=np.int64)
        self.field = field
        self.n = int(matrix.shape[-1]) if n is None else n
        matrix = field.array(matrix.reshape(-1, self.n))
        if matrix.shape[0]:
            matrix = matrix.row_reduce()
            matrix = matrix[np.any(matrix.view(np.ndarray) != 0, axis=1)]
        self.generator = matrix

    @classmethod
    def full(cls, field: FieldSpec, n: int) -> LinearCode:
        return cls(field, np.eye(n, dtype=np.int64), n)

    @classmethod
    def zero(cls, field: FieldSpec, n: int) -> LinearCode:
        return cls(field, np.zeros((0, n), dtype=np.int64), n)

    @property
    def k(self) -> int:
        return int(self.generator.shape[0])

    @property
    def cardinality(self) -> int:
        return self.field.order**self.k

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LinearCode):
            return NotImplemented
        return (
            self.field == other.field
            and self.n == other.n
            and np.array_equal(self.generator, other.generator)
        )

    def __hash__(self) -> int:
        return hash((self.field, self.n, self.generator.view(np.ndarray).tobytes()))

    def __repr__(self) -> str:
        return f"LinearCode([{self.n},{self.k}] over {self.field})"

    def contains(self, vector: object) -> bool:
        """Whether a vector lies in the code."""
        row = self.field.array(vector).reshape(1, self.n)
        return _rank(np.concatenate((self.generator, row))) == self.k

    def parity_check(self) -> galois.FieldArray:
        """A matrix whose null space is the code."""
        if self.k == 0:
            return self.field.array(np.eye(self.n, dtype=np.int64))
        if self.k == self.n:
            return self.field.array(np.zeros((0, self.n), dtype=np.int64))
        return self.generator.null_space()

    def sum_dim(self, other: LinearCode) -> int:
        return _rank(np.concatenate((self.generator, other.generator)))

    def intersection_dim(self, other: LinearCode) -> int:
        return self.k + other.k - self.sum_dim(other)

    def codewords(self, budget: int | None = None) -> galois.FieldArray:
        """Every codeword, one per row.

        Args:
            budget: Largest number of codewords to generate.

        Returns:
            galois.FieldArray: The q^k x n matrix of codewords.
        """
        budget = settings.CENSUS_BUDGET if budget is None else budget
        if self.cardinality > budget:
            message = (
                f"{self} has {self.cardinality} codewords, above the budget {budget}."
            )
            logger.exception(message)
            raise errors.BudgetExceededError(message)
        if self.k == 0:
            return self.field.array(np.zeros((1, self.n), dtype=np.int64))
        q = self.field.order
        index = np.arange(self.cardinality, dtype=np.int64)
        messages = (index[:, None] // q ** np.arange(self.k, dtype=np.int64)) % q
        return self.field.array(messages) @ self.generator

    def weight_distribution(self, budget: int | None = None) -> list[int]:
        """Number of codewords of each Hamming weight 0..n."""
        weights = np.count_nonzero(self.codewords(budget).view(np.ndarray), axis=1)
        return np.bincount(weights, minlength=self.n + 1).tolist()

    def to_dict(self) -> dict[str, Any]:
        return {
            "field": repr(self.field),
            "n": self.n,
            "k": self.k,
            "G": format_matrix(self.field, self.generator),
        }


def format_matrix(field: FieldSpec, matrix: galois.FieldArray) -> list[list[str]]:
    return [[field.format(int(v)) for v in row] for row in matrix.view(np.ndarray)]


def dual(code: LinearCode, inner: Inner | str = Inner.EUCLIDEAN) -> LinearCode:
    """The dual code under the Euclidean or Hermitian inner product.

    Args:
        code: The code.
        inner: The inner product.

    Returns:
        LinearCode: The dual, of dimension n - k.
    """
    inner = Inner(inner)
    if inner is Inner.HERMITIAN:
        conjugated = LinearCode(
            code.field,
            conjugate_matrix(code.field, code.generator),
            code.n,
        )
        return LinearCode(code.field, conjugated.parity_check(), code.n)
    return LinearCode(code.field, code.parity_check(), code.n)


def hull_dim(code: LinearCode, inner: Inner | str = Inner.EUCLIDEAN) -> int:
    """Dimension of the intersection of a code with its dual."""
    return code.intersection_dim(dual(code, inner))


def is_lcd_matrix(code: LinearCode, inner: Inner | str = Inner.EUCLIDEAN) -> bool:
    """Whether G G^T (G conj(G)^T for Hermitian) is nonsingular.

    Args:
        code: The code.
        inner: The inner product.

    Returns:
        bool: Whether the code is LCD.
    """
    inner = Inner(inner)
    if code.k == 0:
        return True
    other = code.generator
    if inner is Inner.HERMITIAN:
        other = conjugate_matrix(code.field, other)
    gram = code.generator @ other.T
    return _rank(gram) == code.k


def twisted_shift(vector: object, lam: FieldElem, r: int) -> galois.FieldArray:
    """The lambda-twisted skew shift.

    Maps c to (lambda theta(c_{n-1}), theta(c_0), ..., theta(c_{n-2})).
    """
    field = lam.owner
    c = field.array(vector)
    twisted = c ** (field.p ** (r % field.t))
    shifted = field.array(np.roll(twisted.view(np.ndarray), 1))
    shifted[0] = shifted[0] * field.array(lam.value)
    return shifted


@dataclasses.dataclass(frozen=True)
class MinimumDistance:
    """Result of a bounded minimum distance search.

    Attributes:
        value: The minimum distance when exact, else a lower bound.
        exact: Whether a codeword of weight `value` was found.
        witness: A codeword of minimum weight, when exact.
    """

    value: int
    exact: bool
    witness: tuple[int, ...] | None = None

    def __str__(self) -> str:
        return str(self.value) if self.exact else f">={self.value}"


def min_distance_bounded(code: LinearCode, w_max: int | None = None) -> MinimumDistance:
    """Scan all vectors of weight at most w_max for membership via syndromes.

    The first nonzero coordinate of each candidate is fixed to 1, since
    codewords come in scalar multiples.

    Args:
        code: A nonzero code.
        w_max: Largest weight to scan.

    Returns:
        MinimumDistance: The exact distance, or the bound w_max + 1.
    """
    w_max = settings.WEIGHT_LIMIT if w_max is None else w_max
    if code.k == 0:
        message = "The zero code has no minimum distance."
        logger.exception(message)
        raise errors.ZeroCodeError(message)
    field = code.field
    parity = code.parity_check()
    for weight in range(1, min(w_max, code.n) + 1):
        tails = list(itertools.product(range(1, field.order), repeat=weight - 1))
        values = field.array([(1, *tail) for tail in tails])
        for support in itertools.combinations(range(code.n), weight):
            if parity.shape[0] == 0:
                hits = np.array([0])
            else:
                syndromes = parity[:, list(support)] @ values.T
                hits = np.flatnonzero(~np.any(syndromes.view(np.ndarray), axis=0))
            if hits.size:
                witness = [0] * code.n
                row = values[hits[0]].tolist()
                for position, value in zip(support, row, strict=True):
                    witness[position] = int(value)
                logger.debug("Found a codeword of weight %s in %s.", weight, code)
                return MinimumDistance(weight, exact=True, witness=tuple(witness))
    return MinimumDistance(min(w_max, code.n) + 1, exact=False)


@dataclasses.dataclass(frozen=True, eq=False)
class SkewConstaCode:
    """A skew lambda-constacyclic code, the left ideal generated by g.

    Attributes:
        base: The underlying linear code.
        modulus: The modulus x^n - lambda.
        g: The monic generator polynomial.
        h: The polynomial with h g = x^n - lambda.
    """

    base: LinearCode
    modulus: ConstaModulus
    g: SkewPoly
    h: SkewPoly

    @property
    def n(self) -> int:
        return self.modulus.n

    @property
    def k(self) -> int:
        return self.base.k

    @property
    def lam(self) -> FieldElem:
        return self.modulus.lam

    @property
    def field(self) -> FieldSpec:
        return self.base.field

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SkewConstaCode):
            return NotImplemented
        return self.base == other.base and self.modulus.poly == other.modulus.poly

    def __hash__(self) -> int:
        return hash((self.base, self.modulus.poly))

    def __repr__(self) -> str:
        return f"SkewConstaCode(n={self.n}, lambda={self.lam}, g={self.g})"

    def to_dict(self, w_max: int | None = None) -> dict[str, Any]:
        """JSON-ready description with LCD verdicts and the bounded distance."""
        lcd = lcd_verdicts(self, is_skew_lcd)
        distance = min_distance_bounded(self.base, w_max) if self.k else None
        return {
            "field": repr(self.field),
            "r": self.g.r,
            "n": self.n,
            "lambda": str(self.lam),
            "generator": str(self.g),
            "G": format_matrix(self.field, self.base.generator),
            "k": self.k,
            "lcd": lcd,
            "d_bounded": None if distance is None else str(distance),
        }


def from_generator_poly(modulus: ConstaModulus, g: SkewPoly) -> SkewConstaCode:
    """The skew constacyclic code generated by a right divisor of x^n - lambda.

    Args:
        modulus: The modulus x^n - lambda.
        g: A right divisor of the modulus; normalized to be monic.

    Returns:
        SkewConstaCode: The code of dimension n - deg g.
    """
    g = g.monic()
    h, rem = skewpoly.right_divmod(modulus.poly, g)
    if rem:
        message = f"{g} does not right-divide {modulus.poly}."
        logger.exception(message)
        raise errors.NotADivisorError(message)
    base = LinearCode(g.owner, skewpoly.skew_generator_matrix(g, modulus.n), modulus.n)
    return SkewConstaCode(base, modulus, g, h)


def is_closed_under_shift(code: SkewConstaCode) -> bool:
    """Whether every generator row stays in the code under the twisted shift."""
    return all(
        code.base.contains(twisted_shift(row, code.lam, code.g.r))
        for row in code.base.generator
    )


def dual_generator(
    code: SkewConstaCode, inner: Inner | str = Inner.EUCLIDEAN
) -> SkewConstaCode:
    """The dual as a skew constacyclic code generated by the skew reciprocal of h.

    The Euclidean dual is generated by monic h^rec over x^n - lambda^{-1};
    the Hermitian dual by the conjugates of both.

    Args:
        code: The code.
        inner: The inner product.

    Returns:
        SkewConstaCode: The dual code.
    """
    inner = Inner(inner)
    reciprocal = skewpoly.skew_reciprocal(code.h, monic=True)
    modulus = code.modulus.inverse()
    if inner is Inner.HERMITIAN:
        reciprocal = skewpoly.conjugate(reciprocal)
        modulus = modulus.ring.modulus(
            modulus.n,
            modulus.lam.frobenius(modulus.lam.owner.t // 2),
        )
    return from_generator_poly(modulus, reciprocal)


def _check_gcrd_preconditions(code: SkewConstaCode) -> None:
    lam = code.lam
    if lam * lam != lam.owner.one:
        message = f"The gcrd criterion needs lambda^2 = 1, got lambda = {lam}."
        logger.exception(message)
        raise errors.LambdaNotInvolutiveError(message)
    order = code.g.ring.order
    if code.n % order:
        message = f"The length {code.n} is not a multiple of the order {order}."
        logger.exception(message)
        raise errors.LengthNotMultipleOfOrderError(message)


def lcd_certificate(
    code: SkewConstaCode, inner: Inner | str = Inner.EUCLIDEAN
) -> SkewPoly:
    """gcrd(g, h^rec), or gcrd(g, conj(h^rec)) for the Hermitian product.

    Args:
        code: A code with lambda^2 = 1 and length a multiple of the order of theta.
        inner: The inner product.

    Returns:
        SkewPoly: The monic gcrd; anything but 1 generates a nonzero part of the hull.
    """
    inner = Inner(inner)
    _check_gcrd_preconditions(code)
    partner = skewpoly.skew_reciprocal(code.h)
    if inner is Inner.HERMITIAN:
        partner = skewpoly.conjugate(partner)
    return skewpoly.gcrd(code.g, partner)


def lcd_by_gcrd(code: SkewConstaCode, inner: Inner | str = Inner.EUCLIDEAN) -> bool:
    """The gcrd criterion: the certificate is 1."""
    return lcd_certificate(code, inner).degree == 0


def is_skew_lcd(code: SkewConstaCode, inner: Inner | str = Inner.EUCLIDEAN) -> bool:
    """Decide LCD-ness by the gcrd criterion, confirmed on the generator matrix.

    Args:
        code: A code with lambda^2 = 1 and length a multiple of the order of theta.
        inner: The inner product.

    Returns:
        bool: Whether the code is LCD.
    """
    verdict = lcd_by_gcrd(code, inner)
    if verdict != is_lcd_matrix(code.base, inner):
        message = f"The gcrd and matrix LCD tests disagree on {code}."
        logger.exception(message)
        raise errors.CriterionMismatchError(message)
    return verdict


def lcd_verdicts(
    code: object, test: Callable[[Any, Inner], bool]
) -> dict[str, bool | None]:
    """Run an LCD test for both inner products.

    A product whose criterion does not apply maps to None.
    """
    verdicts: dict[str, bool | None] = {}
    for inner in Inner:
        try:
            verdicts[inner.value] = test(code, inner)
        except (
            errors.OddExtensionDegreeError,
            errors.LambdaNotInvolutiveError,
            errors.LengthNotMultipleOfOrderError,
        ):
            verdicts[inner.value] = None
    return verdicts


def bracket(p: int, r: int, i: int) -> int:
    """The exponent [i] = (p^{ri} - 1) / (p^r - 1)."""
    return sum(p ** (r * j) for j in range(i))


@dataclasses.dataclass(frozen=True)
class ScaleMap:
    """The coordinate scaling c_i -> delta^{-[i]} c_i.

    Attributes:
        delta: A unit of the field.
        r: The power of the Frobenius automorphism.
        n: The length.
    """

    delta: FieldElem
    r: int
    n: int

    def __post_init__(self) -> None:
        if not self.delta:
            message = "The scaling element must be a unit."
            logger.exception(message)
            raise errors.NonUnitDeltaError(message)

    @property
    def exponents(self) -> list[int]:
        return [bracket(self.delta.owner.p, self.r, i) for i in range(self.n)]

    @property
    def factors(self) -> list[FieldElem]:
        return [self.delta ** (-e) for e in self.exponents]

    @property
    def twist(self) -> FieldElem:
        """delta^{[n]}, the factor the constant lambda picks up."""
        return self.delta ** bracket(self.delta.owner.p, self.r, self.n)

    def apply(self, vector: object) -> galois.FieldArray:
        field = self.delta.owner
        return field.array(vector) * field.array([f.value for f in self.factors])

    def inverse(self) -> ScaleMap:
        return ScaleMap(self.delta.inv(), self.r, self.n)


def lambda_roots(spec: FieldSpec, r: int, n: int, lam: FieldElem) -> set[FieldElem]:
    """All delta with delta^{[n]} = lambda.

    Args:
        spec: The field.
        r: The power of the Frobenius automorphism.
        n: The length.
        lam: A unit.

    Returns:
        set[FieldElem]: The roots.
    """
    exponent = bracket(spec.p, r, n) % (spec.order - 1)
    nonzero = spec.galois_field.elements[1:]
    hits = nonzero[(nonzero**exponent).view(np.ndarray) == spec(lam).value]
    return {spec.element(int(v)) for v in hits}


def scale_equivalence(code: SkewConstaCode, delta: FieldElem) -> SkewConstaCode:
    """Map a skew lambda-constacyclic code to a lambda delta^{[n]}-constacyclic one.

    The map c_i -> delta^{-[i]} c_i is a monomial equivalence; the image is
    generated by the monic normalization of sum g_i delta^{-[i]} x^i. The
    classical statement asks for odd n; any n is accepted here.

    Args:
        code: The source code.
        delta: A unit.

    Returns:
        SkewConstaCode: The image code.
    """
    scale = ScaleMap(code.field(delta), code.g.r, code.n)
    ring = code.g.ring
    factors = scale.factors
    image = ring.poly([c * factors[i] for i, c in enumerate(code.g.coeffs)])
    modulus = ring.modulus(code.n, code.lam * scale.twist)
    logger.debug("Scaling %s by %s gives %s.", code.g, delta, image.monic())
    return from_generator_poly(modulus, image)


def divisor_codes(
    modulus: ConstaModulus,
    degrees: Sequence[int] | None = None,
    budget: int | None = None,
    threads: int | None = None,
) -> Iterator[SkewConstaCode]:
    """Codes generated by every monic right divisor of the given degrees."""
    degrees = range(modulus.n + 1) if degrees is None else degrees
    for degree in degrees:
        for g in skewpoly.right_divisors(modulus, degree, budget, threads):
            yield from_generator_poly(modulus, g)
