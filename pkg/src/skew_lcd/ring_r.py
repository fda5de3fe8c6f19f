"""The ring R = F_q + vF_q with v^2 = v, its skew codes and the Gray map.

An element a + vb splits as v(a + b) + (1 - v)a, so R is F_q x F_q and a
code C over R is vC1 + (1 - v)C2 with C1 on the v side and C2 on the
(1 - v) side.
"""
from __future__ import annotations

import dataclasses
import logging
from collections.abc import Sequence
from typing import Any

import galois
import numpy as np

from skew_lcd import codes, config, errors
from skew_lcd.codes import Inner, LinearCode, MinimumDistance, SkewConstaCode
from skew_lcd.gf import FieldElem, FieldSpec, split_terms
from skew_lcd.skewpoly import SkewPoly, SkewPolyRing

settings = config.get_settings()
logger = logging.getLogger(settings.LOGGER_NAME)

LAMBDA_KINDS = ("1", "-1", "1-2v")


@dataclasses.dataclass(frozen=True)
class RingElem:
    """The element a + vb of F_q + vF_q.

    Attributes:
        a: The constant part.
        b: The v part.
    """

    a: FieldElem
    b: FieldElem

    @property
    def field(self) -> FieldSpec:
        return self.a.owner

    def _other(self, other: object) -> RingElem:
        if isinstance(other, RingElem):
            return other
        if isinstance(other, FieldElem | int):
            return RingElem(self.field(other), self.field.zero)
        return NotImplemented

    def __add__(self, other: object) -> RingElem:
        y = self._other(other)
        if y is NotImplemented:
            return NotImplemented
        return RingElem(self.a + y.a, self.b + y.b)

    __radd__ = __add__

    def __neg__(self) -> RingElem:
        return RingElem(-self.a, -self.b)

    def __sub__(self, other: object) -> RingElem:
        y = self._other(other)
        if y is NotImplemented:
            return NotImplemented
        return RingElem(self.a - y.a, self.b - y.b)

    def __rsub__(self, other: object) -> RingElem:
        return -self + other

    def __mul__(self, other: object) -> RingElem:
        y = self._other(other)
        if y is NotImplemented:
            return NotImplemented
        return RingElem(self.a * y.a, self.a * y.b + self.b * y.a + self.b * y.b)

    __rmul__ = __mul__

    def is_unit(self) -> bool:
        return bool(self.a) and bool(self.a + self.b)

    def inv(self) -> RingElem:
        """The inverse, defined when both CRT components are nonzero."""
        if not self.is_unit():
            message = f"{self} is not a unit of F_q+vF_q."
            logger.exception(message)
            raise errors.NonUnitError(message)
        u, z = crt_split(self)
        return crt_join(u.inv(), z.inv())

    def frobenius(self, r: int) -> RingElem:
        return RingElem(self.a.frobenius(r), self.b.frobenius(r))

    def conjugate(self) -> RingElem:
        """Conjugate both components, fixing v."""
        t = self.field.t
        if t % 2:
            message = f"Conjugation needs an even extension degree, not {self.field}."
            logger.exception(message)
            raise errors.OddExtensionDegreeError(message)
        return self.frobenius(t // 2)

    def lee_weight(self) -> int:
        return int(bool(self.a)) + int(bool(self.a + self.b))

    def __str__(self) -> str:
        if not self.b:
            return str(self.a)
        coefficient = str(self.b)
        if "+" in coefficient:
            coefficient = f"({coefficient})"
        v_part = "v" if coefficient == "1" else f"v*{coefficient}"
        return v_part if not self.a else f"{self.a}+{v_part}"


@dataclasses.dataclass(frozen=True)
class RingR:
    """The ring F_q + vF_q over a field.

    Attributes:
        field: The field F_q.
    """

    field: FieldSpec

    @property
    def zero(self) -> RingElem:
        return RingElem(self.field.zero, self.field.zero)

    @property
    def one(self) -> RingElem:
        return RingElem(self.field.one, self.field.zero)

    @property
    def v(self) -> RingElem:
        return RingElem(self.field.zero, self.field.one)

    def element(
        self, a: FieldElem | int | str, b: FieldElem | int | str = 0
    ) -> RingElem:
        return RingElem(self.field(a), self.field(b))

    def parse(self, text: str) -> RingElem:
        return parse_ring_element(self.field, text)

    def random(self, rng: np.random.Generator) -> RingElem:
        return RingElem(self.field.random(rng), self.field.random(rng))

    def random_vector(self, rng: np.random.Generator, n: int) -> list[RingElem]:
        return [self.random(rng) for _ in range(n)]


def parse_ring_element(field: FieldSpec, text: str) -> RingElem:
    """Parse "a+v*b" and friends such as "v", "1-v", "1-2v" or "w+v*w^3".

    Args:
        field: The field F_q.
        text: The text to parse.

    Returns:
        RingElem: The parsed element.
    """
    cleaned = text.replace(" ", "")
    if not cleaned:
        message = "Cannot parse an empty ring element."
        logger.exception(message)
        raise errors.ParseError(message)
    a, b = field.zero, field.zero
    for negative, term in split_terms(cleaned):
        if term == "v":
            coefficient_text, on_v = "1", True
        elif term.startswith("v*"):
            coefficient_text, on_v = term[2:], True
        elif term.endswith("*v"):
            coefficient_text, on_v = term[:-2], True
        elif term.endswith("v") and term[:-1].isdigit():
            coefficient_text, on_v = term[:-1], True
        else:
            coefficient_text, on_v = term, False
        if coefficient_text.startswith("(") and coefficient_text.endswith(")"):
            coefficient_text = coefficient_text[1:-1]
        value = field.parse_element(coefficient_text)
        if negative:
            value = -value
        if on_v:
            b = b + value
        else:
            a = a + value
    return RingElem(a, b)


def r_arith(x: RingElem, y: RingElem | None, op: str) -> RingElem:
    """Dispatch a ring operation by name: "add", "mul" or "inv"."""
    match op:
        case "add":
            return x + y
        case "mul":
            return x * y
        case "inv":
            return x.inv()
    message = f"Unknown ring operation {op!r}."
    logger.exception(message)
    raise errors.ParseError(message)


def crt_split(x: RingElem) -> tuple[FieldElem, FieldElem]:
    """The components (a + b, a) of a + vb on the v and (1 - v) sides."""
    return x.a + x.b, x.a


def crt_join(u: FieldElem, z: FieldElem) -> RingElem:
    """The element with v-side component u and (1 - v)-side component z."""
    return RingElem(z, u - z)


def r_lambda(field: FieldSpec, kind: str) -> RingElem:
    """The constant lambda named "1", "-1" or "1-2v".

    Args:
        field: The field F_q.
        kind: The name of the constant.

    Returns:
        RingElem: The constant.
    """
    if kind not in LAMBDA_KINDS:
        message = f"Unknown constant {kind!r}, expected one of {LAMBDA_KINDS}."
        logger.exception(message)
        raise errors.UnsupportedVariantError(message)
    if kind == "1-2v" and field.p == 2:  # noqa: PLR2004
        message = "The constant 1-2v equals 1 in characteristic two."
        logger.exception(message)
        raise errors.CharacteristicTwoWithOneMinusTwoVError(message)
    return parse_ring_element(field, kind)


def gray_map(vector: Sequence[RingElem]) -> galois.FieldArray:
    """The Gray image (a_1..a_n | a_1+b_1..a_n+b_n) of a vector over R.

    Args:
        vector: A nonempty vector over R.

    Returns:
        galois.FieldArray: The vector of length 2n over F_q.
    """
    field = vector[0].field
    first = [x.a.value for x in vector]
    second = [(x.a + x.b).value for x in vector]
    return field.array(first + second)


def gray_inverse(field: FieldSpec, image: Sequence[int]) -> list[RingElem]:
    """Recover a vector over R from its Gray image."""
    n = len(image) // 2
    first = [field.element(int(value)) for value in image[:n]]
    second = [field.element(int(value)) for value in image[n:]]
    return [RingElem(a, c - a) for a, c in zip(first, second, strict=True)]


def lee_weight(vector: Sequence[RingElem]) -> int:
    """The Lee weight, equal to the Hamming weight of the Gray image."""
    return sum(x.lee_weight() for x in vector)


def quasi_cyclic_shift(
    vector: object,
    n: int,
    lam2: FieldElem,
    lam1: FieldElem,
    r: int,
) -> galois.FieldArray:
    """Apply the twisted skew shift to both length-n blocks of a Gray image."""
    field = lam1.owner
    full = field.array(vector)
    first = codes.twisted_shift(full[:n], lam2, r)
    second = codes.twisted_shift(full[n:], lam1, r)
    return field.array(
        np.concatenate((first.view(np.ndarray), second.view(np.ndarray)))
    )


@dataclasses.dataclass(frozen=True)
class GrayParams:
    """Parameters [2n, k1 + k2, d] of a Gray image.

    Attributes:
        length: The length 2n.
        dimension: The dimension k1 + k2 over F_q.
        distance: The bounded minimum distance of the image.
    """

    length: int
    dimension: int
    distance: MinimumDistance

    def __str__(self) -> str:
        return f"[{self.length},{self.dimension},{self.distance}]"


@dataclasses.dataclass(frozen=True, eq=False)
class RSkewCode:
    """A skew (alpha + v beta)-constacyclic code vC1 + (1 - v)C2.

    Attributes:
        alpha: The constant part of lambda.
        beta: The v part of lambda.
        c1: The skew (alpha + beta)-constacyclic component.
        c2: The skew alpha-constacyclic component.
    """

    alpha: FieldElem
    beta: FieldElem
    c1: SkewConstaCode
    c2: SkewConstaCode

    @property
    def n(self) -> int:
        return self.c1.n

    @property
    def field(self) -> FieldSpec:
        return self.alpha.owner

    @property
    def g1(self) -> SkewPoly:
        return self.c1.g

    @property
    def g2(self) -> SkewPoly:
        return self.c2.g

    @property
    def lam(self) -> RingElem:
        return RingElem(self.alpha, self.beta)

    @property
    def cardinality(self) -> int:
        return self.field.order ** (2 * self.n - self.g1.degree - self.g2.degree)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RSkewCode):
            return NotImplemented
        return (self.c1, self.c2) == (other.c1, other.c2)

    def __hash__(self) -> int:
        return hash((self.c1, self.c2))

    def __repr__(self) -> str:
        return f"RSkewCode(n={self.n}, lambda={self.lam}, g1={self.g1}, g2={self.g2})"

    def stacked_generator(self) -> tuple[galois.FieldArray, galois.FieldArray]:
        """The matrix [vG1; (1 - v)G2] as the pair (A, B) with entries A + vB."""
        g1 = self.c1.base.generator
        g2 = self.c2.base.generator
        zeros = self.field.array(np.zeros(g1.shape, dtype=np.int64))
        a = np.concatenate((zeros, g2))
        b = np.concatenate((g1, -g2))
        return a, b

    def gray_generator(self) -> galois.FieldArray:
        """The block matrix diag(G2, G1) generating the Gray image."""
        g1 = self.c1.base.generator
        g2 = self.c2.base.generator
        n = self.n
        top = np.zeros((g2.shape[0], 2 * n), dtype=np.int64)
        bottom = np.zeros((g1.shape[0], 2 * n), dtype=np.int64)
        top[:, :n] = g2.view(np.ndarray)
        bottom[:, n:] = g1.view(np.ndarray)
        return self.field.array(np.concatenate((top, bottom)))

    def gray_image(self) -> LinearCode:
        return LinearCode(self.field, self.gray_generator(), 2 * self.n)

    def to_dict(self, w_max: int | None = None) -> dict[str, Any]:
        """JSON-ready description extending the component code records."""
        lcd = codes.lcd_verdicts(self, r_is_lcd)
        return {
            "field": repr(self.field),
            "r": self.g1.r,
            "n": self.n,
            "alpha": str(self.alpha),
            "beta": str(self.beta),
            "g1": str(self.g1),
            "g2": str(self.g2),
            "gray": {"params": str(gray_params(self, w_max)), "lcd": lcd},
        }


def r_code(
    ring: SkewPolyRing,
    n: int,
    alpha: FieldElem | int | str,
    beta: FieldElem | int | str,
    g1: SkewPoly,
    g2: SkewPoly,
) -> RSkewCode:
    """The code generated by v g1 + (1 - v) g2.

    Args:
        ring: The skew polynomial ring over F_q.
        n: The length.
        alpha: The constant part of lambda.
        beta: The v part of lambda.
        g1: A right divisor of x^n - (alpha + beta).
        g2: A right divisor of x^n - alpha.

    Returns:
        RSkewCode: The code.
    """
    alpha = ring.field(alpha)
    beta = ring.field(beta)
    c1 = codes.from_generator_poly(ring.modulus(n, alpha + beta), g1)
    c2 = codes.from_generator_poly(ring.modulus(n, alpha), g2)
    return RSkewCode(alpha, beta, c1, c2)


def r_code_from_components(c1: SkewConstaCode, c2: SkewConstaCode) -> RSkewCode:
    alpha = c2.lam
    return RSkewCode(alpha, c1.lam - alpha, c1, c2)


def r_is_lcd(code: RSkewCode, inner: Inner | str = Inner.EUCLIDEAN) -> bool:
    """LCD test by the gcrd criterion on both components, checked on the Gray image.

    Args:
        code: The code over R.
        inner: The inner product.

    Returns:
        bool: Whether the code is LCD.
    """
    verdict = codes.is_skew_lcd(code.c1, inner) and codes.is_skew_lcd(code.c2, inner)
    if verdict != codes.is_lcd_matrix(code.gray_image(), inner):
        message = f"The component and Gray image LCD tests disagree on {code}."
        logger.exception(message)
        raise errors.CriterionMismatchError(message)
    return verdict


def r_hull_dim(code: RSkewCode, inner: Inner | str = Inner.EUCLIDEAN) -> int:
    """Hull dimension over F_q, the sum of the component hull dimensions."""
    return codes.hull_dim(code.c1.base, inner) + codes.hull_dim(code.c2.base, inner)


def r_dual(code: RSkewCode, inner: Inner | str = Inner.EUCLIDEAN) -> RSkewCode:
    """The dual vC1^perp + (1 - v)C2^perp with skew reciprocal generators."""
    return r_code_from_components(
        codes.dual_generator(code.c1, inner),
        codes.dual_generator(code.c2, inner),
    )


def gray_params(code: RSkewCode, w_max: int | None = None) -> GrayParams:
    """The parameters [2n, k1 + k2, min(d1, d2)] of the Gray image.

    Args:
        code: The code over R.
        w_max: Largest weight of the bounded distance search.

    Returns:
        GrayParams: The parameters.
    """
    distances = [
        codes.min_distance_bounded(component.base, w_max)
        for component in (code.c1, code.c2)
        if component.k
    ]
    if not distances:
        message = "The zero code has no minimum distance."
        logger.exception(message)
        raise errors.ZeroCodeError(message)
    smallest = min(distances, key=lambda d: (d.value, not d.exact))
    return GrayParams(2 * code.n, code.c1.k + code.c2.k, smallest)


def r_span(code: RSkewCode) -> LinearCode:
    """The code over R as an F_q-linear code in the coordinates (a | b).

    The R-span of the stacked rows is the F_q-span of every row and its
    multiple by v.
    """
    a, b = code.stacked_generator()
    rows = np.concatenate((a.view(np.ndarray), b.view(np.ndarray)), axis=1)
    v_rows = np.concatenate(
        (np.zeros_like(a.view(np.ndarray)), (a + b).view(np.ndarray)),
        axis=1,
    )
    return LinearCode(code.field, np.concatenate((rows, v_rows)), 2 * code.n)


def r_codewords(code: RSkewCode, budget: int | None = None) -> list[list[RingElem]]:
    """Every codeword of a small code over R."""
    field = code.field
    n = code.n
    words = r_span(code).codewords(budget).view(np.ndarray)
    return [
        [
            RingElem(field.element(int(row[i])), field.element(int(row[n + i])))
            for i in range(n)
        ]
        for row in words
    ]


def r_scale_equivalence(
    code: RSkewCode, delta: FieldElem, gamma: FieldElem
) -> RSkewCode:
    """Scale C2 by delta and C1 by gamma.

    Choosing delta^{[n]} = alpha^{-1} and gamma^{[n]} = (alpha + beta)^{-1}
    lands on a skew cyclic code over R.

    Args:
        code: The code over R.
        delta: A unit scaling the (1 - v) side.
        gamma: A unit scaling the v side.

    Returns:
        RSkewCode: The equivalent code.
    """
    return r_code_from_components(
        codes.scale_equivalence(code.c1, gamma),
        codes.scale_equivalence(code.c2, delta),
    )
