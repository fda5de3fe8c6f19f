"""Finite fields F_{p^t} and their Frobenius automorphisms.

Elements are stored as integers in the galois integer representation: the
base-p digits of the integer, least significant first, are the coefficients
of the residue class in F_p[z]/(m(z)).
"""
from __future__ import annotations

import dataclasses
import functools
import logging
import math
import re
from collections.abc import Iterator, Sequence

import galois
import numpy as np

from skew_lcd import config, errors

settings = config.get_settings()
logger = logging.getLogger(settings.LOGGER_NAME)

DEFAULT_MODULI: dict[tuple[int, int], tuple[int, ...]] = {
    (2, 2): (1, 1, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (3, 2): (2, 2, 1),
}

_FIELD_PATTERN = re.compile(
    r"^GF\(\s*(\d+)\s*(?:\^\s*(\d+))?\s*(?:;\s*([\d\s,]+))?\)$",
)


@functools.lru_cache(maxsize=None)
def field_create(
    p: int,
    t: int,
    modulus: tuple[int, ...],
    symbol: str = "w",
) -> FieldSpec:
    """Create, or fetch from the cache, the field F_p[z]/(modulus).

    Args:
        p: The characteristic.
        t: The extension degree.
        modulus: Ascending coefficients of the monic degree t modulus.
        symbol: Display name of the class of z.

    Returns:
        FieldSpec: The validated field.
    """
    return FieldSpec(p, t, modulus, symbol)


class FieldSpec:
    """The finite field F_{p^t} presented as F_p[z]/(m(z)).

    Scalar arithmetic goes through dense integer tables built once with
    galois; matrices and vectorised sweeps use `galois_field` directly.

    Attributes:
        p: The characteristic.
        t: The extension degree.
        order: The number of elements, p^t.
        modulus: Ascending coefficients of m(z).
        symbol: Display name of the class of z.
        generator_value: Integer representation of the class of z.
        generator_order: Multiplicative order of the class of z.
        galois_field: The galois FieldArray subclass of this field.
    """

    def __init__(
        self,
        p: int,
        t: int,
        modulus: Sequence[int],
        symbol: str = "w",
    ) -> None:
        """Validate the presentation and build the arithmetic tables.

        Args:
            p: The characteristic.
            t: The extension degree.
            modulus: Ascending coefficients of the monic degree t modulus.
            symbol: Display name of the class of z.
        """
        if p < 2 or not galois.is_prime(p):  # noqa: PLR2004
            message = f"The characteristic {p} is not a prime."
            logger.exception(message)
            raise errors.NotPrimeError(message)
        modulus = tuple(int(c) % p for c in modulus)
        if t < 1 or len(modulus) != t + 1 or modulus[-1] != 1:
            message = f"The modulus {modulus} is not monic of degree {t}."
            logger.exception(message)
            raise errors.DegreeMismatchError(message)
        prime_field = galois.GF(p)
        poly = galois.Poly(list(modulus), field=prime_field, order="asc")
        if not poly.is_irreducible():
            message = f"The modulus {poly} is reducible over F_{p}."
            logger.exception(message)
            raise errors.ReducibleModulusError(message)

        self.p = p
        self.t = t
        self.order = p**t
        self.modulus = modulus
        self.symbol = symbol
        if t == 1:
            self.galois_field = prime_field
            self.generator_value = (-modulus[0]) % p
        else:
            self.galois_field = galois.GF(p**t, irreducible_poly=poly)
            self.generator_value = p
        if self.generator_value == 0:
            self.generator_order = 0
        else:
            generator = self.galois_field(self.generator_value)
            self.generator_order = int(generator.multiplicative_order())

        self._build_tables()
        logger.debug("Created field %s.", self)

    def _build_tables(self) -> None:
        elements = self.galois_field.elements
        self._neg = (-elements).view(np.ndarray).tolist()
        self._inv = [0, *np.reciprocal(elements[1:]).view(np.ndarray).tolist()]
        if self.order <= settings.TABLE_ORDER_LIMIT:
            self._add: list[list[int]] | None = (
                (elements[:, None] + elements[None, :]).view(np.ndarray).tolist()
            )
            self._mul: list[list[int]] | None = (
                (elements[:, None] * elements[None, :]).view(np.ndarray).tolist()
            )
        else:
            self._add = None
            self._mul = None
        self._frobenius: dict[int, list[int]] = {}
        self._log: dict[int, int] = {}
        if self.is_primitive:
            powers = self.galois_field(self.generator_value) ** np.arange(
                self.order - 1,
            )
            self._log = {
                int(value): k
                for k, value in enumerate(powers.view(np.ndarray).tolist())
            }

    def __reduce__(self) -> tuple[object, tuple[int, int, tuple[int, ...], str]]:
        return field_create, (self.p, self.t, self.modulus, self.symbol)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FieldSpec):
            return NotImplemented
        return (self.p, self.t, self.modulus) == (other.p, other.t, other.modulus)

    def __hash__(self) -> int:
        return hash((self.p, self.t, self.modulus))

    def __repr__(self) -> str:
        coefficients = ",".join(str(c) for c in self.modulus)
        return f"GF({self.p}^{self.t}; {coefficients})"

    @property
    def is_primitive(self) -> bool:
        """Whether the class of z generates the multiplicative group."""
        return self.generator_order == self.order - 1

    @property
    def zero(self) -> FieldElem:
        return FieldElem(self, 0)

    @property
    def one(self) -> FieldElem:
        return FieldElem(self, 1)

    @property
    def generator(self) -> FieldElem:
        return FieldElem(self, self.generator_value)

    def element(self, value: int) -> FieldElem:
        """Wrap an integer in the galois representation as an element.

        Args:
            value: An integer in [0, order).

        Returns:
            FieldElem: The element.
        """
        if not 0 <= value < self.order:
            message = f"{value} is not an element of {self}."
            logger.exception(message)
            raise errors.ParseError(message)
        return FieldElem(self, int(value))

    def __call__(self, value: FieldElem | int | str) -> FieldElem:
        """Coerce a value into the field.

        Integers are read as elements of the prime subfield, strings are
        parsed with `parse_element`.
        """
        if isinstance(value, FieldElem):
            if value.owner != self:
                message = f"{value} belongs to {value.owner}, not to {self}."
                logger.exception(message)
                raise errors.FieldMismatchError(message)
            return value
        if isinstance(value, str):
            return self.parse_element(value)
        return FieldElem(self, int(value) % self.p)

    def elements(self) -> list[FieldElem]:
        """All elements in the order of their integer representation."""
        return [FieldElem(self, value) for value in range(self.order)]

    def random(self, rng: np.random.Generator, *, nonzero: bool = False) -> FieldElem:
        """Draw a uniformly random element.

        Args:
            rng: The random number generator.
            nonzero: Draw from the multiplicative group instead.

        Returns:
            FieldElem: The drawn element.
        """
        low = 1 if nonzero else 0
        return FieldElem(self, int(rng.integers(low, self.order)))

    def array(self, values: object) -> galois.FieldArray:
        """Convert integer representations into a galois array of this field."""
        return self.galois_field(np.asarray(values, dtype=np.int64))

    def digits(self, value: int) -> tuple[int, ...]:
        """Ascending coefficients of an element as a polynomial in z."""
        return tuple((value // self.p**i) % self.p for i in range(self.t))

    def add(self, a: int, b: int) -> int:
        if self._add is not None:
            return self._add[a][b]
        return int(self.galois_field(a) + self.galois_field(b))

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self._neg[b])

    def neg(self, a: int) -> int:
        return self._neg[a]

    def mul(self, a: int, b: int) -> int:
        if self._mul is not None:
            return self._mul[a][b]
        return int(self.galois_field(a) * self.galois_field(b))

    def inv(self, a: int) -> int:
        if a == 0:
            message = f"Zero has no inverse in {self}."
            logger.exception(message)
            raise errors.DivisionByZeroError(message)
        return self._inv[a]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def power(self, a: int, k: int) -> int:
        """Raise an element to an integer power by repeated squaring."""
        if k < 0:
            a, k = self.inv(a), -k
        result = 1
        while k:
            if k & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            k >>= 1
        return result

    def frobenius_table(self, r: int) -> list[int]:
        """The map a -> a^{p^r} as a lookup list; r is read modulo t."""
        r %= self.t
        if r not in self._frobenius:
            exponent = self.p**r
            images = self.galois_field.elements**exponent
            self._frobenius[r] = images.view(np.ndarray).tolist()
        return self._frobenius[r]

    def frobenius(self, a: int, r: int) -> int:
        return self.frobenius_table(r)[a]

    def fixed_values(self, r: int) -> frozenset[int]:
        """Integer representations of the fixed field of a -> a^{p^r}."""
        table = self.frobenius_table(r)
        return frozenset(a for a in range(self.order) if table[a] == a)

    def log(self, a: int) -> int:
        """Discrete logarithm to the base of the class of z."""
        if a not in self._log:
            message = f"{a} has no logarithm to the base {self.symbol} in {self}."
            logger.exception(message)
            raise errors.ParseError(message)
        return self._log[a]

    def format(self, a: int) -> str:
        """Display an element: prime subfield as integers, else w^k or tuple form."""
        if a < self.p:
            return str(a)
        if self.is_primitive:
            k = self._log[a]
            return self.symbol if k == 1 else f"{self.symbol}^{k}"
        terms = []
        for i, c in enumerate(self.digits(a)):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
                continue
            monomial = self.symbol if i == 1 else f"{self.symbol}^{i}"
            terms.append(monomial if c == 1 else f"{c}*{monomial}")
        return "+".join(terms)

    def parse_element(self, text: str) -> FieldElem:
        """Parse "w^k", an integer or a sum such as "1+2*w+w^3".

        Args:
            text: The text to parse.

        Returns:
            FieldElem: The parsed element.
        """
        cleaned = text.replace(" ", "")
        if not cleaned:
            message = "Cannot parse an empty field element."
            logger.exception(message)
            raise errors.ParseError(message)
        term_pattern = re.compile(
            rf"^(\d+)?\*?({re.escape(self.symbol)}(?:\^(-?\d+))?)?$",
        )
        value = 0
        negative = False
        for index, term in enumerate(re.split(r"(?<!\^)([+-])", cleaned)):
            if term in ("+", "-"):
                negative = term == "-"
                continue
            if not term and index == 0:
                continue
            match = term_pattern.match(term)
            if match is None or not term or term.endswith("*"):
                message = f"Cannot parse the field element {text!r}."
                logger.exception(message)
                raise errors.ParseError(message)
            coefficient_text, monomial, exponent_text = match.groups()
            coefficient = int(coefficient_text) % self.p if coefficient_text else 1
            if monomial is None:
                term_value = coefficient
            else:
                exponent = int(exponent_text) if exponent_text else 1
                term_value = self.mul(
                    coefficient,
                    self.power(self.generator_value, exponent),
                )
            if negative:
                term_value = self.neg(term_value)
            value = self.add(value, term_value)
        return FieldElem(self, value)


@dataclasses.dataclass(frozen=True)
class FieldElem:
    """An element of a FieldSpec.

    Attributes:
        owner: The field the element belongs to.
        value: The galois integer representation of the element.
    """

    owner: FieldSpec
    value: int

    def _coerce(self, other: object) -> int:
        if isinstance(other, FieldElem):
            if other.owner != self.owner:
                message = f"Cannot combine elements of {self.owner} and {other.owner}."
                logger.exception(message)
                raise errors.FieldMismatchError(message)
            return other.value
        if isinstance(other, int):
            return other % self.owner.p
        return NotImplemented

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.owner.digits(self.value)

    def __add__(self, other: object) -> FieldElem:
        b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        return FieldElem(self.owner, self.owner.add(self.value, b))

    __radd__ = __add__

    def __sub__(self, other: object) -> FieldElem:
        b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        return FieldElem(self.owner, self.owner.sub(self.value, b))

    def __rsub__(self, other: object) -> FieldElem:
        return -self + other

    def __neg__(self) -> FieldElem:
        return FieldElem(self.owner, self.owner.neg(self.value))

    def __mul__(self, other: object) -> FieldElem:
        b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        return FieldElem(self.owner, self.owner.mul(self.value, b))

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> FieldElem:
        b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        return FieldElem(self.owner, self.owner.div(self.value, b))

    def __pow__(self, k: int) -> FieldElem:
        return FieldElem(self.owner, self.owner.power(self.value, k))

    def __bool__(self) -> bool:
        return self.value != 0

    def __str__(self) -> str:
        return self.owner.format(self.value)

    def __repr__(self) -> str:
        return f"FieldElem({self})"

    def inv(self) -> FieldElem:
        return FieldElem(self.owner, self.owner.inv(self.value))

    def frobenius(self, r: int) -> FieldElem:
        return FieldElem(self.owner, self.owner.frobenius(self.value, r))


@dataclasses.dataclass(frozen=True)
class Automorphism:
    """The Frobenius power theta_r: a -> a^{p^r} of a field.

    Attributes:
        spec: The field acted on.
        r: The power of the Frobenius map.
    """

    spec: FieldSpec
    r: int

    def __call__(self, a: FieldElem) -> FieldElem:
        return FieldElem(self.spec, self.spec.frobenius(self.spec(a).value, self.r))

    @property
    def order(self) -> int:
        return self.spec.t // math.gcd(self.spec.t, self.r)

    @property
    def is_identity(self) -> bool:
        return self.r % self.spec.t == 0

    def power(self, i: int) -> Automorphism:
        return Automorphism(self.spec, (self.r * i) % self.spec.t)

    def inverse(self) -> Automorphism:
        return self.power(self.order - 1)

    def fixed_field(self) -> set[FieldElem]:
        return fixed_subfield(self.spec, self.r)


def arith(a: FieldElem, b: FieldElem | int | None, op: str) -> FieldElem:
    """Dispatch a field operation by name.

    Args:
        a: The left operand.
        b: The right operand, or the exponent for "pow"; ignored for "inv".
        op: One of "add", "mul", "inv" and "pow".

    Returns:
        FieldElem: The result.
    """
    match op:
        case "add":
            return a + b
        case "mul":
            return a * b
        case "inv":
            return a.inv()
        case "pow":
            return a ** int(b)  # type: ignore[arg-type]
    message = f"Unknown field operation {op!r}."
    logger.exception(message)
    raise errors.ParseError(message)


def frobenius(a: FieldElem, r: int) -> FieldElem:
    """Apply theta_r: a -> a^{p^r}."""
    return a.frobenius(r)


def fixed_subfield(spec: FieldSpec, r: int) -> set[FieldElem]:
    """All elements fixed by a -> a^{p^r}.

    Args:
        spec: The field.
        r: The power of the Frobenius map.

    Returns:
        set[FieldElem]: The fixed subfield, of size p^{gcd(r, t)}.
    """
    return {FieldElem(spec, value) for value in spec.fixed_values(r)}


def norm(a: FieldElem, r: int, n: int) -> FieldElem:
    """The product theta^{n-1}(a) ... theta(a) a.

    This is the remainder constant of x^n on right division by x - a.
    """
    spec = a.owner
    value = 1
    for i in range(n):
        value = spec.mul(value, spec.frobenius(a.value, r * i))
    return FieldElem(spec, value)


def default_modulus(p: int, t: int) -> tuple[int, ...]:
    """The shipped modulus for F_{p^t}, or the galois default when none is shipped."""
    if (p, t) in DEFAULT_MODULI:
        return DEFAULT_MODULI[(p, t)]
    if not galois.is_prime(p):
        message = f"The characteristic {p} is not a prime."
        logger.exception(message)
        raise errors.NotPrimeError(message)
    if t == 1:
        return ((-int(galois.primitive_root(p))) % p, 1)
    poly = galois.GF(p**t).irreducible_poly
    return tuple(int(c) for c in poly.coeffs[::-1])


def parse_field(text: str, symbol: str = "w") -> FieldSpec:
    """Parse "GF(p^t; m0,...,mt)", "GF(p^t)" or "GF(p)".

    Args:
        text: The field description.
        symbol: Display name of the class of z.

    Returns:
        FieldSpec: The field.
    """
    match = _FIELD_PATTERN.match(text.strip())
    if match is None:
        message = f"Cannot parse the field {text!r}."
        logger.exception(message)
        raise errors.ParseError(message)
    p = int(match.group(1))
    t = int(match.group(2)) if match.group(2) else 1
    if match.group(3):
        modulus = tuple(int(c) for c in match.group(3).split(",") if c.strip())
    else:
        modulus = default_modulus(p, t)
    return field_create(p, t, modulus, symbol)


def split_terms(text: str) -> Iterator[tuple[bool, str]]:
    """Split a sum at top-level signs, skipping signs of exponents.

    Args:
        text: The text, without spaces.

    Yields:
        tuple[bool, str]: Whether the term is negated, and the term.
    """
    depth = 0
    start = 0
    negative = False
    for index, char in enumerate(text):
        if char == "(":
            depth += 1
        elif char == ")":
            depth -= 1
        elif char in "+-" and depth == 0 and (index == 0 or text[index - 1] != "^"):
            if index > start:
                yield negative, text[start:index]
            negative = char == "-"
            start = index + 1
    if start >= len(text) or depth != 0:
        message = f"Cannot parse {text!r}."
        logger.exception(message)
        raise errors.ParseError(message)
    yield negative, text[start:]
