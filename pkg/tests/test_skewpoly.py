"""Tests for the skewpoly module."""
import itertools

import galois
import numpy as np
import pytest

from skew_lcd import errors, gf, skewpoly


def _random_poly(
    ring: skewpoly.SkewPolyRing,
    rng: np.random.Generator,
    max_degree: int,
) -> skewpoly.SkewPoly:
    return ring.random(rng, int(rng.integers(-1, max_degree + 1)))


def test_twisted_commutation(ring16: skewpoly.SkewPolyRing, f16: gf.FieldSpec) -> None:
    """Test that x a = theta(a) x."""
    w = f16.generator

    assert ring16.x * w == ring16.monomial(w**4, 1)
    assert w * ring16.x == ring16.monomial(w, 1)


def _ordinary_product(f: skewpoly.SkewPoly, g: skewpoly.SkewPoly) -> skewpoly.SkewPoly:
    field = f.owner.galois_field
    left = galois.Poly(list(f.values) or [0], field=field, order="asc")
    right = galois.Poly(list(g.values) or [0], field=field, order="asc")
    product = left * right
    return skewpoly.SkewPoly(f.ring, tuple(int(c) for c in product.coeffs[::-1]))


def test_products_over_the_fixed_field_commute(
    ring16: skewpoly.SkewPolyRing,
    rng: np.random.Generator,
) -> None:
    """Test that coefficients fixed by theta multiply as ordinary polynomials."""
    fixed = sorted(ring16.field.fixed_values(ring16.r))
    assert len(fixed) == 4

    for _ in range(200):
        f, g = (
            skewpoly.SkewPoly(ring16, tuple(int(v) for v in rng.choice(fixed, size)))
            for size in rng.integers(0, 6, 2)
        )
        assert skewpoly.skew_mul(f, g) == _ordinary_product(f, g)
        assert skewpoly.skew_mul(f, g) == skewpoly.skew_mul(g, f)


@pytest.mark.parametrize("field", ["GF(2^2)", "GF(3^2)"])
def test_even_powers_multiply_as_ordinary_polynomials(
    field: str,
    rng: np.random.Generator,
) -> None:
    """Test that x^2 is central when theta has order 2."""
    ring = skewpoly.skew_ring(gf.parse_field(field), 1)
    q = ring.field.order

    def even_poly() -> skewpoly.SkewPoly:
        values = [0] * (2 * int(rng.integers(0, 4)) + 1)
        values[::2] = [int(v) for v in rng.integers(0, q, len(values[::2]))]
        return skewpoly.SkewPoly(ring, tuple(values))

    for _ in range(200):
        f, g = even_poly(), even_poly()
        assert skewpoly.skew_mul(f, g) == _ordinary_product(f, g)


def test_parse_and_format(ring16: skewpoly.SkewPolyRing) -> None:
    """Test that polynomials print in descending order and parse back."""
    g = ring16.parse("w^6+x^2+w*x")

    assert str(g) == "x^2+w*x+w^6"
    assert ring16.parse(str(g)) == g
    assert str(ring16.parse("(1+w)*x")) == "w^4*x"
    assert str(ring16.zero) == "0"


def test_parse_negative_terms(ring9: skewpoly.SkewPolyRing) -> None:
    """Test that subtraction is read in the coefficient field."""
    f = ring9.parse("x^10-1")

    assert f == ring9.modulus(10, 1).poly
    assert str(f) == "x^10+2"


def test_parse_invalid(ring16: skewpoly.SkewPolyRing) -> None:
    """Test that malformed polynomials are rejected."""
    with pytest.raises(errors.ParseError):
        ring16.parse("")
    with pytest.raises(errors.ParseError):
        ring16.parse("x^2+")


@pytest.mark.parametrize(
    ("left", "right"),
    [
        ("x^2+w*x+w^9", "x^2+w*x+w^6"),
        ("x^3+w^12*x^2+x+w^12", "x+w^3"),
    ],
)
def test_factorizations_of_x4_minus_1(
    ring16: skewpoly.SkewPolyRing,
    left: str,
    right: str,
) -> None:
    """Test two factorizations of x^4 - 1 in F_16[x; a -> a^4]."""
    modulus = ring16.modulus(4, 1)
    g = ring16.parse(right)

    assert skewpoly.skew_mul(ring16.parse(left), g) == modulus.poly
    assert skewpoly.cofactor(g, modulus) == ring16.parse(left)


def test_factorization_of_x10_minus_1(ring9: skewpoly.SkewPolyRing) -> None:
    """Test a factorization of x^10 - 1 in F_9[x; a -> a^3]."""
    left = ring9.parse("x^4+w*x^2+1")
    right = ring9.parse("x^6+w^5*x^4+w*x^2+2")
    modulus = ring9.modulus(10, 1)

    quotient, remainder = skewpoly.right_divmod(modulus.poly, right)

    assert remainder.is_zero()
    assert quotient == left


def test_multiplication_is_not_commutative(ring16: skewpoly.SkewPolyRing) -> None:
    """Test that the ring is noncommutative."""
    f, g = ring16.parse("x+w"), ring16.parse("x+w^3")

    assert f * g != g * f


def test_ring_axioms(ring9: skewpoly.SkewPolyRing, rng: np.random.Generator) -> None:
    """Test associativity and distributivity on random polynomials."""
    for _ in range(1000):
        f, g, h = (_random_poly(ring9, rng, 4) for _ in range(3))
        assert (f * g) * h == f * (g * h)
        assert f * (g + h) == f * g + f * h
        assert (f + g) * h == f * h + g * h


def test_degree_is_additive(
    ring16: skewpoly.SkewPolyRing,
    rng: np.random.Generator,
) -> None:
    """Test that the ring has no zero divisors."""
    for _ in range(200):
        f, g = ring16.random(rng, 3), ring16.random(rng, 2)
        assert (f * g).degree == 5


def test_right_divmod_reconstructs(
    ring9: skewpoly.SkewPolyRing,
    rng: np.random.Generator,
) -> None:
    """Test that f = q g + r with deg r < deg g."""
    for _ in range(1000):
        f = _random_poly(ring9, rng, 7)
        g = ring9.random(rng, int(rng.integers(0, 4)))
        quotient, remainder = skewpoly.right_divmod(f, g)
        assert quotient * g + remainder == f
        assert remainder.degree < g.degree


def test_left_divmod_reconstructs(
    ring16: skewpoly.SkewPolyRing,
    rng: np.random.Generator,
) -> None:
    """Test that f = g q + r with deg r < deg g."""
    for _ in range(1000):
        f = _random_poly(ring16, rng, 7)
        g = ring16.random(rng, int(rng.integers(0, 4)))
        quotient, remainder = skewpoly.left_divmod(f, g)
        assert g * quotient + remainder == f
        assert remainder.degree < g.degree


def test_division_by_zero(ring4: skewpoly.SkewPolyRing) -> None:
    """Test that dividing by the zero polynomial fails."""
    with pytest.raises(errors.DivisionByZeroError):
        skewpoly.right_divmod(ring4.x, ring4.zero)
    with pytest.raises(ZeroDivisionError):
        skewpoly.left_divmod(ring4.x, ring4.zero)


@pytest.mark.parametrize("field", ["GF(2^2)", "GF(3^2)"])
def test_gcrd_is_greatest(field: str, rng: np.random.Generator) -> None:
    """Test the gcrd against every monic polynomial of degree at most 3."""
    ring = skewpoly.skew_ring(gf.parse_field(field), 1)
    q = ring.field.order
    candidates = [
        skewpoly.SkewPoly(ring, (*lower, 1))
        for degree in range(4)
        for lower in itertools.product(range(q), repeat=degree)
    ]
    for _ in range(100):
        common = ring.random(rng, int(rng.integers(0, 2)), monic=True)
        f = ring.random(rng, int(rng.integers(0, 3))) * common
        g = ring.random(rng, int(rng.integers(0, 3))) * common
        d = skewpoly.gcrd(f, g)
        assert d.is_monic()
        assert skewpoly.right_divides(d, f)
        assert skewpoly.right_divides(d, g)
        for c in candidates:
            if skewpoly.right_divides(c, f) and skewpoly.right_divides(c, g):
                assert skewpoly.right_divides(c, d)


def test_gcrd_edge_cases(ring4: skewpoly.SkewPolyRing) -> None:
    """Test the gcrd with zero arguments."""
    f = ring4.parse("w*x+1")

    assert skewpoly.gcrd(f, ring4.zero) == f.monic()
    with pytest.raises(errors.BothZeroError):
        skewpoly.gcrd(ring4.zero, ring4.zero)


def test_monic_of_zero(ring4: skewpoly.SkewPolyRing) -> None:
    """Test that the zero polynomial has no monic associate."""
    with pytest.raises(errors.ZeroPolynomialError):
        ring4.zero.monic()


def test_mixing_rings(
    ring4: skewpoly.SkewPolyRing,
    ring16: skewpoly.SkewPolyRing,
) -> None:
    """Test that polynomials of different rings do not combine."""
    with pytest.raises(errors.RingMismatchError):
        ring4.one + ring16.one


def test_skew_reciprocal(ring16: skewpoly.SkewPolyRing) -> None:
    """Test the coefficients theta^i(h_{k-i})."""
    h = ring16.parse("x^2+w*x+w^9")

    assert str(skewpoly.skew_reciprocal(h)) == "w^9*x^2+w^4*x+1"
    assert skewpoly.skew_reciprocal(h, monic=True).is_monic()
    with pytest.raises(errors.ZeroPolynomialError):
        skewpoly.skew_reciprocal(ring16.zero)


def test_conjugate(ring4: skewpoly.SkewPolyRing) -> None:
    """Test that conjugation squares coefficients over F_4."""
    assert str(skewpoly.conjugate(ring4.parse("x+w"))) == "x+w^2"


def test_conjugate_needs_even_degree() -> None:
    """Test that conjugation is undefined over a prime field."""
    ring = skewpoly.skew_ring(gf.parse_field("GF(3)"), 1)

    with pytest.raises(errors.OddExtensionDegreeError):
        skewpoly.conjugate(ring.x)


def test_center(ring16: skewpoly.SkewPolyRing) -> None:
    """Test membership in F_4[x^2], the center of F_16[x; a -> a^4]."""
    assert skewpoly.is_central(ring16.parse("x^2+w^5"))
    assert skewpoly.is_central(ring16.modulus(4, 1).poly)
    assert not skewpoly.is_central(ring16.parse("x+1"))
    assert not skewpoly.is_central(ring16.parse("x^2+w"))
    assert len(list(skewpoly.central_polynomials(ring16, 3))) == 4


def test_has_central_divisor(ring4: skewpoly.SkewPolyRing) -> None:
    """Test detection of central right divisors."""
    assert skewpoly.has_central_divisor(ring4.parse("x^2+1"))
    assert skewpoly.has_central_divisor(ring4.parse("x^3+w*x^2+x+w"))
    assert not skewpoly.has_central_divisor(ring4.parse("x+w"))
    assert not skewpoly.has_central_divisor(ring4.one)


def test_skew_generator_matrix(ring4: skewpoly.SkewPolyRing) -> None:
    """Test that row i holds the coefficients of x^i g."""
    matrix = skewpoly.skew_generator_matrix(ring4.parse("x+w"), 3)

    np.testing.assert_array_equal(matrix.view(np.ndarray), [[2, 1, 0], [0, 3, 1]])


def test_skew_generator_matrix_degree_too_high(ring4: skewpoly.SkewPolyRing) -> None:
    """Test that a generator longer than the code is rejected."""
    with pytest.raises(errors.NotADivisorError):
        skewpoly.skew_generator_matrix(ring4.parse("x^4+1"), 3)


def test_modulus(ring9: skewpoly.SkewPolyRing, f9: gf.FieldSpec) -> None:
    """Test the modulus x^n - lambda and its inverse."""
    modulus = ring9.modulus(4, "w")

    assert str(modulus.poly) == "x^4+w^5"
    assert modulus.inverse().lam == f9.parse_element("w^7")
    assert not modulus.is_central()
    assert ring9.modulus(4, -1).is_central()


def test_modulus_needs_unit(ring4: skewpoly.SkewPolyRing) -> None:
    """Test that lambda = 0 is rejected."""
    with pytest.raises(errors.NonUnitError):
        ring4.modulus(3, 0)


def test_cofactor_not_a_divisor(ring16: skewpoly.SkewPolyRing) -> None:
    """Test that x + w does not right-divide x^4 - 1, since N(w) = w^10."""
    with pytest.raises(errors.NotADivisorError):
        skewpoly.cofactor(ring16.parse("x+w"), ring16.modulus(4, 1))


def test_right_divisors_degree_one(ring16: skewpoly.SkewPolyRing) -> None:
    """Test that x - a divides x^4 - 1 exactly when a^{[4]} = 1."""
    divisors = skewpoly.right_divisors(ring16.modulus(4, 1), 1)

    assert {str(g) for g in divisors} == {"x+1", "x+w^3", "x+w^6", "x+w^9", "x+w^12"}
    assert divisors == sorted(divisors, key=lambda g: g.values)


def test_right_divisors_match_remainders(ring4: skewpoly.SkewPolyRing) -> None:
    """Test the vectorised scan against one division per candidate."""
    modulus = ring4.modulus(6, 1)
    expected = [
        skewpoly.SkewPoly(ring4, (*lower, 1))
        for lower in itertools.product(range(4), repeat=2)
    ]
    expected = [g for g in expected if skewpoly.right_divides(g, modulus.poly)]

    found = skewpoly.right_divisors(modulus, 2)

    def key(g: skewpoly.SkewPoly) -> tuple[int, ...]:
        return g.values

    assert sorted(found, key=key) == sorted(expected, key=key)


def test_right_divisors_trivial_degrees(ring4: skewpoly.SkewPolyRing) -> None:
    """Test degree zero and degrees above n."""
    modulus = ring4.modulus(3, 1)

    assert skewpoly.right_divisors(modulus, 0) == [ring4.one]
    assert skewpoly.right_divisors(modulus, 4) == []
    assert skewpoly.right_divisors_all(modulus, 0) == [ring4.one]


def test_right_divisors_budget(ring16: skewpoly.SkewPolyRing) -> None:
    """Test that a scan above the budget is refused."""
    with pytest.raises(errors.BudgetExceededError):
        skewpoly.right_divisors(ring16.modulus(4, 1), 4, budget=100)


@pytest.mark.slow()
def test_right_divisors_in_parallel(ring16: skewpoly.SkewPolyRing) -> None:
    """Test that worker processes find the same divisors."""
    modulus = ring16.modulus(4, 1)

    serial = skewpoly.right_divisors(modulus, 4, threads=1)
    parallel = skewpoly.right_divisors(modulus, 4, threads=2)

    assert parallel == serial
    assert serial == [modulus.poly]
