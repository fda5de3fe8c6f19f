"""Tests for the ring_r module."""
import itertools

import numpy as np
import pytest
from pytest_mock import plugin

from skew_lcd import codes, errors, gf, ring_r, skewpoly
from skew_lcd.codes import Inner


@pytest.fixture()
def r4(f4: gf.FieldSpec) -> ring_r.RingR:
    """Return F_4+vF_4."""
    return ring_r.RingR(f4)


@pytest.fixture()
def r9(f9: gf.FieldSpec) -> ring_r.RingR:
    """Return F_9+vF_9."""
    return ring_r.RingR(f9)


@pytest.fixture()
def small_code(ring4: skewpoly.SkewPolyRing) -> ring_r.RSkewCode:
    """Return the skew cyclic code <v(x+w^2) + (1-v)(x+w)> of length 2."""
    return ring_r.r_code(ring4, 2, 1, 0, ring4.parse("x+w^2"), ring4.parse("x+w"))


@pytest.mark.parametrize(
    ("text", "expected"),
    [
        ("v", "v"),
        ("1-v", "1+v*2"),
        ("1-2v", "1+v"),
        ("w+v*w^3", "w+v*w^3"),
        ("2*v", "v*2"),
        ("w^2*v", "v*w^2"),
        ("v*(1+w)", "v*w^2"),
        ("-1", "2"),
    ],
)
def test_parse_ring_element(r9: ring_r.RingR, text: str, expected: str) -> None:
    """Test parsing and printing elements of F_9+vF_9."""
    assert str(r9.parse(text)) == expected


def test_parse_empty_ring_element(r9: ring_r.RingR) -> None:
    """Test that an empty element is rejected."""
    with pytest.raises(errors.ParseError):
        r9.parse(" ")


def test_idempotents(r4: ring_r.RingR) -> None:
    """Test that v and 1 - v are orthogonal idempotents."""
    v = r4.v
    u = r4.one - v

    assert v * v == v
    assert u * u == u
    assert v * u == r4.zero
    assert v + u == r4.one


def test_non_units(r4: ring_r.RingR, mocker: plugin.MockerFixture) -> None:
    """Test that zero divisors have no inverse."""
    mock_exception = mocker.patch.object(ring_r.logger, "exception")

    with pytest.raises(errors.NonUnitError):
        r4.v.inv()

    mock_exception.assert_called_once()
    assert not (r4.one - r4.v).is_unit()


def test_ring_axioms(r9: ring_r.RingR, rng: np.random.Generator) -> None:
    """Test commutativity, distributivity and inverses on random elements."""
    for _ in range(1000):
        x, y, z = r9.random(rng), r9.random(rng), r9.random(rng)
        assert x * (y + z) == x * y + x * z
        assert (x * y) * z == x * (y * z)
        assert x * y == y * x
        if x.is_unit():
            assert x * x.inv() == r9.one


def test_crt_decomposition(r9: ring_r.RingR, rng: np.random.Generator) -> None:
    """Test that the CRT split is a ring isomorphism onto F_q x F_q."""
    for _ in range(1000):
        x, y = r9.random(rng), r9.random(rng)
        assert ring_r.crt_join(*ring_r.crt_split(x)) == x
        (xu, xz), (yu, yz) = ring_r.crt_split(x), ring_r.crt_split(y)
        assert ring_r.crt_split(x * y) == (xu * yu, xz * yz)
        assert ring_r.crt_split(x + y) == (xu + yu, xz + yz)


def test_conjugate(r9: ring_r.RingR, f9: gf.FieldSpec) -> None:
    """Test that conjugation fixes v and acts on both parts."""
    x = r9.element("w", "w^2")

    assert r9.v.conjugate() == r9.v
    expected = ring_r.RingElem(f9.parse_element("w^3"), f9.parse_element("w^6"))
    assert x.conjugate() == expected


def test_conjugate_needs_even_degree() -> None:
    """Test that conjugation is undefined over a prime field."""
    ring = ring_r.RingR(gf.parse_field("GF(3)"))

    with pytest.raises(errors.OddExtensionDegreeError):
        ring.v.conjugate()


@pytest.mark.parametrize(
    ("op", "expected"),
    [("add", "w+v*w^2"), ("mul", "v*w"), ("inv", "1+v")],
)
def test_r_arith(r9: ring_r.RingR, op: str, expected: str) -> None:
    """Test dispatching ring operations by name."""
    x = r9.parse("1+v") if op == "inv" else r9.parse("w")
    y = r9.parse("v*w^2") if op == "add" else r9.v

    assert ring_r.r_arith(x, y, op) == r9.parse(expected)


def test_r_arith_unknown_operation(r9: ring_r.RingR) -> None:
    """Test that an unknown operation is rejected."""
    with pytest.raises(errors.ParseError):
        ring_r.r_arith(r9.one, r9.one, "div")


def test_r_lambda(f9: gf.FieldSpec) -> None:
    """Test the three named constants over F_9."""
    assert ring_r.r_lambda(f9, "1") == ring_r.RingElem(f9.one, f9.zero)
    assert ring_r.r_lambda(f9, "-1") == ring_r.RingElem(f9(2), f9.zero)
    assert ring_r.r_lambda(f9, "1-2v") == ring_r.RingElem(f9.one, f9.one)


def test_r_lambda_invalid(f4: gf.FieldSpec, f9: gf.FieldSpec) -> None:
    """Test that 1 - 2v needs odd characteristic and other names are unknown."""
    with pytest.raises(errors.CharacteristicTwoWithOneMinusTwoVError):
        ring_r.r_lambda(f4, "1-2v")
    with pytest.raises(errors.UnsupportedVariantError):
        ring_r.r_lambda(f9, "v")


def test_gray_map_is_linear_isometry(
    r9: ring_r.RingR,
    rng: np.random.Generator,
) -> None:
    """Test linearity, the Lee weight identity and the inverse of the Gray map."""
    for _ in range(1000):
        x, y = r9.random_vector(rng, 5), r9.random_vector(rng, 5)
        total = [a + b for a, b in zip(x, y, strict=True)]
        np.testing.assert_array_equal(
            ring_r.gray_map(total),
            ring_r.gray_map(x) + ring_r.gray_map(y),
        )
        image = ring_r.gray_map(x)
        assert ring_r.lee_weight(x) == np.count_nonzero(image.view(np.ndarray))
        assert ring_r.gray_inverse(r9.field, image.tolist()) == x


def test_r_code_components(small_code: ring_r.RSkewCode, f4: gf.FieldSpec) -> None:
    """Test the components and dimensions of a code over R."""
    assert small_code.lam == ring_r.RingElem(f4.one, f4.zero)
    assert small_code.c1.k == 1
    assert small_code.c2.k == 1
    assert small_code.cardinality == 16
    assert small_code.gray_image().k == 2


def test_r_code_not_a_divisor(ring16: skewpoly.SkewPolyRing) -> None:
    """Test that both generators must divide their moduli."""
    with pytest.raises(errors.NotADivisorError):
        ring_r.r_code(ring16, 4, 1, 0, ring16.parse("x+w^3"), ring16.parse("x+w"))


@pytest.mark.parametrize("n", [2, 4])
def test_cardinality_law(ring4: skewpoly.SkewPolyRing, n: int) -> None:
    """Test |C| = q^(2n - deg g1 - deg g2) and the Gray image of every codeword."""
    modulus = ring4.modulus(n, 1)
    divisors = list(skewpoly.right_divisors_all(modulus, n))
    for g1 in divisors:
        for g2 in divisors:
            code = ring_r.r_code(ring4, n, 1, 0, g1, g2)
            words = ring_r.r_codewords(code)
            assert len(words) == code.cardinality
            image = code.gray_image()
            assert image.cardinality == code.cardinality
            for word in words[:16]:
                assert image.contains(ring_r.gray_map(word))


def test_gray_image_is_quasi_twisted(
    ring9: skewpoly.SkewPolyRing,
    f9: gf.FieldSpec,
) -> None:
    """Test that the Gray image of a (1 - 2v)-constacyclic code is quasi-twisted."""
    lam = ring_r.r_lambda(f9, "1-2v")
    first = skewpoly.right_divisors(ring9.modulus(4, lam.a + lam.b), 2)[0]
    second = skewpoly.right_divisors(ring9.modulus(4, lam.a), 1)[0]
    code = ring_r.r_code(ring9, 4, lam.a, lam.b, first, second)
    image = code.gray_image()

    for row in image.generator:
        shifted = ring_r.quasi_cyclic_shift(row, 4, lam.a, lam.a + lam.b, 1)
        assert image.contains(shifted)


@pytest.mark.parametrize("n", [2, 4, pytest.param(6, marks=pytest.mark.slow())])
def test_r_dual_matches_gray_dual(ring4: skewpoly.SkewPolyRing, n: int) -> None:
    """Test duals, hulls and LCD verdicts of every divisor pair over F_4+vF_4."""
    divisors = skewpoly.right_divisors_all(ring4.modulus(n, 1), n)
    for g1, g2 in itertools.product(divisors, repeat=2):
        code = ring_r.r_code(ring4, n, 1, 0, g1, g2)
        image = code.gray_image()
        for inner in Inner:
            assert ring_r.r_dual(code, inner).gray_image() == codes.dual(image, inner)
            assert ring_r.r_hull_dim(code, inner) == codes.hull_dim(image, inner)
            assert ring_r.r_is_lcd(code, inner) == codes.is_lcd_matrix(image, inner)


def test_r_is_lcd(ring4: skewpoly.SkewPolyRing) -> None:
    """Test that the code over R is LCD exactly when both components are."""
    lcd = ring_r.r_code(ring4, 6, 1, 0, ring4.parse("x+w^2"), ring4.parse("x+w"))
    mixed = ring_r.r_code(ring4, 2, 1, 0, ring4.parse("x+w^2"), ring4.parse("x+1"))

    assert ring_r.r_is_lcd(lcd)
    assert ring_r.r_hull_dim(lcd) == 0
    assert not ring_r.r_is_lcd(mixed)
    assert ring_r.r_hull_dim(mixed) == 1


def test_r_is_lcd_mismatch(
    small_code: ring_r.RSkewCode,
    mocker: plugin.MockerFixture,
) -> None:
    """Test that disagreeing component and Gray image tests raise."""
    verdict = ring_r.r_is_lcd(small_code)
    mocker.patch(
        "skew_lcd.codes.is_lcd_matrix",
        side_effect=[verdict, verdict, not verdict],
    )

    with pytest.raises(errors.CriterionMismatchError):
        ring_r.r_is_lcd(small_code)


def test_gray_params(ring4: skewpoly.SkewPolyRing) -> None:
    """Test the parameters [2n, k1 + k2, d] of a Gray image."""
    code = ring_r.r_code(ring4, 6, 1, 0, ring4.parse("x+w^2"), ring4.parse("x+w"))

    assert str(ring_r.gray_params(code)) == "[12,10,2]"
    assert str(ring_r.gray_params(code, w_max=1)) == "[12,10,>=2]"


def test_gray_params_zero_code(ring4: skewpoly.SkewPolyRing) -> None:
    """Test that the zero code has no parameters."""
    modulus = ring4.modulus(2, 1)
    code = ring_r.r_code(ring4, 2, 1, 0, modulus.poly, modulus.poly)

    with pytest.raises(errors.ZeroCodeError):
        ring_r.gray_params(code)


def test_r_scale_equivalence(ring16: skewpoly.SkewPolyRing, f16: gf.FieldSpec) -> None:
    """Test scaling a skew cyclic code over R to a (w^5 + v w^10)-constacyclic one."""
    g1, g2 = ring16.parse("x+w^3"), ring16.parse("x^2+w*x+w^6")
    cyclic = ring_r.r_code(ring16, 4, 1, 0, g1, g2)

    delta, gamma = f16.parse_element("w^2"), f16.parse_element("w^3")
    image = ring_r.r_scale_equivalence(cyclic, delta, gamma)

    lam = ring_r.RingElem(f16.parse_element("w^5"), f16.parse_element("w^10"))
    assert image.lam == lam
    assert str(image.g1) == "x+w^6"
    assert str(image.g2) == "x^2+w^9*x+w"
    assert image.cardinality == cyclic.cardinality


def test_r_code_to_dict(small_code: ring_r.RSkewCode) -> None:
    """Test the JSON description of a code over R."""
    record = small_code.to_dict()

    assert record["g1"] == "x+w^2"
    assert record["g2"] == "x+w"
    assert record["alpha"] == "1"
    assert record["beta"] == "0"
    assert record["gray"]["params"].startswith("[4,2,")
    assert set(record["gray"]["lcd"]) == {"euclidean", "hermitian"}
