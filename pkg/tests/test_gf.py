"""Tests for the gf module."""
import pickle

import numpy as np
import pytest
from pytest_mock import plugin

from skew_lcd import errors, gf


def test_parse_field_default_modulus(f16: gf.FieldSpec) -> None:
    """Test that the shipped modulus of F_16 is z^4 + z + 1."""
    assert f16.order == 16
    assert repr(f16) == "GF(2^4; 1,1,0,0,1)"
    assert f16.is_primitive


def test_parse_field_explicit_modulus() -> None:
    """Test a field given with its modulus."""
    field = gf.parse_field("GF(3^2; 1,0,1)")

    assert field.modulus == (1, 0, 1)
    assert not field.is_primitive
    assert field.generator_order == 4


def test_parse_field_prime() -> None:
    """Test that GF(p) presents the prime field with a primitive element."""
    field = gf.parse_field("GF(5)")

    assert field.t == 1
    assert field.is_primitive
    assert str(field.generator) == "2"


def test_parse_field_without_shipped_modulus() -> None:
    """Test that fields without a shipped modulus fall back to galois."""
    field = gf.parse_field("GF(5^2)")

    assert field.order == 25
    assert field.is_primitive


@pytest.mark.parametrize(
    ("text", "error"),
    [
        ("GF(4^2)", errors.NotPrimeError),
        ("GF(2^2; 1,0,1)", errors.ReducibleModulusError),
        ("GF(2^2; 1,1)", errors.DegreeMismatchError),
        ("GF(3^2; 2,2,2)", errors.DegreeMismatchError),
        ("GF(2^)", errors.ParseError),
        ("F_16", errors.ParseError),
    ],
)
def test_parse_field_invalid(text: str, error: type[Exception]) -> None:
    """Test that invalid presentations are rejected."""
    with pytest.raises(error):
        gf.parse_field(text)


def test_invalid_field_logs(mocker: plugin.MockerFixture) -> None:
    """Test that a rejected field is logged before raising."""
    mock_exception = mocker.patch.object(gf.logger, "exception")

    with pytest.raises(errors.NotPrimeError):
        gf.FieldSpec(6, 1, (0, 1))

    mock_exception.assert_called_once()


def test_field_is_picklable(f16: gf.FieldSpec) -> None:
    """Test that fields survive pickling, as worker processes need."""
    restored = pickle.loads(pickle.dumps(f16))  # noqa: S301

    assert restored == f16
    assert restored.parse_element("w^7") == f16.parse_element("w^7")


def test_sum_of_w5_and_w10_is_one(f16: gf.FieldSpec) -> None:
    """Test the relation behind the constant w^5 + v w^10."""
    w = f16.generator

    assert w**5 + w**10 == f16.one


@pytest.mark.parametrize(
    ("text", "expected"),
    [
        ("w^15", "1"),
        ("w^-1", "w^14"),
        ("1+w", "w^4"),
        ("w^2+w", "w^5"),
        ("w^2+w+1", "w^10"),
        ("0", "0"),
        ("-w", "w"),
    ],
)
def test_parse_and_format_f16(f16: gf.FieldSpec, text: str, expected: str) -> None:
    """Test parsing and printing elements of F_16."""
    assert str(f16.parse_element(text)) == expected


def test_parse_and_format_f9(f9: gf.FieldSpec) -> None:
    """Test that F_9 prints prime subfield elements as integers."""
    assert str(f9.parse_element("w^4")) == "2"
    assert str(f9.parse_element("1+w")) == "w^2"
    assert f9.parse_element("-1") == f9.parse_element("2")
    assert f9.parse_element("2*w") == f9.parse_element("w^5")


def test_format_tuple_form() -> None:
    """Test that a non-primitive modulus prints elements as sums."""
    field = gf.parse_field("GF(3^2; 1,0,1)")
    element = field.parse_element("1+w")

    assert str(element) == "1+w"
    assert str(field.parse_element("w^2")) == "2"
    assert str(field.parse_element("2*w")) == "2*w"


@pytest.mark.parametrize("text", ["", "x", "w^", "2*", "w+*"])
def test_parse_element_invalid(f16: gf.FieldSpec, text: str) -> None:
    """Test that malformed elements are rejected."""
    with pytest.raises(errors.ParseError):
        f16.parse_element(text)


def test_element_out_of_range(f4: gf.FieldSpec) -> None:
    """Test that raw values outside the field are rejected."""
    with pytest.raises(errors.ParseError):
        f4.element(4)


def test_inverse_of_zero(f16: gf.FieldSpec) -> None:
    """Test that zero has no inverse."""
    with pytest.raises(errors.DivisionByZeroError):
        f16.zero.inv()
    with pytest.raises(ZeroDivisionError):
        f16.one / f16.zero


def test_mixing_fields(f4: gf.FieldSpec, f16: gf.FieldSpec) -> None:
    """Test that elements of different fields do not combine."""
    with pytest.raises(errors.FieldMismatchError):
        f4.one + f16.one
    with pytest.raises(errors.FieldMismatchError):
        f4(f16.one)


def test_integers_act_as_prime_subfield(f9: gf.FieldSpec) -> None:
    """Test that integer operands are reduced modulo p."""
    w = f9.generator

    assert w * 4 == w
    assert 2 - w == -(w - 2)
    assert f9(5) == f9(2)


def test_field_axioms(
    f9: gf.FieldSpec,
    f16: gf.FieldSpec,
    rng: np.random.Generator,
) -> None:
    """Test the field axioms on random triples."""
    for field in (f9, f16):
        for _ in range(500):
            a, b, c = (field.random(rng) for _ in range(3))
            assert (a + b) + c == a + (b + c)
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c
            assert a + b == b + a
            assert a * b == b * a
            assert a - a == field.zero
            if a:
                assert a * a.inv() == field.one


def test_frobenius_is_a_ring_automorphism(
    f16: gf.FieldSpec,
    rng: np.random.Generator,
) -> None:
    """Test that theta respects sums and products."""
    theta = gf.Automorphism(f16, 2)
    for _ in range(1000):
        a, b = f16.random(rng), f16.random(rng)
        assert theta(a * b) == theta(a) * theta(b)
        assert theta(a + b) == theta(a) + theta(b)


def test_automorphism_order_and_fixed_field(f16: gf.FieldSpec) -> None:
    """Test the order and fixed field of Frobenius powers of F_16."""
    theta = gf.Automorphism(f16, 2)

    assert theta.order == 2
    assert len(theta.fixed_field()) == 4
    assert gf.Automorphism(f16, 1).order == 4
    assert gf.Automorphism(f16, 4).is_identity
    a = f16.parse_element("w^7")
    assert theta.inverse()(theta(a)) == a
    assert theta.power(2).is_identity


def test_fixed_subfield_of_f9(f9: gf.FieldSpec) -> None:
    """Test that the cube map fixes exactly the prime field."""
    assert {str(a) for a in gf.fixed_subfield(f9, 1)} == {"0", "1", "2"}


def test_norm(f16: gf.FieldSpec) -> None:
    """Test that the twisted norm of delta is delta^{[n]}."""
    delta = f16.parse_element("w^2")

    assert gf.norm(delta, 2, 4) == f16.parse_element("w^5")
    assert gf.norm(delta, 2, 4) == delta**85


@pytest.mark.parametrize(
    ("op", "expected"),
    [("add", "w^4"), ("mul", "w"), ("inv", "1"), ("pow", "1")],
)
def test_arith(f16: gf.FieldSpec, op: str, expected: str) -> None:
    """Test dispatching field operations by name."""
    b = 3 if op == "pow" else f16.generator

    assert str(gf.arith(f16.one, b, op)) == expected


def test_arith_unknown_operation(f16: gf.FieldSpec) -> None:
    """Test that an unknown operation is rejected."""
    with pytest.raises(errors.ParseError):
        gf.arith(f16.one, f16.one, "xor")


def test_split_terms() -> None:
    """Test that sums split at top-level signs only."""
    assert list(gf.split_terms("x^2+w*x-1")) == [
        (False, "x^2"),
        (False, "w*x"),
        (True, "1"),
    ]
    assert list(gf.split_terms("(1+w)*x+w^-1")) == [
        (False, "(1+w)*x"),
        (False, "w^-1"),
    ]
    assert list(gf.split_terms("-v")) == [(True, "v")]


@pytest.mark.parametrize("text", ["x+", "(x+1", ""])
def test_split_terms_invalid(text: str) -> None:
    """Test that dangling signs and parentheses are rejected."""
    with pytest.raises(errors.ParseError):
        list(gf.split_terms(text))


def test_large_field_without_tables() -> None:
    """Test scalar arithmetic of a field above the table limit."""
    field = gf.parse_field("GF(2^11)")
    a = field.parse_element("w^100")

    assert a * a.inv() == field.one
    assert field._add is None
