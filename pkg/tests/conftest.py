"""Configurations for pytest."""
import os

import numpy as np
import pytest

from skew_lcd import gf, skewpoly


def pytest_configure() -> None:
    """Configure pytest."""
    os.environ["SKEW_LCD_THREADS"] = "1"
    os.environ["SKEW_LCD_WEIGHT_LIMIT"] = "4"


@pytest.fixture()
def rng() -> np.random.Generator:
    """Return a seeded random number generator."""
    return np.random.default_rng(20231017)


@pytest.fixture()
def f4() -> gf.FieldSpec:
    """Return F_4 with w^2 = w + 1."""
    return gf.parse_field("GF(2^2)")


@pytest.fixture()
def f9() -> gf.FieldSpec:
    """Return F_9 with w^2 = w + 1."""
    return gf.parse_field("GF(3^2)")


@pytest.fixture()
def f16() -> gf.FieldSpec:
    """Return F_16 with w^4 = w + 1."""
    return gf.parse_field("GF(2^4)")


@pytest.fixture()
def ring4(f4: gf.FieldSpec) -> skewpoly.SkewPolyRing:
    """Return F_4[x; a -> a^2]."""
    return skewpoly.skew_ring(f4, 1)


@pytest.fixture()
def ring9(f9: gf.FieldSpec) -> skewpoly.SkewPolyRing:
    """Return F_9[x; a -> a^3]."""
    return skewpoly.skew_ring(f9, 1)


@pytest.fixture()
def ring16(f16: gf.FieldSpec) -> skewpoly.SkewPolyRing:
    """Return F_16[x; a -> a^4]."""
    return skewpoly.skew_ring(f16, 2)
