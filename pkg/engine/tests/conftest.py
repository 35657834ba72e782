"""Test configuration and fixtures."""

import pytest

from app.algebra.field import CoefficientField
from app.config import reset_settings
from app.groups.cayley import CayleyGroup
from app.groups.cyclic_product import CyclicProductGroup
from app.ptuple.signature import LambdaSignature


@pytest.fixture(autouse=True)
def fresh_settings():
    """Every test starts from the environment's settings, without CLI overrides."""
    yield reset_settings()
    reset_settings()


@pytest.fixture
def rationals():
    """The rational field."""
    return CoefficientField.rationals()


@pytest.fixture
def f3():
    """The prime field of order 3."""
    return CoefficientField.prime(3)


@pytest.fixture
def z12():
    """The cyclic group of order 12."""
    return CyclicProductGroup.cyclic(12)


@pytest.fixture
def z2z8():
    """Z2 x Z8."""
    return CyclicProductGroup((2, 8))


@pytest.fixture
def z3z27():
    """Z3 x Z27, the group of signature p=3, lambda=(1,3)."""
    return CyclicProductGroup((3, 27))


@pytest.fixture
def s3():
    """The symmetric group on three points."""
    return CayleyGroup.symmetric(3)


@pytest.fixture
def sig13():
    """Signature p=3, lambda=(1,3)."""
    return LambdaSignature(3, (1, 3))


@pytest.fixture
def sig135():
    """Signature p=3, lambda=(1,3,5)."""
    return LambdaSignature(3, (1, 3, 5))
