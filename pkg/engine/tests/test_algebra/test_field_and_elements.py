"""Tests for coefficient fields, group-algebra elements, spans and quotient maps."""

from fractions import Fraction

import pytest
from sympy import Rational

from app.algebra import (
    AlgebraElement,
    CoefficientField,
    KeyedSpan,
    QuotientMap,
    SpanBasis,
    intersection_dimension,
    span_rank,
    subgroup_product,
)
from app.config import override_settings
from app.groups.subgroups import Subgroup
from app.utils.exceptions import AlgebraError, CapExceededError, FieldMismatchError, NotInvertibleError


class TestCoefficientField:
    """Test cases for the rationals and prime fields."""

    def test_labels(self, rationals, f3):
        """Test field labels and characteristics."""
        assert rationals.label == "Q"
        assert f3.label == "F3"
        assert f3.characteristic == 3

    def test_non_fields_are_rejected(self):
        """Test that composite and unit characteristics are refused."""
        with pytest.raises(AlgebraError):
            CoefficientField(4)
        with pytest.raises(AlgebraError):
            CoefficientField(1)

    def test_fraction_conversion(self):
        """Test that 1/2 reads as 3 in F5."""
        f5 = CoefficientField.prime(5)
        assert f5.to_rational(f5.convert(Fraction(1, 2))) == 3

    def test_vanishing_denominator(self, f3):
        """Test that 1/3 has no value in F3."""
        with pytest.raises(NotInvertibleError):
            f3.convert(Fraction(1, 3))

    def test_invertible_and_reduce(self, rationals, f3):
        """Test integer invertibility and count reduction."""
        assert rationals.invertible(3)
        assert not f3.invertible(6)
        assert f3.reduce_counts([3, 4, 5]).tolist() == [0, 1, 2]

    def test_equality(self, f3):
        """Test that fields compare by characteristic."""
        assert f3 == CoefficientField(3)
        assert f3 != CoefficientField.rationals()


class TestAlgebraElement:
    """Test cases for sparse group-algebra elements."""

    def test_zero_coefficients_are_dropped(self, z12, rationals):
        """Test that stored coefficients are nonzero."""
        x = AlgebraElement(z12, rationals, {1: 2, 2: 0})
        assert x.support().tolist() == [1]
        assert x.coefficient(2) == 0

    def test_convolution(self, z12, rationals):
        """Test (1 + g)^2 = 1 + 2g + g^2 for a generator g."""
        x = AlgebraElement(z12, rationals, {0: 1, 1: 1})
        assert x * x == AlgebraElement(z12, rationals, {0: 1, 1: 2, 2: 1})

    def test_subgroup_square_vanishes_mod_order(self, z12, f3):
        """Test that H-bar squared is 3 H-bar, which is zero over F3."""
        H = AlgebraElement.simple_quantity(z12, f3, [0, 4, 8])
        assert (H * H).is_zero()

    def test_hadamard_and_scalar(self, z12, rationals):
        """Test the coefficientwise product and scalar multiplication."""
        x = AlgebraElement(z12, rationals, {1: 2, 3: 1})
        y = AlgebraElement(z12, rationals, {1: 5, 4: 1})
        assert x.hadamard(y) == AlgebraElement(z12, rationals, {1: 10})
        assert (3 * x).coefficient(1) == 6

    def test_inverse_and_power_maps(self, z12, rationals):
        """Test g -> g^-1 and g -> g^5 on coefficients."""
        x = AlgebraElement(z12, rationals, {1: 1, 2: 3})
        assert x.inverse_map() == AlgebraElement(z12, rationals, {11: 1, 10: 3})
        assert x.power_map(5) == AlgebraElement(z12, rationals, {5: 1, 10: 3})

    def test_field_mismatch(self, z12, rationals, f3):
        """Test that elements over different fields do not combine."""
        with pytest.raises(FieldMismatchError):
            AlgebraElement.one(z12, rationals) + AlgebraElement.one(z12, f3)

    def test_element_outside_group(self, z12, rationals):
        """Test that indices beyond the group are rejected."""
        with pytest.raises(AlgebraError):
            AlgebraElement(z12, rationals, {12: 1})

    def test_convolution_cap(self, z12, rationals):
        """Test that convolution refuses groups above the cap."""
        override_settings(cap_convolution_order=6)
        x = AlgebraElement.one(z12, rationals)
        with pytest.raises(CapExceededError):
            x * x

    def test_subgroup_product(self, z12, rationals):
        """Test H K = |H n K| HK without a convolution."""
        H = Subgroup(z12, [0, 6])
        K = Subgroup(z12, [0, 3, 6, 9])
        product = subgroup_product(H, K, rationals)
        expected = AlgebraElement.of_subgroup(H, rationals) * AlgebraElement.of_subgroup(K, rationals)
        assert product == expected
        assert product.coefficient(3) == 2


class TestSpans:
    """Test cases for exact span membership."""

    def test_keyed_span(self, rationals):
        """Test dimension and membership with string keys."""
        span = KeyedSpan(rationals, [{"a": 1, "b": 1}, {"b": 1}])
        assert span.dimension == 2
        assert span.contains({"a": 3})
        assert not span.contains({"c": 1})

    def test_dimension_depends_on_characteristic(self, rationals):
        """Test that a + b and a - b coincide over F2."""
        vectors = [{"a": 1, "b": 1}, {"a": 1, "b": -1}]
        assert KeyedSpan(rationals, vectors).dimension == 2
        assert KeyedSpan(CoefficientField.prime(2), vectors).dimension == 1

    def test_empty_span(self, rationals):
        """Test that zero vectors span nothing."""
        assert KeyedSpan(rationals, [{"a": 0}]).dimension == 0

    def test_span_basis_witness(self, z12, rationals):
        """Test the residual of an element outside the span."""
        basis = SpanBasis(z12, rationals, [AlgebraElement.one(z12, rationals)])
        assert basis.witness(AlgebraElement.one(z12, rationals)) is None
        assert basis.witness(AlgebraElement(z12, rationals, {1: 1})) is not None

    def test_intersection_dimension(self, z12, rationals):
        """Test dim(U n V) for two planes sharing a line."""
        one = AlgebraElement.one(z12, rationals)
        g = AlgebraElement(z12, rationals, {1: 1})
        h = AlgebraElement(z12, rationals, {2: 1})
        assert span_rank(z12, rationals, [one, g, one + g]) == 2
        assert intersection_dimension(z12, rationals, [one, g], [one, h]) == 1


class TestQuotientMap:
    """Test cases for projection to F[G/H] and its section."""

    @pytest.fixture
    def qmap(self, z12):
        """Quotient of Z12 by its subgroup of order 2."""
        return QuotientMap(Subgroup(z12, [0, 6]))

    def test_index(self, qmap):
        """Test the quotient order."""
        assert qmap.index == 6

    def test_project_whole(self, qmap, z12, rationals):
        """Test that G-bar projects to 2 times the quotient's G-bar."""
        image = qmap.project(AlgebraElement.whole(z12, rationals))
        assert len(image) == 6
        assert image.coefficient(0) == 2

    def test_lift_identity(self, qmap, rationals):
        """Test that the identity coset lifts to H-bar, and to H-bar / 2 when normalized."""
        one = AlgebraElement.one(qmap.quotient_group, rationals)
        assert qmap.lift(one).support().tolist() == [0, 6]
        half = qmap.lift(one, normalized=True).coefficient(6)
        assert rationals.to_rational(half) == Rational(1, 2)

    def test_normalized_lift_needs_invertible_order(self, qmap):
        """Test that |H| = 2 cannot be divided out over F2."""
        f2 = CoefficientField.prime(2)
        with pytest.raises(NotInvertibleError):
            qmap.lift(AlgebraElement.one(qmap.quotient_group, f2), normalized=True)

    def test_preimage(self, qmap):
        """Test that the identity coset's preimage is H."""
        assert qmap.preimage([0]).tolist() == [0, 6]
