"""Tests for concrete groups, subgroups and group automorphisms."""

import numpy as np
import pytest

from app.groups.automorphisms import (
    GroupAutomorphism,
    aut_generators,
    automorphism_classes,
    automorphism_group,
    brute_force_automorphisms,
    is_characteristic,
    moving_automorphism,
    noncharacteristic_subgroup,
    orbits,
)
from app.groups.cayley import CayleyGroup
from app.groups.cyclic_product import CyclicProductGroup
from app.groups.gf2m import gf2m_additive_group, multiplier_power
from app.groups.isomorphism import find_isomorphism, is_isomorphic, symmetric_degree
from app.groups.permgroup import PermGroup
from app.groups.subgroups import Subgroup, all_subgroups, normal_subgroups, quotient
from app.utils.exceptions import CapExceededError, CyclicGroupError, GroupError


class TestCyclicProductGroup:
    """Test cases for cyclic products written additively."""

    def test_indexing_is_lexicographic(self, z2z8):
        """Test that the last coordinate runs fastest and index 0 is the identity."""
        assert z2z8.order == 16
        assert z2z8.index_of([0, 0]) == 0
        assert z2z8.index_of([0, 1]) == 1
        assert z2z8.index_of([1, 0]) == 8
        assert z2z8.coords[9].tolist() == [1, 1]

    def test_multiplication_and_inverses(self, z2z8):
        """Test componentwise addition and negation."""
        a, b = z2z8.index_of([1, 5]), z2z8.index_of([1, 6])
        assert z2z8.mul(a, b) == z2z8.index_of([0, 3])
        assert z2z8.mul(a, z2z8.inv(a)) == 0

    def test_element_orders(self, z12):
        """Test element orders in Z12."""
        assert z12.element_order(1) == 12
        assert z12.element_order(4) == 3
        assert z12.element_order(6) == 2

    def test_p_group_exponents(self):
        """Test recognition of abelian p-groups in signature form."""
        assert CyclicProductGroup((3, 27)).p_group_exponents() == (3, (1, 3))
        assert CyclicProductGroup((27, 3)).p_group_exponents() is None
        assert CyclicProductGroup((2, 3)).p_group_exponents() is None
        assert CyclicProductGroup((6,)).prime_power_moduli is None

    def test_invalid_moduli(self):
        """Test that non-positive moduli are rejected."""
        with pytest.raises(GroupError):
            CyclicProductGroup((0, 2))

    def test_cyclic_detection(self):
        """Test that Z2 x Z3 is cyclic and Z2 x Z2 is not."""
        assert CyclicProductGroup((2, 3)).is_cyclic()
        assert not CyclicProductGroup((2, 2)).is_cyclic()


class TestCayleyGroup:
    """Test cases for tabulated groups."""

    def test_symmetric_group(self, s3):
        """Test S3 is non-abelian of order 6."""
        assert s3.order == 6
        assert not s3.is_abelian()
        assert len(s3.conjugacy_classes()) == 3

    def test_dihedral_group(self):
        """Test D4 has order 8 and five conjugacy classes."""
        D4 = CayleyGroup.dihedral(4)
        assert D4.order == 8
        assert not D4.is_abelian()
        assert len(D4.conjugacy_classes()) == 5

    def test_non_associative_table_rejected(self):
        """Test that a Latin square with identity but no associativity raises GroupError."""
        table = [
            [0, 1, 2, 3, 4],
            [1, 0, 3, 4, 2],
            [2, 4, 0, 1, 3],
            [3, 2, 4, 0, 1],
            [4, 3, 1, 2, 0],
        ]
        with pytest.raises(GroupError):
            CayleyGroup(table)

    def test_from_json_round_trip(self, s3):
        """Test that a table loaded from JSON data gives the same group."""
        copy = CayleyGroup.from_json({"table": s3.table.tolist(), "name": "S3"})
        assert np.array_equal(copy.table, s3.table)


class TestSubgroups:
    """Test cases for subgroup enumeration and quotients."""

    def test_subgroups_of_z12(self, z12):
        """Test Z12 has one subgroup per divisor."""
        orders = [H.order for H in all_subgroups(z12)]
        assert orders == [1, 2, 3, 4, 6, 12]

    def test_subgroups_of_klein_group(self):
        """Test Z2 x Z2 has five subgroups."""
        assert len(all_subgroups(CyclicProductGroup((2, 2)))) == 5

    def test_normal_subgroups_of_s3(self, s3):
        """Test S3 has three normal subgroups."""
        assert [H.order for H in normal_subgroups(s3)] == [1, 3, 6]

    def test_subgroup_check(self, z12):
        """Test that a non-subgroup set is rejected."""
        with pytest.raises(GroupError):
            Subgroup(z12, [0, 1])

    def test_join_and_intersection(self, z12):
        """Test lattice operations on subgroups of Z12."""
        H = Subgroup.generated_by(z12, [4])
        K = Subgroup.generated_by(z12, [6])
        assert H.join(K) == Subgroup.generated_by(z12, [2])
        assert H.join(K).order == 6
        assert H.intersection(K).is_trivial()
        assert H.join(Subgroup.generated_by(z12, [3])).order == 12

    def test_quotient(self, z12):
        """Test Z12 / <4> is cyclic of order 4."""
        H = Subgroup.generated_by(z12, [4])
        Q, projection = quotient(z12, H)
        assert Q.order == 4
        assert projection[5] == projection[1]

    def test_cap(self, z12):
        """Test that the enumeration cap is enforced."""
        with pytest.raises(CapExceededError):
            all_subgroups(z12, cap=8)


class TestAutomorphisms:
    """Test cases for automorphism groups of abelian groups."""

    @pytest.mark.parametrize("moduli,order", [((12,), 4), ((2, 2), 6), ((2, 4), 8), ((3, 9), 108)])
    def test_automorphism_group_order(self, moduli, order):
        """Test |Aut(G)| for small abelian groups."""
        assert automorphism_group(CyclicProductGroup(moduli)).order == order

    @pytest.mark.parametrize("moduli", [(2, 8), (3, 9), (2, 2, 4)])
    def test_generators_match_brute_force(self, moduli):
        """Test that structured generators give the same orbits as all automorphisms."""
        G = CyclicProductGroup(moduli)
        structured = orbits(aut_generators(G), G)
        brute = orbits(brute_force_automorphisms(G), G)
        assert structured == brute

    def test_classes_of_z2z8(self, z2z8):
        """Test the six automorphism classes of Z2 x Z8."""
        classes = automorphism_classes(z2z8)
        as_coords = sorted(sorted(tuple(z2z8.coords[g].tolist()) for g in c) for c in classes)
        assert len(classes) == 6
        assert [(0, 0)] in as_coords
        assert [(0, 4)] in as_coords
        assert [(1, 0), (1, 4)] in as_coords
        assert sorted(len(c) for c in classes) == [1, 1, 2, 2, 2, 8]

    def test_map_must_be_homomorphism(self, z12):
        """Test that a bijection that is not additive is rejected."""
        images = list(range(12))
        images[1], images[2] = 2, 1
        with pytest.raises(GroupError):
            GroupAutomorphism(z12, images)

    def test_large_group_maps_are_checked(self):
        """Test that the homomorphism check also runs above order 512."""
        G = CyclicProductGroup.cyclic(1024)
        tripling = GroupAutomorphism(G, [(3 * g) % 1024 for g in range(1024)])
        assert tripling(5) == 15
        images = list(range(1024))
        images[1], images[2] = 2, 1
        with pytest.raises(GroupError):
            GroupAutomorphism(G, images)

    def test_large_product_from_generator_images(self):
        """Test generator images on Z2 x Z512, with and without additivity."""
        G = CyclicProductGroup((2, 512))
        shear = GroupAutomorphism.from_generator_images(G, [(1, 0), (1, 1)])
        assert shear(G.index_of([0, 1])) == G.index_of([1, 1])
        images = shear.images.copy()
        a, b = G.index_of([0, 3]), G.index_of([0, 5])
        images[a], images[b] = images[b], images[a]
        with pytest.raises(GroupError):
            GroupAutomorphism(G, images)

    def test_noncharacteristic_subgroup(self):
        """Test a coordinate subgroup of Z2 x Z4 is moved by an automorphism."""
        G = CyclicProductGroup((2, 4))
        H = noncharacteristic_subgroup(G)
        assert not is_characteristic(H)
        phi = moving_automorphism(H)
        assert sorted(phi.apply_set(H.elements).tolist()) != H.elements.tolist()

    def test_cyclic_group_has_only_characteristic_subgroups(self, z12):
        """Test that cyclic groups raise CyclicGroupError."""
        with pytest.raises(CyclicGroupError):
            noncharacteristic_subgroup(z12)


class TestIsomorphism:
    """Test cases for isomorphism search and permutation groups."""

    def test_permgroup_closure(self):
        """Test a transposition and a 3-cycle generate S3."""
        P = PermGroup(3, [(1, 0, 2), (1, 2, 0)])
        assert P.order == 6
        assert not P.is_abelian()
        assert symmetric_degree(P) == 3

    def test_find_isomorphism(self, s3):
        """Test S3 is isomorphic to its permutation representation and not to Z6."""
        P = PermGroup(3, [(1, 0, 2), (1, 2, 0)])
        witness = find_isomorphism(P, s3)
        assert witness is not None
        assert is_isomorphic(P, s3)
        assert not is_isomorphic(s3, CyclicProductGroup.cyclic(6))

    def test_from_elements_rejects_non_group(self):
        """Test that a set not closed under composition is rejected."""
        with pytest.raises(GroupError):
            PermGroup.from_elements(3, [(0, 1, 2), (1, 2, 0)])


class TestGF2m:
    """Test cases for the additive group of GF(2^m)."""

    def test_primitive_polynomial(self):
        """Test x^6 + x^4 + x^3 + x + 1 makes x of order 63."""
        G, multiplier = gf2m_additive_group(6, [1, 1, 0, 1, 1, 0, 1])
        assert G.order == 64
        assert np.array_equal(multiplier_power(multiplier, 63).images, np.arange(64))
        assert not np.array_equal(multiplier_power(multiplier, 21).images, np.arange(64))

    def test_non_primitive_polynomial(self):
        """Test x^4 + x^3 + x^2 + x + 1 is rejected (x has order 5)."""
        with pytest.raises(GroupError):
            gf2m_additive_group(4, [1, 1, 1, 1, 1])
