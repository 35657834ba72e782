"""Tests for S-ring automorphisms, isomorphisms and group realization."""

import numpy as np
import pytest

from app.algebra import AlgebraElement, SchurRing
from app.automorphisms import (
    aut_sring,
    aut_symbolic_lattice_sring,
    block_action,
    lattice_nodes,
    realize_group,
    sring_isomorphisms,
    tensor_isomorphisms,
)
from app.config import override_settings
from app.constructions import conv_pair, symbolic_lattice_sring
from app.groups.cyclic_product import CyclicProductGroup
from app.groups.isomorphism import symmetric_degree
from app.lattices import boolean_lattice, lattice_automorphisms
from app.ptuple import psi_signature
from app.utils.exceptions import CapExceededError, FieldMismatchError, UnsupportedPrimeError

COSET_BLOCKS = [[0], [4, 8], [1, 5, 9], [2, 6, 10], [3, 7, 11]]


class TestAutSRing:
    """Test cases for automorphism groups of S-rings given by blocks."""

    def test_coset_ring_over_rationals(self, z12, rationals):
        """Test that only the swap of 1+H and 3+H survives over Q."""
        aut = aut_sring(SchurRing.from_blocks(z12, COSET_BLOCKS, rationals))
        assert aut.order == 2
        assert (0, 1, 4, 3, 2) in aut.elements

    def test_coset_ring_over_f3(self, z12, f3):
        """Test that every permutation of the three cosets survives over F3."""
        aut = aut_sring(SchurRing.from_blocks(z12, COSET_BLOCKS, f3))
        assert aut.order == 6
        assert symmetric_degree(aut) == 3

    def test_trivial_ring(self, z12):
        """Test that the trivial S-ring has only the identity."""
        assert aut_sring(SchurRing.trivial(z12)).order == 1

    def test_block_cap(self, z12):
        """Test that the block count is capped."""
        with pytest.raises(CapExceededError):
            aut_sring(SchurRing.group_algebra(z12), cap=5)

    def test_tensor_isomorphisms_identity(self, z12):
        """Test that a tensor is always isomorphic to itself."""
        C = SchurRing.from_blocks(z12, COSET_BLOCKS).structure_constants
        assert tuple(range(5)) in tensor_isomorphisms(C, C)
        assert tensor_isomorphisms(C, C[:3, :3, :3]) == []

    def test_block_action(self, z12, rationals):
        """Test how the swap permutes the subgroups of order 3 and 6."""
        S = SchurRing.from_blocks(z12, COSET_BLOCKS, rationals)
        members = [np.array([0, 4, 8]), np.array([0, 2, 4, 6, 8, 10])]
        assert block_action(S, aut_sring(S), members) == [(0, 1)]


class TestSRingIsomorphisms:
    """Test cases for isomorphisms between S-rings."""

    def test_converse_pair_is_isomorphic(self):
        """Test that the two S-rings of the Z2 x Z2 pair are isomorphic."""
        pair = conv_pair(CyclicProductGroup((2, 2)))
        isomorphisms = sring_isomorphisms(pair.first, pair.second)
        assert isomorphisms
        phi = isomorphisms[0]
        x = AlgebraElement.of_subgroup(pair.subgroup, pair.first.field)
        assert phi.apply(x) == AlgebraElement.of_subgroup(pair.image, pair.second.field)

    def test_different_dimensions(self, z12):
        """Test that S-rings of different dimension are not isomorphic."""
        assert sring_isomorphisms(SchurRing.trivial(z12), SchurRing.from_blocks(z12, COSET_BLOCKS)) == []

    def test_field_mismatch(self, z12, rationals, f3):
        """Test that S-rings over different fields are not compared."""
        with pytest.raises(FieldMismatchError):
            sring_isomorphisms(SchurRing.trivial(z12, rationals), SchurRing.trivial(z12, f3))

    def test_identity_morphism(self, z12):
        """Test that the identity is among the self-isomorphisms."""
        S = SchurRing.from_blocks(z12, COSET_BLOCKS)
        assert any(phi.is_identity() for phi in sring_isomorphisms(S, S))


class TestSymbolicAutomorphisms:
    """Test cases for automorphisms of symbolic lattice S-rings."""

    def test_psi_image_of_boolean_lattice(self):
        """Test that the embedded B_2 keeps its swap of atoms."""
        D = boolean_lattice(2)
        sig = psi_signature(2, 3)
        nodes = lattice_nodes(D, sig)
        assert sorted(nodes) == [(0, 1), (0, 2), (1, 1), (1, 2)]
        S = symbolic_lattice_sring(sig, nodes)
        assert S.dimension == 6
        assert aut_symbolic_lattice_sring(S).order == 2

    def test_chain_is_rigid(self, sig13):
        """Test that a chain of nodes has no nontrivial automorphism."""
        S = symbolic_lattice_sring(sig13, [(0, 1), (0, 2)])
        assert aut_symbolic_lattice_sring(S).order == 1

    def test_sizes_break_symmetry(self, sig135):
        """Test that lattice symmetries moving R(a) to a subgroup of another order are dropped."""
        S = symbolic_lattice_sring(sig135, [(0, 0, 1), (0, 0, 2), (1, 1, 1), (1, 1, 2)])
        assert lattice_automorphisms(S.node_lattice).order == 2
        assert aut_symbolic_lattice_sring(S).order == 1


class TestRealizeGroup:
    """Test cases for realizing groups as S-ring automorphism groups."""

    def test_z2_with_concrete_crosscheck(self):
        """Test Z2 over Z3 x Z27, checked against the concrete S-ring."""
        R = realize_group(CyclicProductGroup.cyclic(2), 3, crosscheck=True)
        assert R.signature.describe() == "p=3;lambda=1,3"
        assert R.aut.order == 2
        assert R.concrete_crosscheck
        assert R.concrete_aut_order == 2
        assert R.to_json()["sring_dimension"] == R.sring.dimension

    @pytest.mark.slow
    def test_s3(self, s3):
        """Test S3 over Z3 x Z27 x Z243, symbolically."""
        R = realize_group(s3, 3, crosscheck=False)
        assert R.aut.order == 6
        assert symmetric_degree(R.aut) == 3

    @pytest.mark.slow
    def test_larger_prime(self):
        """Test that the realization does not depend on the odd prime."""
        R = realize_group(CyclicProductGroup.cyclic(2), 5, crosscheck=False)
        assert R.signature.describe() == "p=5;lambda=1,3"
        assert R.aut.order == 2

    @pytest.mark.slow
    def test_z3(self):
        """Test Z3 through the Cayley gadget on nine join-irreducibles."""
        R = realize_group(CyclicProductGroup.cyclic(3), 3)
        assert len(R.join_irreducibles) == 9
        assert R.signature.describe() == "p=3;lambda=" + ",".join(str(2 * k + 1) for k in range(9))
        assert R.aut.order == 3
        assert R.lattice.size == 52
        assert R.sring.dimension == 52 + 2
        assert not R.concrete_crosscheck

    @pytest.mark.slow
    def test_klein_four_group(self):
        """Test Z2 x Z2, which has no boolean realization."""
        R = realize_group(CyclicProductGroup((2, 2)), 3)
        assert R.aut.order == 4
        assert R.sring.dimension == 77 + 2
        assert len(R.join_irreducibles) == 10

    def test_lattice_cap(self):
        """Test that a realized lattice above the element cap is refused cleanly."""
        override_settings(cap_lattice_elements=50)
        with pytest.raises(CapExceededError):
            realize_group(CyclicProductGroup((2, 2)), 3)

    @pytest.mark.parametrize("p", [2, 9])
    def test_needs_odd_prime(self, p):
        """Test that p = 2 and composite p are refused."""
        with pytest.raises(UnsupportedPrimeError):
            realize_group(CyclicProductGroup.cyclic(2), p)
