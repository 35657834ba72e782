"""Tests for named S-ring constructions, products, enumeration and converse pairs."""

import itertools

import pytest
from sympy import divisor_count, factorint
from sympy.utilities.iterables import partitions

from app.algebra import AlgebraElement, SchurRing, is_central, is_rational, is_sring
from app.constructions import (
    SubgroupLattice,
    conv_pair,
    construction_registry,
    cyclic_dot_product,
    divisor_sublattices,
    enumerate_cyclic_srings,
    exhaustive_srings,
    lattice_is_rational,
    lattice_sring,
    set_partitions,
    srings_from_class_partitions,
    symbolic_lattice_sring,
    trivial,
    unit_orbit_partition,
    unit_subgroups,
)
from app.algebra.linalg import span_rank
from app.algebra.schur_ring import PSRing
from app.automorphisms import sring_isomorphisms
from app.constructions.lattice import check_lattice_properties
from app.groups.automorphisms import automorphism_classes
from app.groups.cayley import CayleyGroup
from app.groups.cyclic_product import CyclicProductGroup
from app.groups.subgroups import Subgroup
from app.utils.exceptions import CapExceededError, ConstructionError, CyclicGroupError

COSET_BLOCKS = [[0], [4, 8], [1, 5, 9], [2, 6, 10], [3, 7, 11]]


def fingerprints(rings):
    return sorted(S.fingerprint() for S in rings)


def abelian_groups(max_order):
    """Every abelian group of order 2..max_order as prime-power moduli."""
    groups = []
    for n in range(2, max_order + 1):
        choices = [[tuple(p ** part for part in sorted(multiset_parts(lam))) for lam in partitions(k)]
                   for p, k in sorted(factorint(n).items())]
        for combo in itertools.product(*choices):
            groups.append(tuple(m for factor in combo for m in factor))
    return groups


def multiset_parts(lam):
    return [part for part, count in lam.items() for _ in range(count)]


def is_cyclic_moduli(moduli):
    primes = [next(iter(factorint(m))) for m in moduli]
    return len(primes) == len(set(primes))


class TestConstructionRegistry:
    """Test cases for the registry of named constructions."""

    def test_default_constructions(self):
        """Test that every default construction is registered."""
        assert construction_registry.list_constructions() == ["cyclotomic", "dot", "full", "lattice",
                                                              "trivial", "wedge"]
        assert construction_registry.list_constructions("product") == ["dot", "wedge"]

    def test_unknown_construction(self, z12, rationals):
        """Test that unknown names raise."""
        with pytest.raises(ConstructionError):
            construction_registry.build("spiral", z12, rationals)

    def test_missing_parameters(self, z12, rationals):
        """Test that required parameters are enforced."""
        with pytest.raises(ConstructionError):
            construction_registry.build("wedge", z12, rationals, {"h": 3})

    def test_construction_info(self):
        """Test the info dict of a construction."""
        info = construction_registry.get_construction_info("wedge")
        assert info["kind"] == "product"
        assert info["params"] == ["h", "k"]

    def test_trivial_and_full(self, z12, rationals):
        """Test the two extreme S-rings through the registry."""
        assert construction_registry.build("trivial", z12, rationals).dimension == 2
        assert construction_registry.build("full", z12, rationals).dimension == 12


class TestCyclotomic:
    """Test cases for orbit S-rings."""

    def test_units(self, z12, rationals):
        """Test the orbits of x -> -x on Z12."""
        S = construction_registry.build("cyclotomic", z12, rationals, {"units": [-1]})
        assert S.dimension == 7

    def test_all_automorphisms(self, z12, rationals):
        """Test that Aut(Z12) orbits are indexed by divisors of 12."""
        S = construction_registry.build("cyclotomic", z12, rationals, {"automorphisms": "all"})
        assert S.dimension == 6
        assert is_rational(S)

    def test_negation_needs_abelian_group(self, s3, rationals):
        """Test that inversion is refused for S3."""
        with pytest.raises(ConstructionError):
            construction_registry.build("cyclotomic", s3, rationals, {"automorphisms": "negation"})

    def test_units_need_cyclic_group(self, z2z8, rationals):
        """Test that multipliers only apply to Z_n."""
        with pytest.raises(ConstructionError):
            construction_registry.build("cyclotomic", z2z8, rationals, {"units": [3]})

    def test_unit_orbit_partition(self):
        """Test the orbits of {1, 5} on Z12."""
        P = unit_orbit_partition(12, [1, 5])
        assert [1, 5] in [b.tolist() for b in P.blocks]
        assert P.size == 8


class TestLatticeSRings:
    """Test cases for lattice S-rings over normal subgroups."""

    def test_all_subgroups_of_z12(self, z12, rationals):
        """Test that the six subgroups of Z12 span a six-dimensional S-ring."""
        S = construction_registry.build("lattice", z12, rationals)
        assert S.dimension == 6

    def test_unclosed_member_set(self, z12):
        """Test that a set missing an intersection is rejected."""
        with pytest.raises(ConstructionError):
            SubgroupLattice(z12, [Subgroup(z12, [0, 4, 8]), Subgroup(z12, [0, 6])])

    def test_without_bounds_gives_psring(self, z12, rationals):
        """Test that a single proper subgroup spans only a PS-ring."""
        result = lattice_sring(SubgroupLattice(z12, [Subgroup(z12, [0, 2, 4, 6, 8, 10])]), rationals)
        assert isinstance(result, PSRing)
        assert not result.is_sring
        assert result.dimension == 1

    def test_rationality(self):
        """Test that a non-characteristic member makes the lattice S-ring irrational."""
        G = CyclicProductGroup((2, 2))
        L = SubgroupLattice(G, [Subgroup.trivial(G), Subgroup(G, [0, 1]), Subgroup.whole(G)])
        assert not lattice_is_rational(L)
        assert lattice_is_rational(SubgroupLattice.all_normal(CyclicProductGroup.cyclic(12)))

    def test_subgroup_product_identity(self, z12, rationals):
        """Test that the sums of <2> and <3> in Z12 multiply to 2 times G-bar."""
        H = AlgebraElement.of_subgroup(Subgroup(z12, [0, 2, 4, 6, 8, 10]), rationals)
        K = AlgebraElement.of_subgroup(Subgroup(z12, [0, 3, 6, 9]), rationals)
        assert H * K == AlgebraElement.whole(z12, rationals).scale(2)

    @pytest.mark.parametrize("moduli", [(12,), (3, 9), (2, 8)])
    def test_lattice_identities(self, moduli, rationals):
        """Test the lattice identities and centrality on every normal-subgroup lattice."""
        G = CyclicProductGroup(moduli)
        L = SubgroupLattice.all_normal(G)
        check_lattice_properties(L, rationals)
        S = lattice_sring(L, rationals)
        sums = [AlgebraElement.of_subgroup(H, rationals) for H in L]
        assert S.dimension == span_rank(G, rationals, sums)
        assert all(S.contains(x) for x in sums)
        assert is_central(S)

    @pytest.mark.parametrize("group,members,dimension", [
        (CyclicProductGroup((2, 2)), 5, 4),
        (CayleyGroup.dihedral(4), 6, 5),
    ])
    def test_dependent_subgroup_sums(self, group, members, dimension, rationals):
        """Test lattices where a member is the union of smaller members."""
        L = SubgroupLattice.all_normal(group)
        assert len(L) == members
        assert lattice_sring(L, rationals).dimension == dimension

    def test_klein_four_group_relation(self, rationals):
        """Test that the three order-two subgroups sum to G-bar plus twice the identity."""
        G = CyclicProductGroup((2, 2))
        L = SubgroupLattice.all_normal(G)
        order_two = [AlgebraElement.of_subgroup(H, rationals) for H in L if H.order == 2]
        total = order_two[0] + order_two[1] + order_two[2]
        expected = AlgebraElement.whole(G, rationals) + AlgebraElement.one(G, rationals).scale(2)
        assert total == expected

    def test_normal_lattice_of_s3_is_central(self, s3, rationals):
        """Test that the normal-subgroup lattice of S3 gives a central S-ring."""
        S = lattice_sring(SubgroupLattice.all_normal(s3), rationals)
        assert S.dimension == 3
        assert is_central(S)

    def test_divisor_sublattices(self):
        """Test the four bounded sublattices of the divisors of 6."""
        assert len(divisor_sublattices(6)) == 4


class TestProducts:
    """Test cases for dot and wedge products."""

    def test_cyclic_dot(self, rationals):
        """Test the dot product of trivial S-rings over Z3 and Z4."""
        S = cyclic_dot_product(trivial(CyclicProductGroup.cyclic(3)), trivial(CyclicProductGroup.cyclic(4)))
        assert S.group.order == 12
        assert S.dimension == 4

    def test_cyclic_dot_needs_coprime_orders(self):
        """Test that Z2 and Z4 are not complementary in Z8."""
        with pytest.raises(ConstructionError):
            cyclic_dot_product(trivial(CyclicProductGroup.cyclic(2)), trivial(CyclicProductGroup.cyclic(4)))

    def test_dot_split(self, rationals):
        """Test the dot product along the coordinates of Z2 x Z4."""
        S = construction_registry.build("dot", CyclicProductGroup((2, 4)), rationals,
                                        {"split": 1, "left": "full"})
        assert S.dimension == 4

    def test_wedge_gives_coset_ring(self, z12, rationals):
        """Test that H = K = <4> with a full outer factor gives the coset S-ring."""
        S = construction_registry.build("wedge", z12, rationals, {"h": 3, "k": 3, "outer": "full"})
        assert S == SchurRing.from_blocks(z12, COSET_BLOCKS, rationals)

    def test_incompatible_wedge(self, rationals):
        """Test that trivial factors over Z8 along orders 2 <= 4 do not glue."""
        with pytest.raises(ConstructionError):
            construction_registry.build("wedge", CyclicProductGroup.cyclic(8), rationals, {"h": 2, "k": 4})


class TestEnumeration:
    """Test cases for enumerating S-rings."""

    def test_set_partitions(self):
        """Test Bell numbers for small sets."""
        assert len(list(set_partitions(3))) == 5
        assert len(list(set_partitions(4))) == 15
        assert list(set_partitions(0)) == [[]]

    def test_unit_subgroups(self):
        """Test the five subgroups of the units mod 8."""
        assert len(unit_subgroups(8)) == 5
        assert unit_subgroups(8)[0] == (1,)

    @pytest.mark.parametrize("n", [2, 3, 4, 5, 6, 7, 8])
    def test_recursion_matches_exhaustive_search(self, n, rationals):
        """Test that the recursive enumeration finds exactly the S-rings a brute-force search finds."""
        G = CyclicProductGroup.cyclic(n)
        assert fingerprints(enumerate_cyclic_srings(n)) == fingerprints(exhaustive_srings(G, rationals))

    @pytest.mark.parametrize("p", [5, 7, 11, 13])
    def test_prime_order(self, p):
        """Test that Z_p carries one S-ring per divisor of p - 1."""
        assert len(enumerate_cyclic_srings(p)) == divisor_count(p - 1)

    def test_caps(self, z12):
        """Test the enumeration caps."""
        with pytest.raises(CapExceededError):
            enumerate_cyclic_srings(40)
        with pytest.raises(CapExceededError):
            exhaustive_srings(z12)

    def test_class_partitions(self, z2z8, rationals):
        """Test S-rings built from unions of automorphism classes of Z2 x Z8."""
        found = srings_from_class_partitions(z2z8, automorphism_classes(z2z8), rationals)
        assert all(is_sring(S.partition) for S in found)
        assert all(is_rational(S) for S in found)
        dims = sorted(S.dimension for S in found)
        assert dims[0] == 2 and dims[-1] == 6

    def test_class_partitions_need_identity(self, z12, rationals):
        """Test that classes must isolate the identity."""
        with pytest.raises(ConstructionError):
            srings_from_class_partitions(z12, [list(range(12))], rationals)


class TestConversePair:
    """Test cases for distinct Cayley-isomorphic S-rings."""

    def test_klein_four_group(self):
        """Test the pair over Z2 x Z2."""
        pair = conv_pair(CyclicProductGroup((2, 2)))
        assert pair.first.fingerprint() != pair.second.fingerprint()
        assert pair.first.dimension == pair.second.dimension == 3
        assert pair.block_map()[0] == 0
        assert pair.to_json()["group"] == CyclicProductGroup((2, 2)).describe()

    @pytest.mark.slow
    @pytest.mark.parametrize("moduli", [m for m in abelian_groups(32) if not is_cyclic_moduli(m)])
    def test_non_cyclic_abelian_groups(self, moduli):
        """Test that every non-cyclic abelian group of order at most 32 carries a verified pair."""
        pair = conv_pair(CyclicProductGroup(moduli))
        assert pair.first.fingerprint() != pair.second.fingerprint()
        assert sring_isomorphisms(pair.first, pair.second, limit=1)

    def test_cyclic_groups_are_rejected(self, z12):
        """Test that cyclic groups have no such pair."""
        with pytest.raises(CyclicGroupError):
            conv_pair(z12)

    def test_every_small_cyclic_group_is_rejected(self):
        """Test cyclic groups of order at most 32, also when written as products."""
        cyclic = [m for m in abelian_groups(32) if is_cyclic_moduli(m)]
        assert len(cyclic) == 31
        for moduli in cyclic + [(n,) for n in range(2, 33)]:
            with pytest.raises(CyclicGroupError):
                conv_pair(CyclicProductGroup(moduli))

    def test_abelian_group_count(self):
        """Test that 23 of the abelian groups of order at most 32 are not cyclic."""
        assert len([m for m in abelian_groups(32) if not is_cyclic_moduli(m)]) == 23


class TestSymbolicLatticeSRing:
    """Test cases for lattice S-rings inside W(G)."""

    def test_adds_bounds(self, sig13):
        """Test that bottom and top are added to the nodes."""
        S = symbolic_lattice_sring(sig13, [(0, 1)])
        assert S.nodes == [(0, 0), (0, 1), (1, 3)]
        assert S.weights() == [0, 1, 4]
        assert S.to_json()["nodes"] == ["R(0,0)", "R(0,1)", "R(1,3)"]

    def test_concrete_instance(self, sig13, z3z27):
        """Test that the concrete S-ring has one basic set per node."""
        S = symbolic_lattice_sring(sig13, [(0, 1), (0, 2)])
        concrete = S.concrete(z3z27)
        assert concrete.dimension == 4
        assert concrete.sizes.tolist() == [1, 2, 6, 72]

    def test_unclosed_nodes(self, sig13):
        """Test that nodes missing a meet are rejected."""
        with pytest.raises(ConstructionError):
            symbolic_lattice_sring(sig13, [(0, 2), (1, 1)])
