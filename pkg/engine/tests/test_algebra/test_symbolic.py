"""Tests for the symbolic maximal rational S-ring of an abelian p-group."""

from fractions import Fraction

import numpy as np
import pytest

from app.algebra import AlgebraElement, check_symbolic_closure, w_algebra
from app.ptuple import LambdaSignature, automorphism_classes_by_tuple, canonical_tuples, regular_subgroup
from app.utils.exceptions import TupleError, UnsupportedPrimeError

# Vectors over the lexicographic canonical tuples of lambda = (1,3,5), numbered from 1
P3_ONLY = (
    {1: 1},
    {5: 1},
    {6: 1, 7: 1, 8: -1, 11: -1},
    {8: 1, 11: 3, 12: -1, 13: -1},
    {14: 1},
    {18: 1},
)


def numbered(sig, rows):
    tuples = canonical_tuples(sig)
    return [{tuples[k - 1]: Fraction(c) for k, c in row.items()} for row in rows]


class TestSymbolicAlgebra:
    """Test cases for arithmetic in the R- and O-bases."""

    @pytest.fixture
    def A(self, sig13):
        """W(Z3 x Z27)."""
        return w_algebra(sig13)

    def test_dimension(self, A):
        """Test that the dimension is the number of canonical tuples."""
        assert A.dimension == 6
        assert A.tuples() == canonical_tuples(A.sig)

    def test_class_sizes(self, A):
        """Test |O(a)| for every class of Z3 x Z27."""
        sizes = {a: A.class_size(a) for a in A.tuples()}
        assert sizes == {(0, 0): 1, (0, 1): 2, (0, 2): 6, (1, 1): 6, (1, 2): 12, (1, 3): 54}
        assert sum(sizes.values()) == A.sig.order

    def test_class_sizes_match_concrete_group(self, A, z3z27):
        """Test symbolic class sizes against the concrete automorphism classes."""
        for a, members in automorphism_classes_by_tuple(z3z27).items():
            assert A.class_size(a) == len(members)

    def test_r_product(self, A):
        """Test R(a) R(b) = p^{sum(a ^ b)} R(a v b)."""
        assert A.r_product((0, 1), (1, 1)) == (3, (1, 1))
        assert A.multiply(A.R((0, 2)), A.R((1, 1))) == {(1, 2): Fraction(3)}

    def test_hadamard(self, A):
        """Test R(a) o R(b) = R(a ^ b)."""
        assert A.hadamard(A.R((0, 2)), A.R((1, 1))) == {(0, 1): Fraction(1)}

    def test_o_basis(self, A):
        """Test O(0,1) = R(0,1) - R(0,0) and the change of basis round trip."""
        assert A.O((0, 1)) == {(0, 1): Fraction(1), (0, 0): Fraction(-1)}
        x = A.add(A.R((1, 2)), A.R((0, 2)), Fraction(2))
        assert A.from_o_basis(A.to_o_basis(x)) == x

    def test_change_of_basis_matrices_are_inverse(self, A):
        """Test that the zeta and Moebius matrices multiply to the identity."""
        zeta, mobius = A.change_of_basis()
        assert (zeta @ mobius == np.eye(6, dtype=int)).all()

    def test_concrete_instance(self, A, z3z27, rationals):
        """Test that R(a) instantiates to the indicator of the regular subgroup."""
        expected = AlgebraElement.of_subgroup(regular_subgroup((0, 2), z3z27), rationals)
        assert A.concrete(A.R((0, 2)), z3z27) == expected

    def test_non_canonical_tuple(self, A):
        """Test that R(a) needs a canonical a."""
        with pytest.raises(TupleError):
            A.R((1, 0))

    def test_p_equals_2_is_unsupported(self):
        """Test that the symbolic algebra refuses p = 2."""
        with pytest.raises(UnsupportedPrimeError):
            w_algebra(LambdaSignature(2, (1, 3)))

    def test_label(self, A):
        """Test the printed form of a vector."""
        assert A.label({}) == "0"
        assert A.label(A.R((0, 1))) == "1*R(0,1)"


class TestSymbolicClosure:
    """Test cases for closure of spans inside W(G)."""

    def test_sublattice_nodes(self, sig13):
        """Test that a chain of nodes from bottom to top spans an S-ring."""
        A = w_algebra(sig13)
        result = check_symbolic_closure(A, [A.R((0, 0)), A.R((0, 1)), A.R((1, 3))])
        assert result.closed
        assert result.details["dimension"] == 3

    def test_nodes_not_closed_under_meet(self, sig13):
        """Test that R(0,2) and R(1,1) without R(0,1) fail."""
        A = w_algebra(sig13)
        result = check_symbolic_closure(A, [A.R(a) for a in [(0, 0), (0, 2), (1, 1), (1, 2), (1, 3)]])
        assert not result.closed
        assert "meet" in result.witness

    def test_missing_whole_group(self, sig13):
        """Test that a span without G-bar fails."""
        A = w_algebra(sig13)
        result = check_symbolic_closure(A, [A.R((0, 0)), A.R((0, 1))])
        assert not result.closed
        assert "G" in result.witness

    def test_non_lattice_span(self, sig13):
        """Test span{1, H2, H3 + H4, H5, G}, an S-ring whose nodes are not a sublattice."""
        A = w_algebra(sig13)
        vectors = numbered(sig13, ({1: 1}, {2: 1}, {3: 1, 4: 1}, {5: 1}, {6: 1}))
        assert check_symbolic_closure(A, vectors).closed

    def test_closed_only_for_three(self):
        """Test that the mixed span over lambda = (1,3,5) is closed for p = 3 and not for p = 5."""
        for p, closed in ((3, True), (5, False)):
            sig = LambdaSignature(p, (1, 3, 5))
            result = check_symbolic_closure(w_algebra(sig), numbered(sig, P3_ONLY))
            assert result.closed is closed

    def test_o_basis_input(self, sig13):
        """Test that O-basis vectors are converted before the check."""
        A = w_algebra(sig13)
        vectors = [{(0, 0): 1}, {(0, 1): 1, (0, 2): 1, (1, 1): 1, (1, 2): 1, (1, 3): 1}]
        assert check_symbolic_closure(A, vectors, basis="O").closed
