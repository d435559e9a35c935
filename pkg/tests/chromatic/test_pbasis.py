"""Tests for the power-sum expansion through N_{G,λ}."""

from fractions import Fraction

import pytest

from directed_cqsf.algebra.elements import SymT
from directed_cqsf.algebra.qsym import to_sym_m
from directed_cqsf.algebra.sym import convert, omega_sym
from directed_cqsf.chromatic.colorings import chromatic_qsym_direct
from directed_cqsf.chromatic.pbasis import (
    cycle_p_coefficient,
    is_in_n_g_lambda,
    n_g_lambda,
    n_g_lambda_counts,
    p_expansion_via_n,
)
from directed_cqsf.combinatorics.families import circular_digraph, directed_cycle
from directed_cqsf.combinatorics.graphs import Graph, digraph_from_edges
from directed_cqsf.combinatorics.partitions import partitions
from directed_cqsf.combinatorics.permutations import Permutation
from directed_cqsf.combinatorics.poly import TPoly
from directed_cqsf.utils.errors import InvalidInputError, NotSymmetricError

HALF = Fraction(1, 2)


class TestMembership:
    """Test σ ∈ N_{G,λ}."""

    def test_nine_cycle(self) -> None:
        """Test σ = 234658971 on C9 against two shapes."""
        g = directed_cycle(9).underlying
        sigma = Permutation.parse("234658971")
        assert is_in_n_g_lambda(g, sigma, (3, 2, 2, 1, 1))
        assert not is_in_n_g_lambda(g, sigma, (3, 2, 2, 2))

    def test_isolated_letter(self) -> None:
        """Test that a block with no edge inside fails."""
        g = Graph.from_edges(2, [])
        assert not is_in_n_g_lambda(g, Permutation((1, 2)), (2,))
        assert is_in_n_g_lambda(g, Permutation((1, 2)), (1, 1))

    def test_weight_mismatch(self) -> None:
        """Test that λ must be a partition of n."""
        with pytest.raises(InvalidInputError):
            is_in_n_g_lambda(Graph.from_edges(2, []), Permutation((1, 2)), (1,))


class TestNGLambda:
    """Test the member lists and their counts."""

    def test_triangle_full_block(self) -> None:
        """Test that every permutation lies in N_{C3,(3)}."""
        d = directed_cycle(3)
        members = n_g_lambda(d.underlying, d, (3,))
        assert len(members) == 6
        assert sorted(inv for _, inv in members) == [1, 1, 1, 2, 2, 2]

    def test_underlying_mismatch(self) -> None:
        """Test that g must be the underlying graph of d."""
        with pytest.raises(InvalidInputError):
            n_g_lambda(Graph.from_edges(3, []), directed_cycle(3), (3,))

    def test_counts_match_members(self) -> None:
        """Test that the single sweep agrees with the member lists."""
        d = circular_digraph(5, 3)
        counts = n_g_lambda_counts(d)
        for lam in partitions(5):
            members = n_g_lambda(d.underlying, d, lam)
            expected = TPoly.zero()
            for _, inv in members:
                expected = expected + TPoly.monomial(inv)
            assert counts[lam] == expected

    def test_bidirected_pair(self) -> None:
        """Test N = 2t for both shapes of C2."""
        counts = n_g_lambda_counts(directed_cycle(2))
        assert counts[(2,)] == TPoly((0, 2))
        assert counts[(1, 1)] == TPoly((0, 2))


class TestPExpansion:
    """Test ωX in the p basis."""

    def test_triangle(self) -> None:
        """Test the three p-coefficients of ωX for C3."""
        assert p_expansion_via_n(directed_cycle(3)) == SymT(
            3,
            "p",
            {
                (3,): TPoly((0, 1, 1)),
                (2, 1): TPoly((0, 3, 3)) * HALF,
                (1, 1, 1): TPoly((0, 1, 1)) * HALF,
            },
        )

    def test_single_edge(self) -> None:
        """Test ωX = (1 + t) h_2 for 1 → 2."""
        result = p_expansion_via_n(digraph_from_edges(2, [(1, 2)]))
        half = TPoly((HALF, HALF))
        assert result == SymT(2, "p", {(2,): half, (1, 1): half})

    @pytest.mark.parametrize("d", [circular_digraph(5, 2), circular_digraph(6, 3)])
    def test_agrees_with_colorings(self, d) -> None:
        """Test against ω of the coloring oracle."""
        expected = omega_sym(convert(to_sym_m(chromatic_qsym_direct(d)), "p"))
        assert p_expansion_via_n(d) == expected

    def test_not_symmetric(self) -> None:
        """Test that a non-symmetric X is refused with a witness."""
        with pytest.raises(NotSymmetricError) as excinfo:
            p_expansion_via_n(digraph_from_edges(3, [(1, 3), (2, 3)]))
        assert excinfo.value.witness == ((2, 1), (1, 2))


class TestCyclePCoefficient:
    """Test the closed form for directed cycles."""

    def test_single_block(self) -> None:
        """Test λ = (n): n t [n-1]_t."""
        assert cycle_p_coefficient(4, (4,)) == TPoly((0, 4, 4, 4))

    def test_two_blocks(self) -> None:
        """Test λ = (2, 2): 4t (1 + t)²."""
        assert cycle_p_coefficient(4, (2, 2)) == TPoly((0, 4, 8, 4))

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_matches_sweep(self, n) -> None:
        """Test the closed form against the sweep."""
        counts = n_g_lambda_counts(directed_cycle(n))
        for lam in partitions(n):
            assert cycle_p_coefficient(n, lam) == counts[lam]

    def test_invalid(self) -> None:
        """Test n < 2 and weight mismatches."""
        with pytest.raises(InvalidInputError):
            cycle_p_coefficient(1, (1,))
        with pytest.raises(InvalidInputError):
            cycle_p_coefficient(3, (2,))
