"""Tests for inv_G, G-ranks and G-descents."""

import pytest

from directed_cqsf.chromatic.descents import g_descent_set, inv_digraph
from directed_cqsf.combinatorics.families import directed_cycle
from directed_cqsf.combinatorics.graphs import Graph, digraph_from_edges
from directed_cqsf.combinatorics.permutations import Permutation
from directed_cqsf.utils.errors import InvalidInputError


class TestGDescentSet:
    """Test ranks and descents."""

    def test_nine_cycle(self) -> None:
        """Test σ = 234658971 on C9."""
        g = directed_cycle(9).underlying
        data = g_descent_set(g, Permutation.parse("234658971"))
        assert data.descents == (3, 5, 7)
        assert [data.rank(x) for x in (2, 3, 4, 6, 5, 8, 9, 7, 1)] == [
            1, 2, 3, 1, 4, 1, 2, 2, 3,
        ]
        assert data.rank_classes() == {
            1: frozenset({2, 6, 8}),
            2: frozenset({3, 7, 9}),
            3: frozenset({1, 4}),
            4: frozenset({5}),
        }

    def test_edgeless_tie(self) -> None:
        """Test that equal ranks with a larger letter first give a descent."""
        data = g_descent_set(Graph.from_edges(2, []), Permutation((2, 1)))
        assert data.ranks == (1, 1)
        assert data.descents == (1,)

    def test_increasing_ranks(self) -> None:
        """Test σ = 321 on the path 1-2-3: ranks climb, no descent."""
        g = Graph.from_edges(3, [(1, 2), (2, 3)])
        assert g_descent_set(g, Permutation((3, 2, 1))).descents == ()

    def test_size_mismatch(self) -> None:
        """Test that σ must permute [n]."""
        with pytest.raises(InvalidInputError):
            g_descent_set(Graph.from_edges(3, []), Permutation((2, 1)))


class TestInversions:
    """Test inv_G."""

    def test_edge(self) -> None:
        """Test 1 → 2 with σ = 21."""
        assert inv_digraph(digraph_from_edges(2, [(1, 2)]), Permutation((2, 1))) == 1

    def test_triangle(self) -> None:
        """Test C3 with σ = 132."""
        assert inv_digraph(directed_cycle(3), Permutation((1, 3, 2))) == 2

    def test_size_mismatch(self) -> None:
        """Test that σ must permute [n]."""
        with pytest.raises(InvalidInputError):
            inv_digraph(directed_cycle(3), Permutation((1, 2)))
