"""Tests for the digraph family generators."""

import pytest

from directed_cqsf.combinatorics.families import (
    circular_digraph,
    directed_cycle,
    directed_path,
    family_generator,
    interval_digraph,
)
from directed_cqsf.utils.errors import InvalidInputError


class TestInterval:
    """Test G_{n,r}."""

    def test_path(self) -> None:
        """Test that r = 2 gives the directed path."""
        assert interval_digraph(4, 2).sorted_edges == ((1, 2), (2, 3), (3, 4))
        assert directed_path(4) == interval_digraph(4, 2)

    def test_band(self) -> None:
        """Test r = 3."""
        assert interval_digraph(4, 3).sorted_edges == (
            (1, 2),
            (1, 3),
            (2, 3),
            (2, 4),
            (3, 4),
        )

    def test_edgeless(self) -> None:
        """Test r = 1."""
        assert not interval_digraph(3, 1).edges

    def test_out_of_range(self) -> None:
        """Test that r must lie in [1, n]."""
        with pytest.raises(InvalidInputError):
            interval_digraph(3, 4)


class TestCircular:
    """Test G*_{n,r} and directed cycles."""

    def test_directed_cycle(self) -> None:
        """Test C4."""
        edges = frozenset({(1, 2), (2, 3), (3, 4), (4, 1)})
        assert circular_digraph(4, 2).edges == edges
        assert directed_cycle(4) == circular_digraph(4, 2)

    def test_wider_band(self) -> None:
        """Test G*_{5,3}: each vertex points to the next two."""
        d = circular_digraph(5, 3)
        assert len(d.edges) == 10
        assert d.out_neighbors[4] == frozenset({5, 1})
        assert d.is_oriented()

    def test_band_limit(self) -> None:
        """Test that r may not exceed ceil(n/2)."""
        with pytest.raises(InvalidInputError):
            circular_digraph(5, 4)

    def test_two_cycle_is_bidirected(self) -> None:
        """Test that the 2-cycle is the bidirected pair."""
        assert directed_cycle(2).edges == frozenset({(1, 2), (2, 1)})


class TestFamilyGenerator:
    """Test the family dispatcher."""

    def test_dispatch(self) -> None:
        """Test every kind."""
        assert family_generator("interval", 4, 2) == interval_digraph(4, 2)
        assert family_generator("circular", 6, 3) == circular_digraph(6, 3)
        assert family_generator("path", 3) == directed_path(3)
        assert family_generator("cycle", 5) == directed_cycle(5)

    def test_missing_band(self) -> None:
        """Test that interval and circular need r."""
        with pytest.raises(InvalidInputError):
            family_generator("circular", 5)
