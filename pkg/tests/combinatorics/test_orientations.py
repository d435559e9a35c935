"""Tests for acyclic orientations and the chromatic polynomial."""

import pytest

from directed_cqsf.combinatorics.families import directed_cycle, directed_path
from directed_cqsf.combinatorics.graphs import (
    Graph,
    digraph_from_edges,
    orient_by_labels,
)
from directed_cqsf.combinatorics.orientations import (
    acyclic_orientations,
    chromatic_polynomial,
)
from directed_cqsf.combinatorics.poly import TPoly
from directed_cqsf.config.schema import EngineSettings
from directed_cqsf.utils.errors import BudgetExceededError, InvalidInputError
from directed_cqsf.verification.pools import undirected_graphs


def _sources(record) -> set[int]:
    heads = {v for _, v in record.arcs}
    return set(range(1, record.base.n + 1)) - heads


class TestAcyclicOrientations:
    """Test orientation enumeration."""

    def test_triangle(self) -> None:
        """Test that K3 has 6 acyclic orientations, each with one sink."""
        d = directed_cycle(3)
        records = acyclic_orientations(d.underlying, d)
        assert len(records) == 6
        assert all(r.sink_count == 1 for r in records)
        assert sorted(r.asc for r in records) == [1, 1, 1, 2, 2, 2]

    def test_four_cycle(self) -> None:
        """Test that C4 has 2^4 - 2 acyclic orientations."""
        d = directed_cycle(4)
        assert len(acyclic_orientations(d.underlying, d)) == 14

    def test_records_are_consistent(self) -> None:
        """Test that every record passes the topological-sort recheck."""
        d = directed_cycle(5)
        assert all(r.is_consistent() for r in acyclic_orientations(d.underlying, d))

    def test_nine_cycle_example(self) -> None:
        """Test the C9 orientation with sinks {2,6,8} and sources {1,5,7}."""
        d = directed_cycle(9)
        matches = [
            r
            for r in acyclic_orientations(d.underlying, d)
            if r.sinks == {2, 6, 8} and _sources(r) == {1, 5, 7}
        ]
        assert len(matches) == 1
        assert matches[0].asc == 3

    def test_path_example(self) -> None:
        """Test the P8 orientation with sinks {2,6,8} and sources {1,4,7}."""
        d = directed_path(8)
        matches = [
            r
            for r in acyclic_orientations(d.underlying, d)
            if r.sinks == {2, 6, 8} and _sources(r) == {1, 4, 7}
        ]
        assert len(matches) == 1
        assert matches[0].asc == 4

    def test_bidirected_edge_always_agrees(self) -> None:
        """Test that either arc of a bidirected pair ascends."""
        d = digraph_from_edges(2, [(1, 2), (2, 1)])
        assert [r.asc for r in acyclic_orientations(d.underlying, d)] == [1, 1]

    def test_reference_mismatch(self) -> None:
        """Test that the reference must sit over the given graph."""
        d = directed_cycle(3)
        with pytest.raises(InvalidInputError):
            acyclic_orientations(Graph.from_edges(3, [(1, 2)]), d)

    def test_edge_budget(self) -> None:
        """Test the orientation sweep budget."""
        d = directed_cycle(5)
        settings = EngineSettings(max_orientation_edges=4)
        with pytest.raises(BudgetExceededError) as excinfo:
            acyclic_orientations(d.underlying, d, settings)
        assert excinfo.value.requested == 5
        assert excinfo.value.budget == 4


class TestChromaticPolynomial:
    """Test deletion-contraction."""

    def test_triangle(self) -> None:
        """Test χ_{K3}(k) = k(k-1)(k-2)."""
        chi = chromatic_polynomial(directed_cycle(3).underlying)
        assert chi == TPoly((0, 2, -3, 1))

    def test_path(self) -> None:
        """Test χ_{P3}(k) = k(k-1)^2."""
        assert chromatic_polynomial(directed_path(3).underlying) == TPoly((0, 1, -2, 1))

    def test_edgeless(self) -> None:
        """Test k^n for the edgeless graph."""
        assert chromatic_polynomial(Graph.from_edges(3, [])) == TPoly.monomial(3)

    def test_acyclic_orientation_count(self) -> None:
        """Test |χ(-1)| equals the number of acyclic orientations."""
        d = directed_cycle(5)
        chi = chromatic_polynomial(d.underlying)
        assert abs(chi(-1)) == len(acyclic_orientations(d.underlying, d))

    @pytest.mark.parametrize(
        "n", [1, 2, 3, 4, pytest.param(5, marks=pytest.mark.slow)]
    )
    def test_acyclic_orientation_count_every_graph(self, n: int) -> None:
        """Test |χ_g(-1)| = |AO(g)| for every simple graph on n vertices."""
        for g in undirected_graphs(n):
            records = acyclic_orientations(g, orient_by_labels(g))
            assert abs(chromatic_polynomial(g)(-1)) == len(records)
