"""Tests for sink and gap ascent polynomials."""

import pytest

from directed_cqsf.chromatic.sinks import (
    ao_lambda_polynomial,
    cycle_or_path_order,
    orientation_gap_partition,
    sink_generating_polynomial,
)
from directed_cqsf.combinatorics.families import directed_cycle, directed_path
from directed_cqsf.combinatorics.graphs import digraph_from_edges
from directed_cqsf.combinatorics.orientations import acyclic_orientations
from directed_cqsf.combinatorics.poly import TPoly
from directed_cqsf.utils.errors import InvalidInputError


def _record(d, sinks):
    for record in acyclic_orientations(d.underlying, d):
        if record.sinks == frozenset(sinks):
            return record
    raise AssertionError(f"no orientation with sinks {sinks}")


class TestSinkPolynomial:
    """Test the sink-count generating polynomial."""

    def test_triangle(self) -> None:
        """Test one sink on C3."""
        assert sink_generating_polynomial(directed_cycle(3), 1) == TPoly((0, 3, 3))

    def test_edge(self) -> None:
        """Test one sink on 1 → 2."""
        d = digraph_from_edges(2, [(1, 2)])
        assert sink_generating_polynomial(d, 1) == TPoly((1, 1))

    def test_impossible(self) -> None:
        """Test that C3 never has three sinks."""
        assert sink_generating_polynomial(directed_cycle(3), 3).is_zero()


class TestShapes:
    """Test cycle and path recognition."""

    def test_cycle(self) -> None:
        """Test the walking order of C4."""
        assert cycle_or_path_order(directed_cycle(4)) == ("cycle", [1, 2, 3, 4])

    def test_relabeled_path(self) -> None:
        """Test a path starting from vertex 3."""
        d = digraph_from_edges(3, [(3, 1), (1, 2)])
        assert cycle_or_path_order(d) == ("path", [3, 1, 2])

    def test_neither(self) -> None:
        """Test that an in-star is rejected."""
        with pytest.raises(InvalidInputError):
            cycle_or_path_order(digraph_from_edges(3, [(1, 3), (2, 3)]))


class TestGapPartition:
    """Test the λ attached to an orientation."""

    def test_nine_cycle(self) -> None:
        """Test sinks {2, 6, 8} on C9."""
        d = directed_cycle(9)
        record = next(
            r
            for r in acyclic_orientations(d.underlying, d)
            if r.sinks == {2, 6, 8} and r.asc == 3
        )
        assert orientation_gap_partition(d, record) == (4, 3, 2)

    def test_path_merges_ends(self) -> None:
        """Test sinks {2, 6, 8} on P8: the end segments merge."""
        d = directed_path(8)
        record = next(
            r
            for r in acyclic_orientations(d.underlying, d)
            if r.sinks == {2, 6, 8} and r.asc == 4
        )
        assert orientation_gap_partition(d, record) == (4, 2, 2)

    def test_path_empty_end(self) -> None:
        """Test a path whose only sink is its last vertex."""
        d = directed_path(3)
        assert orientation_gap_partition(d, _record(d, {3})) == (3,)


class TestAOLambda:
    """Test AO_λ ascent polynomials."""

    def test_triangle(self) -> None:
        """Test λ = (3) on C3."""
        assert ao_lambda_polynomial(directed_cycle(3), (3,)) == TPoly((0, 3, 3))

    def test_four_cycle(self) -> None:
        """Test λ = (2, 2) on C4."""
        assert ao_lambda_polynomial(directed_cycle(4), (2, 2)) == TPoly((0, 0, 2))

    def test_path(self) -> None:
        """Test both shapes on P3."""
        d = directed_path(3)
        assert ao_lambda_polynomial(d, (3,)) == TPoly((1, 1, 1))
        assert ao_lambda_polynomial(d, (2, 1)) == TPoly((0, 1))

    def test_weight_mismatch(self) -> None:
        """Test that λ must be a partition of n."""
        with pytest.raises(InvalidInputError):
            ao_lambda_polynomial(directed_cycle(3), (2,))
