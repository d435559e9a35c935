"""Tests for partitions, compositions and descent sets."""

from fractions import Fraction

import pytest

from directed_cqsf.combinatorics.partitions import (
    Composition,
    Partition,
    composition_to_descent_set,
    compositions,
    descent_set_to_composition,
    partitions,
    rearrangements,
    split_blocks,
    z_lambda,
)
from directed_cqsf.utils.errors import InvalidInputError


class TestPartition:
    """Test the Partition type."""

    def test_sorted_on_construction(self) -> None:
        """Test that parts are sorted in decreasing order."""
        assert Partition((1, 3, 2)) == (3, 2, 1)

    def test_nonpositive_part_rejected(self) -> None:
        """Test that zero parts are rejected."""
        with pytest.raises(InvalidInputError):
            Partition((2, 0))

    def test_conjugate(self) -> None:
        """Test conjugation."""
        assert Partition((3, 1)).conjugate() == (2, 1, 1)
        assert Partition((2, 2)).conjugate() == (2, 2)

    def test_multiplicities(self) -> None:
        """Test part multiplicities."""
        assert Partition((2, 1, 1)).multiplicities() == {2: 1, 1: 2}


class TestEnumeration:
    """Test partition and composition enumeration."""

    def test_partitions_reverse_lex(self) -> None:
        """Test the partitions of 4, largest first."""
        assert partitions(4) == ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))

    def test_compositions_reverse_lex(self) -> None:
        """Test the compositions of 3, largest first."""
        assert compositions(3) == ((3,), (2, 1), (1, 2), (1, 1, 1))

    def test_composition_counts(self) -> None:
        """Test 2^(n-1) compositions."""
        assert len(compositions(6)) == 32
        assert compositions(0) == ((),)

    def test_rearrangements(self) -> None:
        """Test distinct rearrangements, largest first."""
        assert rearrangements((1, 2, 1)) == ((2, 1, 1), (1, 2, 1), (1, 1, 2))


class TestDescentSets:
    """Test conversions between descent sets and compositions."""

    def test_descent_set_to_composition(self) -> None:
        """Test {1, 3} in [3] gives (1, 2, 1)."""
        assert descent_set_to_composition(4, (1, 3)) == Composition((1, 2, 1))

    def test_composition_to_descent_set(self) -> None:
        """Test partial sums."""
        assert composition_to_descent_set((1, 2, 1)) == (1, 3)
        assert composition_to_descent_set((4,)) == ()

    def test_empty_composition(self) -> None:
        """Test that n = 0 maps the empty set to the empty composition."""
        assert descent_set_to_composition(0, ()) == Composition()

    def test_descent_out_of_range(self) -> None:
        """Test that descents outside [n-1] are rejected."""
        with pytest.raises(InvalidInputError):
            descent_set_to_composition(3, (3,))


class TestHelpers:
    """Test z_lambda and block splitting."""

    @pytest.mark.parametrize(
        "lam,expected",
        [((3,), 3), ((2, 1), 2), ((1, 1, 1), 6), ((2, 1, 1), 4), ((2, 2), 8)],
    )
    def test_z_lambda(self, lam: tuple, expected: int) -> None:
        """Test centralizer sizes."""
        assert z_lambda(Partition(lam)) == expected

    @pytest.mark.parametrize("n", range(1, 11))
    def test_class_sizes_sum_to_one(self, n: int) -> None:
        """Test Σ_λ 1/z_λ = 1 over the partitions of n."""
        assert sum(Fraction(1, z_lambda(lam)) for lam in partitions(n)) == 1

    def test_split_blocks(self) -> None:
        """Test cutting a word into blocks."""
        assert split_blocks((2, 3, 4, 6, 5), (3, 2)) == [(2, 3, 4), (6, 5)]

    def test_split_blocks_wrong_total(self) -> None:
        """Test that sizes must add up to the word length."""
        with pytest.raises(InvalidInputError):
            split_blocks((1, 2, 3), (2,))
