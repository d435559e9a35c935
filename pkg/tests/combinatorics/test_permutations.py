"""Tests for permutations."""

import pytest

from directed_cqsf.combinatorics.permutations import Permutation, all_permutations
from directed_cqsf.utils.errors import InvalidInputError


class TestPermutation:
    """Test the Permutation type."""

    def test_parse_digits(self) -> None:
        """Test parsing single-digit one-line notation."""
        sigma = Permutation.parse("234658971")
        assert sigma.n == 9
        assert sigma[1] == 2
        assert sigma.position(1) == 9

    def test_parse_spaced(self) -> None:
        """Test parsing space-separated notation."""
        sigma = Permutation.parse("2 10 1 3 4 5 6 7 8 9")
        assert sigma[2] == 10
        assert str(sigma) == "2 10 1 3 4 5 6 7 8 9"

    def test_inverse(self) -> None:
        """Test the inverse permutation."""
        sigma = Permutation((2, 3, 1))
        assert sigma.inverse() == Permutation((3, 1, 2))

    def test_not_a_permutation(self) -> None:
        """Test that repeated letters are rejected."""
        with pytest.raises(InvalidInputError):
            Permutation((1, 1, 2))


class TestAllPermutations:
    """Test permutation enumeration."""

    def test_lexicographic(self) -> None:
        """Test S_3 in lexicographic order."""
        assert list(all_permutations(3)) == [
            (1, 2, 3),
            (1, 3, 2),
            (2, 1, 3),
            (2, 3, 1),
            (3, 1, 2),
            (3, 2, 1),
        ]

    def test_prefix_chunks_cover_everything(self) -> None:
        """Test that first-letter chunks partition S_n."""
        chunks = [list(all_permutations(4, (first,))) for first in range(1, 5)]
        assert sum(len(c) for c in chunks) == 24
        assert all(word[0] == first for first, c in enumerate(chunks, 1) for word in c)
