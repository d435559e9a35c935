"""Tests for the graded function containers."""

import pytest

from directed_cqsf.algebra.elements import QSymT, SymT
from directed_cqsf.combinatorics.poly import TPoly
from directed_cqsf.utils.errors import InvalidInputError


class TestConstruction:
    """Test normalization on construction."""

    def test_zero_terms_dropped(self) -> None:
        """Test that zero coefficients vanish."""
        q = QSymT(2, "M", {(1, 1): 0, (2,): 1})
        assert list(q.terms) == [(2,)]

    def test_partition_index_sorted(self) -> None:
        """Test that symmetric indices are sorted into partitions."""
        s = SymT(3, "m", {(1, 2): 1})
        assert s.coefficient((2, 1)) == TPoly.one()

    def test_wrong_weight(self) -> None:
        """Test that indices must have weight n."""
        with pytest.raises(InvalidInputError):
            QSymT(3, "M", {(1, 1): 1})

    def test_descent_set_range(self) -> None:
        """Test that F-indices must lie inside [n-1]."""
        with pytest.raises(InvalidInputError):
            QSymT(3, "F", {(3,): 1})

    def test_unknown_basis(self) -> None:
        """Test basis validation per class."""
        with pytest.raises(InvalidInputError):
            SymT(2, "M", {})

    def test_repeated_indices_merge(self) -> None:
        """Test that equal indices after sorting add up."""
        s = SymT(3, "e", {(1, 2): 1, (2, 1): TPoly((0, 1))})
        assert s.coefficient((2, 1)) == TPoly((1, 1))


class TestArithmetic:
    """Test linear operations."""

    def test_add_and_cancel(self) -> None:
        """Test that a - a is zero."""
        a = SymT(2, "e", {(2,): TPoly((0, 1))})
        assert (a - a).is_zero()

    def test_scalar_multiplication(self) -> None:
        """Test multiplication by a polynomial in t."""
        a = SymT(2, "e", {(2,): 2})
        assert TPoly((0, 1)) * a == SymT(2, "e", {(2,): TPoly((0, 2))})

    def test_incompatible(self) -> None:
        """Test that bases must match."""
        with pytest.raises(InvalidInputError):
            SymT(2, "e", {(2,): 1}) + SymT(2, "m", {(2,): 1})


class TestTStructure:
    """Test t-support queries."""

    def test_support_and_slice(self) -> None:
        """Test the t-support and a slice."""
        s = SymT(2, "e", {(2,): TPoly((0, 1, 1)), (1, 1): TPoly((0, 0, 0, 4))})
        assert s.t_support() == (1, 3)
        assert s.t_slice(2) == {(2,): 1}

    def test_zero_support(self) -> None:
        """Test that zero has no support."""
        assert SymT.zero(2, "e").t_support() is None

    def test_evaluate_t(self) -> None:
        """Test t = 1."""
        s = SymT(2, "e", {(2,): TPoly((0, 1, 1))})
        assert s.evaluate_t(1) == SymT(2, "e", {(2,): 2})


class TestImmutability:
    """Test that built elements stay fixed."""

    def test_terms_read_only(self) -> None:
        """Test that terms cannot be changed after construction."""
        s = SymT(2, "e", {(2,): 1})
        with pytest.raises(TypeError):
            s.terms[(1, 1)] = TPoly.one()  # type: ignore[index]
        assert s == SymT(2, "e", {(2,): 1})
