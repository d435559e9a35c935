"""Tests for the m, e and p transitions and ω on symmetric functions."""

from fractions import Fraction

import numpy as np
import pytest

from directed_cqsf.algebra.elements import SymT
from directed_cqsf.algebra.sym import (
    convert,
    e_to_m,
    expansion_in_m,
    m_to_e,
    m_to_p,
    omega_sym,
    p_to_m,
)
from directed_cqsf.combinatorics.partitions import Partition, partitions
from directed_cqsf.combinatorics.poly import TPoly


def _random_element(n: int, basis: str, seed: int) -> SymT:
    """A degree-n element with small random rational coefficients in t."""
    rng = np.random.default_rng(seed)
    terms = {}
    for lam in partitions(n):
        numerators = rng.integers(-5, 6, size=3)
        denominators = rng.integers(1, 5, size=3)
        terms[lam] = TPoly(
            tuple(Fraction(int(a), int(b)) for a, b in zip(numerators, denominators))
        )
    return SymT(n, basis, terms)


class TestTransitions:
    """Test basis changes on small cases."""

    def test_m11_is_e2(self) -> None:
        """Test m_11 = e_2."""
        assert m_to_e(SymT(2, "m", {(1, 1): 1})) == SymT(2, "e", {(2,): 1})

    def test_m2_in_e(self) -> None:
        """Test m_2 = e_11 - 2 e_2."""
        assert m_to_e(SymT(2, "m", {(2,): 1})) == SymT(2, "e", {(1, 1): 1, (2,): -2})

    def test_m2_is_p2(self) -> None:
        """Test m_2 = p_2."""
        assert m_to_p(SymT(2, "m", {(2,): 1})) == SymT(2, "p", {(2,): 1})

    def test_m11_in_p(self) -> None:
        """Test m_11 = (p_11 - p_2) / 2."""
        half = Fraction(1, 2)
        assert m_to_p(SymT(2, "m", {(1, 1): 1})) == SymT(
            2, "p", {(1, 1): half, (2,): -half}
        )

    def test_e21_in_m(self) -> None:
        """Test e_21 = m_21 + 3 m_111."""
        assert e_to_m(SymT(3, "e", {(2, 1): 1})) == SymT(
            3, "m", {(2, 1): 1, (1, 1, 1): 3}
        )

    def test_p21_in_m(self) -> None:
        """Test p_21 = m_3 + m_21."""
        assert p_to_m(SymT(3, "p", {(2, 1): 1})) == SymT(3, "m", {(3,): 1, (2, 1): 1})

    def test_round_trip_through_e_and_p(self) -> None:
        """Test that every basis of degree 4 returns to where it started."""
        t = TPoly((0, 1))
        s = SymT(4, "m", {(2, 2): t, (3, 1): 1, (1, 1, 1, 1): Fraction(1, 3)})
        assert convert(convert(s, "e"), "m") == s
        assert convert(convert(s, "p"), "m") == s

    @pytest.mark.parametrize("n", range(1, 9))
    def test_random_round_trips(self, n: int) -> None:
        """Test e, p and m transitions on random rational elements."""
        s = _random_element(n, "m", seed=n)
        assert e_to_m(m_to_e(s)) == s
        assert p_to_m(m_to_p(s)) == s
        e = _random_element(n, "e", seed=100 + n)
        assert m_to_e(e_to_m(e)) == e
        p = _random_element(n, "p", seed=200 + n)
        assert m_to_p(p_to_m(p)) == p

    def test_cached_expansion_is_read_only(self) -> None:
        """Test that a cached m-expansion cannot be changed by a caller."""
        row = expansion_in_m("e", Partition((2, 1)))
        with pytest.raises(TypeError):
            row[Partition((3,))] = 5  # type: ignore[index]
        assert expansion_in_m("e", Partition((2, 1))) == {(2, 1): 1, (1, 1, 1): 3}


class TestOmega:
    """Test ω."""

    def test_omega_m11(self) -> None:
        """Test ω(m_11) = h_2 = m_2 + m_11."""
        h2 = SymT(2, "m", {(2,): 1, (1, 1): 1})
        assert omega_sym(SymT(2, "m", {(1, 1): 1})) == h2

    def test_omega_keeps_basis(self) -> None:
        """Test ω(e_2) = e_11 - e_2 in the e basis."""
        assert omega_sym(SymT(2, "e", {(2,): 1})) == SymT(2, "e", {(1, 1): 1, (2,): -1})

    def test_involution(self) -> None:
        """Test ω² = 1 in the p basis."""
        s = SymT(3, "p", {(3,): 1, (2, 1): 2, (1, 1, 1): -1})
        assert omega_sym(omega_sym(s)) == s
