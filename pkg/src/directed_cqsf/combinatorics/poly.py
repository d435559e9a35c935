"""Polynomials in t with exact rational coefficients."""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Union

Scalar = Union[int, Fraction]

_SUPERSCRIPTS = str.maketrans("0123456789-", "⁰¹²³⁴⁵⁶⁷⁸⁹⁻")

# Largest k for which eulerian_polynomial enumerates S_k directly.
EULERIAN_ENUMERATION_LIMIT = 8


def _normalize(values: Iterable[Scalar]) -> tuple[Fraction, ...]:
    coefficients = [Fraction(v) for v in values]
    while coefficients and coefficients[-1] == 0:
        coefficients.pop()
    return tuple(coefficients)


@dataclass(frozen=True)
class TPoly:
    """
    A polynomial in t over the rationals.

    ``coefficients[i]`` is the coefficient of t^i. Trailing zeros are
    stripped on construction, so equality is coefficientwise.
    """

    coefficients: tuple[Fraction, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "coefficients", _normalize(self.coefficients))

    @classmethod
    def zero(cls) -> TPoly:
        return cls(())

    @classmethod
    def one(cls) -> TPoly:
        return cls((1,))

    @classmethod
    def constant(cls, value: Scalar) -> TPoly:
        return cls((value,))

    @classmethod
    def monomial(cls, degree: int, coefficient: Scalar = 1) -> TPoly:
        """Return ``coefficient * t**degree``."""
        if degree < 0:
            raise ValueError("Negative t-degree")
        return cls((0,) * degree + (coefficient,))

    @classmethod
    def from_counts(cls, counts: Iterable[int]) -> TPoly:
        """Build a polynomial from a histogram indexed by t-degree."""
        return cls(tuple(int(c) for c in counts))

    @property
    def degree(self) -> int:
        """Highest t-degree with a nonzero coefficient (-1 for zero)."""
        return len(self.coefficients) - 1

    @property
    def valuation(self) -> int:
        """Lowest t-degree with a nonzero coefficient (-1 for zero)."""
        for i, c in enumerate(self.coefficients):
            if c != 0:
                return i
        return -1

    def is_zero(self) -> bool:
        return not self.coefficients

    def __bool__(self) -> bool:
        return bool(self.coefficients)

    def __getitem__(self, degree: int) -> Fraction:
        if 0 <= degree < len(self.coefficients):
            return self.coefficients[degree]
        return Fraction(0)

    def items(self) -> Iterator[tuple[int, Fraction]]:
        """Yield ``(degree, coefficient)`` for nonzero coefficients."""
        for i, c in enumerate(self.coefficients):
            if c != 0:
                yield i, c

    @staticmethod
    def _coerce(other: object) -> TPoly | None:
        if isinstance(other, TPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return TPoly.constant(other)
        return None

    def __add__(self, other: object) -> TPoly:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        size = max(len(self.coefficients), len(rhs.coefficients))
        return TPoly(tuple(self[i] + rhs[i] for i in range(size)))

    __radd__ = __add__

    def __neg__(self) -> TPoly:
        return TPoly(tuple(-c for c in self.coefficients))

    def __sub__(self, other: object) -> TPoly:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: object) -> TPoly:
        lhs = self._coerce(other)
        if lhs is None:
            return NotImplemented
        return lhs - self

    def __mul__(self, other: object) -> TPoly:
        if isinstance(other, (int, Fraction)):
            return TPoly(tuple(c * other for c in self.coefficients))
        if not isinstance(other, TPoly):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return TPoly.zero()
        product = [Fraction(0)] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in self.items():
            for j, b in other.items():
                product[i + j] += a * b
        return TPoly(tuple(product))

    __rmul__ = __mul__

    def __truediv__(self, other: Scalar) -> TPoly:
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        return TPoly(tuple(c / other for c in self.coefficients))

    def __pow__(self, exponent: int) -> TPoly:
        if exponent < 0:
            raise ValueError("Negative exponent")
        result = TPoly.one()
        for _ in range(exponent):
            result = result * self
        return result

    def __call__(self, value: Scalar) -> Fraction:
        """Evaluate at t = value (Horner)."""
        total = Fraction(0)
        for c in reversed(self.coefficients):
            total = total * value + c
        return total

    def shift(self, k: int) -> TPoly:
        """Multiply by t^k."""
        if self.is_zero():
            return self
        return TPoly((0,) * k + self.coefficients)

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.coefficients)

    def is_palindromic(self) -> bool:
        """True when the coefficients read the same from both ends of the support."""
        if self.is_zero():
            return True
        support = self.coefficients[self.valuation :]
        return support == support[::-1]

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts: list[str] = []
        for degree, c in self.items():
            sign = "-" if c < 0 else "+"
            magnitude = abs(c)
            if magnitude.denominator != 1:
                number = f"({magnitude})"
            else:
                number = str(magnitude.numerator)
            if degree == 0:
                body = number
            else:
                power = "t"
                if degree > 1:
                    power += str(degree).translate(_SUPERSCRIPTS)
                body = power if magnitude == 1 else number + power
            parts.append(sign + body)
        text = "".join(parts)
        return text[1:] if text.startswith("+") else text


def t_bracket(k: int) -> TPoly:
    """
    Return the t-analog [k]_t = 1 + t + ... + t^(k-1).

    Args:
        k: Positive integer

    Returns:
        The polynomial [k]_t
    """
    if k < 1:
        raise ValueError(f"[k]_t needs k >= 1, got {k}")
    return TPoly((1,) * k)


def descent_count(word: tuple[int, ...]) -> int:
    """Number of positions i with word[i] > word[i + 1]."""
    return sum(1 for a, b in zip(word, word[1:]) if a > b)


def eulerian_polynomial(k: int) -> TPoly:
    """
    Return the Eulerian polynomial A_k(t) = sum over S_k of t^des.

    A_0 = A_1 = 1. Small k are enumerated directly; larger k use the
    recurrence A(k, d) = (d + 1) A(k-1, d) + (k - d) A(k-1, d-1).

    Args:
        k: Nonnegative integer

    Returns:
        A_k(t)
    """
    if k < 0:
        raise ValueError(f"Eulerian polynomial needs k >= 0, got {k}")
    if k <= 1:
        return TPoly.one()
    if k <= EULERIAN_ENUMERATION_LIMIT:
        counts = [0] * k
        for word in permutations(range(k)):
            counts[descent_count(word)] += 1
        return TPoly.from_counts(counts)

    row = [1]
    for size in range(2, k + 1):
        row = [
            (d + 1) * (row[d] if d < len(row) else 0)
            + (size - d) * (row[d - 1] if d >= 1 else 0)
            for d in range(size)
        ]
    return TPoly.from_counts(row)
