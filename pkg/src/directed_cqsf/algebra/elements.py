"""Homogeneous quasisymmetric and symmetric functions with TPoly coefficients."""

from __future__ import annotations

from collections.abc import Iterator, Mapping
from dataclasses import dataclass, field
from fractions import Fraction
from types import MappingProxyType
from typing import Any, ClassVar, Union

from directed_cqsf.combinatorics.partitions import Composition, DescentSet, Partition
from directed_cqsf.combinatorics.poly import TPoly
from directed_cqsf.utils.errors import InvalidInputError

Coefficient = Union[TPoly, int, Fraction]
Index = tuple[int, ...]


@dataclass(frozen=True, eq=False)
class GradedFunction:
    """
    A degree-n function written in one basis, as a finite sum of
    ``coefficient(t) * b_index``.

    Subclasses fix the allowed basis tags and how indices are normalized.
    Zero coefficients are dropped, so two elements are equal exactly when
    their nonzero terms agree.
    """

    BASES: ClassVar[tuple[str, ...]] = ()

    n: int
    basis: str
    terms: Mapping[Any, TPoly] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.basis not in self.BASES:
            raise InvalidInputError(
                f"{type(self).__name__} basis must be one of {self.BASES}, "
                f"got {self.basis!r}"
            )
        if self.n < 0:
            raise InvalidInputError(f"Degree must be nonnegative, got {self.n}")
        merged: dict[Any, TPoly] = {}
        for raw_index, raw_coefficient in dict(self.terms).items():
            index = self.normalize_index(raw_index)
            coefficient = (
                raw_coefficient
                if isinstance(raw_coefficient, TPoly)
                else TPoly.constant(raw_coefficient)
            )
            merged[index] = merged.get(index, TPoly.zero()) + coefficient
        cleaned = {k: v for k, v in merged.items() if not v.is_zero()}
        object.__setattr__(self, "terms", MappingProxyType(cleaned))

    def normalize_index(self, index: Index) -> Any:
        raise NotImplementedError

    @classmethod
    def zero(cls, n: int, basis: str):
        return cls(n, basis, {})

    @classmethod
    def single(cls, n: int, basis: str, index: Index, coefficient: Coefficient = 1):
        return cls(n, basis, {index: coefficient})

    def coefficient(self, index: Index) -> TPoly:
        return self.terms.get(self.normalize_index(index), TPoly.zero())

    def items(self) -> Iterator[tuple[Any, TPoly]]:
        """Terms in reverse lexicographic order of their index."""
        for index in sorted(self.terms, reverse=True):
            yield index, self.terms[index]

    def is_zero(self) -> bool:
        return not self.terms

    def _check_compatible(self, other: GradedFunction) -> None:
        if (
            type(other) is not type(self)
            or other.n != self.n
            or other.basis != self.basis
        ):
            raise InvalidInputError(
                f"Cannot combine {self.basis}-basis degree {self.n} with "
                f"{other.basis}-basis degree {other.n}"
            )

    def __add__(self, other: GradedFunction):
        self._check_compatible(other)
        merged = dict(self.terms)
        for index, coefficient in other.terms.items():
            merged[index] = merged.get(index, TPoly.zero()) + coefficient
        return type(self)(self.n, self.basis, merged)

    def __neg__(self):
        return type(self)(self.n, self.basis, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other: GradedFunction):
        return self + (-other)

    def __mul__(self, scalar: Coefficient):
        if not isinstance(scalar, (TPoly, int, Fraction)):
            return NotImplemented
        return type(self)(
            self.n, self.basis, {k: v * scalar for k, v in self.terms.items()}
        )

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if type(other) is not type(self):
            return NotImplemented
        return (
            self.n == other.n  # type: ignore[attr-defined]
            and self.basis == other.basis  # type: ignore[attr-defined]
            and dict(self.terms) == dict(other.terms)  # type: ignore[attr-defined]
        )

    __hash__ = None  # type: ignore[assignment]

    def t_support(self) -> tuple[int, int] | None:
        """Lowest and highest t-degree occurring in any coefficient."""
        if self.is_zero():
            return None
        low = min(c.valuation for c in self.terms.values())
        high = max(c.degree for c in self.terms.values())
        return low, high

    def t_slice(self, degree: int) -> dict[Any, Fraction]:
        """The t^degree part a_degree(x), as index → rational."""
        return {k: v[degree] for k, v in self.terms.items() if v[degree] != 0}

    def evaluate_t(self, value: int | Fraction):
        """Substitute t = value, keeping the result as constant coefficients."""
        return type(self)(
            self.n,
            self.basis,
            {k: TPoly.constant(v(value)) for k, v in self.terms.items()},
        )

    def __repr__(self) -> str:
        body = ", ".join(f"{tuple(k)}: {v}" for k, v in self.items())
        return f"{type(self).__name__}(n={self.n}, basis={self.basis!r}, {{{body}}})"


class QSymT(GradedFunction):
    """
    A quasisymmetric function in the M or F basis.

    M-indices are compositions of n; F-indices are descent sets S ⊆ [n-1]
    stored as sorted tuples.
    """

    BASES = ("M", "F")

    def normalize_index(self, index: Index) -> Composition | DescentSet:
        if self.basis == "M":
            alpha = Composition(index)
            if alpha.weight != self.n:
                raise InvalidInputError(
                    f"Composition {alpha} does not have weight {self.n}"
                )
            return alpha
        descents = tuple(sorted(set(int(i) for i in index)))
        if any(not 1 <= i <= self.n - 1 for i in descents):
            raise InvalidInputError(
                f"Descent set {descents} is not inside [{self.n - 1}]"
            )
        return descents


class SymT(GradedFunction):
    """A symmetric function in the m, e or p basis, indexed by partitions of n."""

    BASES = ("m", "e", "p")

    def normalize_index(self, index: Index) -> Partition:
        lam = Partition(index)
        if lam.weight != self.n:
            raise InvalidInputError(f"Partition {lam} does not have weight {self.n}")
        return lam
