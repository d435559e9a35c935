"""The e-expansion of X for directed cycles, read off a generating function."""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass
from functools import lru_cache
from types import MappingProxyType

from directed_cqsf.algebra.elements import SymT
from directed_cqsf.combinatorics.partitions import Partition
from directed_cqsf.combinatorics.poly import TPoly, t_bracket
from directed_cqsf.utils.errors import InvalidInputError

# z-degree -> e-index -> coefficient
_Series = dict[int, dict[Partition, TPoly]]


@dataclass(frozen=True)
class ESeries:
    """
    Σ_{n=2}^{truncation} X_{C_n} z^n with each X_{C_n} in the e basis.
    """

    truncation: int
    coefficients: Mapping[int, SymT]

    def __getitem__(self, n: int) -> SymT:
        if not 2 <= n <= self.truncation:
            raise InvalidInputError(
                f"Degree {n} is outside the series range 2..{self.truncation}"
            )
        return self.coefficients[n]


def _multiply(left: _Series, right: _Series, truncation: int) -> _Series:
    """Product of two series in z; e_λ e_μ is e indexed by λ ∪ μ."""
    product: _Series = {}
    for a, left_terms in left.items():
        for b, right_terms in right.items():
            if a + b > truncation:
                continue
            bucket = product.setdefault(a + b, {})
            for lam, x in left_terms.items():
                for mu, y in right_terms.items():
                    nu = Partition(lam + mu)
                    bucket[nu] = bucket.get(nu, TPoly.zero()) + x * y
    return product


def _add_into(total: _Series, extra: _Series) -> None:
    for degree, terms in extra.items():
        bucket = total.setdefault(degree, {})
        for lam, c in terms.items():
            bucket[lam] = bucket.get(lam, TPoly.zero()) + c


@lru_cache(maxsize=None)
def cycle_e_expansion_series(truncation: int) -> ESeries:
    """
    Expand t Σ k[k-1]_t e_k z^k / (1 - t Σ [k-1]_t e_k z^k), k >= 2, through z^N.

    The denominator's tail has z-valuation 2, so its geometric series
    stops after ⌊N/2⌋ powers.

    Args:
        truncation: Highest z-degree N kept, N >= 2

    Returns:
        ESeries whose degree-n coefficient is X_{C_n} in the e basis
    """
    if truncation < 2:
        raise InvalidInputError(f"Series truncation must be >= 2, got {truncation}")
    t = TPoly.monomial(1)
    numerator: _Series = {
        k: {Partition((k,)): t * t_bracket(k - 1) * k} for k in range(2, truncation + 1)
    }
    tail: _Series = {
        k: {Partition((k,)): t * t_bracket(k - 1)} for k in range(2, truncation + 1)
    }

    total: _Series = {}
    _add_into(total, numerator)
    power = numerator
    for _ in range(truncation // 2):
        power = _multiply(power, tail, truncation)
        if not power:
            break
        _add_into(total, power)

    return ESeries(
        truncation=truncation,
        coefficients=MappingProxyType(
            {n: SymT(n, "e", total.get(n, {})) for n in range(2, truncation + 1)}
        ),
    )


def cycle_e_coefficient(n: int, lam: Partition) -> TPoly:
    """c_λ(t), the e_λ coefficient of X_{C_n}."""
    lam = Partition(lam)
    if n < 2:
        raise InvalidInputError(f"Directed cycles need n >= 2, got {n}")
    if lam.weight != n:
        raise InvalidInputError(f"Partition {lam} does not have weight {n}")
    return cycle_e_expansion_series(n)[n].coefficient(lam)
