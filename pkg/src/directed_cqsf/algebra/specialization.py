"""Principal specialization x_1 = ... = x_k = 1, all other variables 0."""

from __future__ import annotations

from math import comb, factorial, prod

from directed_cqsf.algebra.elements import GradedFunction
from directed_cqsf.combinatorics.partitions import Partition
from directed_cqsf.combinatorics.poly import TPoly
from directed_cqsf.utils.errors import InvalidInputError


def _basis_value(basis: str, n: int, index: tuple[int, ...], k: int) -> int:
    if basis == "M":
        return comb(k, len(index))
    if basis == "F":
        if n == 0:
            return 1
        return comb(k - len(index) + n - 1, n) if k - len(index) + n - 1 >= 0 else 0
    if basis == "m":
        length = len(index)
        if length > k:
            return 0
        repeats = prod(factorial(m) for m in Partition(index).multiplicities().values())
        return factorial(k) // (factorial(k - length) * repeats)
    if basis == "e":
        return prod(comb(k, part) for part in index)
    if basis == "p":
        return k ** len(index)
    raise InvalidInputError(f"Unknown basis {basis!r}")


def principal_specialization(element: GradedFunction, k: int) -> TPoly:
    """
    Set the first k variables to 1 and the rest to 0.

    Args:
        element: Quasisymmetric or symmetric function in any basis
        k: Number of variables kept

    Returns:
        The resulting polynomial in t
    """
    if k < 0:
        raise InvalidInputError(f"k must be nonnegative, got {k}")
    total = TPoly.zero()
    for index, coefficient in element.terms.items():
        value = _basis_value(element.basis, element.n, tuple(index), k)
        if value:
            total = total + coefficient * value
    return total
