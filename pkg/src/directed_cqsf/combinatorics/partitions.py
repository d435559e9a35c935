"""Integer partitions, compositions and descent sets."""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterable, Iterator
from functools import lru_cache
from itertools import combinations
from math import factorial, prod

from directed_cqsf.utils.errors import InvalidInputError


class Partition(tuple):
    """
    A weakly decreasing tuple of positive integers.

    Being a tuple, a Partition hashes and compares like one; sorting in
    reverse gives the reverse lexicographic order used throughout.
    """

    def __new__(cls, parts: Iterable[int] = ()) -> Partition:
        values = tuple(int(p) for p in parts)
        if any(p <= 0 for p in values):
            raise InvalidInputError(f"Partition parts must be positive: {values}")
        return super().__new__(cls, sorted(values, reverse=True))

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def multiplicities(self) -> dict[int, int]:
        """Map each part size i to its multiplicity m_i."""
        return dict(Counter(self))

    def conjugate(self) -> Partition:
        if not self:
            return Partition()
        return Partition(sum(1 for p in self if p > i) for i in range(self[0]))

    def __repr__(self) -> str:
        return f"Partition({tuple(self)})"


class Composition(tuple):
    """An ordered tuple of positive integers."""

    def __new__(cls, parts: Iterable[int] = ()) -> Composition:
        values = tuple(int(p) for p in parts)
        if any(p <= 0 for p in values):
            raise InvalidInputError(f"Composition parts must be positive: {values}")
        return super().__new__(cls, values)

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def sorted_partition(self) -> Partition:
        """The partition obtained by sorting the parts."""
        return Partition(self)

    def reversed(self) -> Composition:
        return Composition(reversed(self))

    def __repr__(self) -> str:
        return f"Composition({tuple(self)})"


DescentSet = tuple[int, ...]


@lru_cache(maxsize=None)
def partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of n in reverse lexicographic order, largest first."""
    if n < 0:
        raise InvalidInputError(f"Cannot partition a negative integer: {n}")

    def _generate(remaining: int, largest: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        for part in range(min(remaining, largest), 0, -1):
            for rest in _generate(remaining - part, part):
                yield (part,) + rest

    return tuple(Partition(p) for p in _generate(n, n))


@lru_cache(maxsize=None)
def compositions(n: int) -> tuple[Composition, ...]:
    """All compositions of n in reverse lexicographic order."""
    if n < 0:
        raise InvalidInputError(f"Cannot compose a negative integer: {n}")
    if n == 0:
        return (Composition(),)
    found = [descent_set_to_composition(n, s) for s in subsets(n - 1)]
    return tuple(sorted(found, reverse=True))


@lru_cache(maxsize=None)
def subsets(m: int) -> tuple[DescentSet, ...]:
    """All subsets of [m] as sorted tuples, by size then lexicographically."""
    return tuple(
        s for size in range(m + 1) for s in combinations(range(1, m + 1), size)
    )


def descent_set_to_composition(n: int, descents: Iterable[int]) -> Composition:
    """Map S ⊆ [n-1] to the composition of n whose partial sums are S."""
    cuts = sorted(set(descents))
    if any(not 1 <= s <= n - 1 for s in cuts):
        raise InvalidInputError(f"Descent set {cuts} is not inside [{n - 1}]")
    if n == 0:
        return Composition()
    bounds = [0] + cuts + [n]
    return Composition(b - a for a, b in zip(bounds, bounds[1:]))


def composition_to_descent_set(alpha: Iterable[int]) -> DescentSet:
    """Partial sums of the composition, excluding the total."""
    parts = tuple(alpha)
    sums: list[int] = []
    running = 0
    for part in parts[:-1]:
        running += part
        sums.append(running)
    return tuple(sums)


def rearrangements(parts: Iterable[int]) -> tuple[Composition, ...]:
    """All distinct orderings of the given parts, in reverse lexicographic order."""
    counts = Counter(parts)

    def _generate(remaining: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        for part in sorted(counts, reverse=True):
            if counts[part]:
                counts[part] -= 1
                for rest in _generate(remaining - 1):
                    yield (part,) + rest
                counts[part] += 1

    return tuple(Composition(c) for c in _generate(sum(counts.values())))


def z_lambda(lam: Partition) -> int:
    """
    Return z_λ = Π i^{m_i} m_i!, the centralizer size of cycle type λ.

    Args:
        lam: Nonempty partition

    Returns:
        z_λ as an exact integer
    """
    lam = Partition(lam)
    if not lam:
        raise InvalidInputError("z_lambda needs a nonempty partition")
    return prod(i**m * factorial(m) for i, m in lam.multiplicities().items())


def split_blocks(word: tuple[int, ...], sizes: Iterable[int]) -> list[tuple[int, ...]]:
    """Cut a word into consecutive blocks of the given sizes."""
    blocks = []
    start = 0
    for size in sizes:
        blocks.append(word[start : start + size])
        start += size
    if start != len(word):
        raise InvalidInputError(
            f"Block sizes sum to {start}, word has length {len(word)}"
        )
    return blocks
