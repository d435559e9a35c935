"""Permutations of [n] in one-line notation."""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field
from itertools import permutations as _itertools_permutations

from directed_cqsf.utils.errors import InvalidInputError


@dataclass(frozen=True, order=True)
class Permutation:
    """
    A permutation σ = σ_1 σ_2 ... σ_n of [n].

    Positions are 1-based to match the usual descent-set conventions:
    ``position(x)`` is σ⁻¹(x).
    """

    word: tuple[int, ...]
    _positions: tuple[int, ...] = field(
        init=False, repr=False, compare=False, hash=False
    )

    def __post_init__(self) -> None:
        word = tuple(int(x) for x in self.word)
        if sorted(word) != list(range(1, len(word) + 1)):
            raise InvalidInputError(f"{word} is not a permutation of [{len(word)}]")
        positions = [0] * (len(word) + 1)
        for index, letter in enumerate(word, start=1):
            positions[letter] = index
        object.__setattr__(self, "word", word)
        object.__setattr__(self, "_positions", tuple(positions))

    @classmethod
    def parse(cls, text: str) -> Permutation:
        """Parse "234658971" (single digits) or "2 3 10 1" (space separated)."""
        tokens = text.split() if " " in text.strip() else list(text.strip())
        return cls(tuple(int(tok) for tok in tokens))

    @property
    def n(self) -> int:
        return len(self.word)

    def position(self, letter: int) -> int:
        """Return σ⁻¹(letter), 1-based."""
        return self._positions[letter]

    def inverse(self) -> Permutation:
        return Permutation(self._positions[1:])

    def __len__(self) -> int:
        return len(self.word)

    def __iter__(self) -> Iterator[int]:
        return iter(self.word)

    def __getitem__(self, index: int) -> int:
        """Return σ_index, 1-based."""
        return self.word[index - 1]

    def __str__(self) -> str:
        if self.n < 10:
            return "".join(str(x) for x in self.word)
        return " ".join(str(x) for x in self.word)


def all_permutations(n: int, prefix: Iterable[int] = ()) -> Iterator[tuple[int, ...]]:
    """
    Yield every permutation word of [n] that starts with ``prefix``.

    Words come out in lexicographic order; the prefix lets sweeps be split
    into independent chunks.
    """
    head = tuple(prefix)
    rest = [x for x in range(1, n + 1) if x not in head]
    for tail in _itertools_permutations(rest):
        yield head + tail
