"""Permutation statistics relative to a graph: inv_G, G-ranks and G-descents."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from directed_cqsf.combinatorics.graphs import Digraph, Edge, Graph
from directed_cqsf.combinatorics.partitions import DescentSet
from directed_cqsf.combinatorics.permutations import Permutation
from directed_cqsf.utils.errors import InvalidInputError


@dataclass(frozen=True)
class GDescentData:
    """
    G-ranks and G-descents of a permutation.

    ``ranks[x - 1]`` is the rank of letter x: the length of the longest
    subword ending at x whose consecutive letters are adjacent in G.
    """

    sigma: Permutation
    ranks: tuple[int, ...]
    descents: DescentSet

    def rank(self, letter: int) -> int:
        return self.ranks[letter - 1]

    def rank_classes(self) -> dict[int, frozenset[int]]:
        """Rank value → letters carrying it."""
        classes: dict[int, set[int]] = {}
        for letter, value in enumerate(self.ranks, start=1):
            classes.setdefault(value, set()).add(letter)
        return {value: frozenset(letters) for value, letters in sorted(classes.items())}


def _check_size(n: int, sigma: Permutation) -> None:
    if sigma.n != n:
        raise InvalidInputError(
            f"Permutation of [{sigma.n}] used on a graph with {n} vertices"
        )


def word_ranks(adjacency: Sequence[frozenset[int]], word: Sequence[int]) -> list[int]:
    """Ranks along the word: 1 + max rank of an earlier G-neighbor, 0 if none."""
    ranks: list[int] = []
    rank_of = {}
    for letter in word:
        best = 0
        for neighbor in adjacency[letter]:
            seen = rank_of.get(neighbor)
            if seen is not None and seen > best:
                best = seen
        rank_of[letter] = best + 1
        ranks.append(best + 1)
    return ranks


def descent_positions(word: Sequence[int], ranks: Sequence[int]) -> list[int]:
    """Positions i (1-based) where the rank drops, or ties with σ_i > σ_{i+1}."""
    return [
        i
        for i in range(1, len(word))
        if ranks[i - 1] > ranks[i]
        or (ranks[i - 1] == ranks[i] and word[i - 1] > word[i])
    ]


def inversions(edges: Sequence[Edge], positions: Sequence[int]) -> int:
    """Edges (i, j) with j placed before i; ``positions[x]`` is where x sits."""
    return sum(1 for i, j in edges if positions[j] < positions[i])


def inv_digraph(d: Digraph, sigma: Permutation) -> int:
    """
    Count edges (i, j) of d with j appearing before i in σ.

    Raises:
        InvalidInputError: If σ is not a permutation of [d.n]
    """
    _check_size(d.n, sigma)
    return sum(1 for i, j in d.edges if sigma.position(j) < sigma.position(i))


def g_descent_set(g: Graph, sigma: Permutation) -> GDescentData:
    """
    Compute G-ranks and the G-descent set DES_G(σ).

    Args:
        g: Undirected graph on [n]
        sigma: Permutation of [n]

    Returns:
        GDescentData with per-letter ranks and the descent set

    Raises:
        InvalidInputError: If σ is not a permutation of [g.n]
    """
    _check_size(g.n, sigma)
    by_position = word_ranks(g.adjacency, sigma.word)
    ranks = [0] * g.n
    for letter, value in zip(sigma.word, by_position):
        ranks[letter - 1] = value
    return GDescentData(
        sigma=sigma,
        ranks=tuple(ranks),
        descents=tuple(descent_positions(sigma.word, by_position)),
    )
