"""Recognizers for proper circular arc and unit interval digraphs."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Literal, Optional

from directed_cqsf.combinatorics.graphs import Digraph

Obstruction = Literal["bidirected", "K12", "K21", "cycle"]


@dataclass(frozen=True)
class RecognitionResult:
    """
    Outcome of a recognizer.

    Truthiness follows ``accepted``. On rejection ``witness`` holds the
    offending vertices (a bidirected pair or a sorted vertex triple) and
    ``obstruction`` names what was found.
    """

    accepted: bool
    witness: Optional[tuple[int, ...]] = None
    obstruction: Optional[Obstruction] = None

    def __bool__(self) -> bool:
        return self.accepted


def find_star(d: Digraph) -> RecognitionResult:
    """Search for an induced out-star K12 or in-star K21 on three vertices."""
    adjacency = d.underlying.adjacency
    for center in range(1, d.n + 1):
        stars: tuple[tuple[Obstruction, frozenset[int]], ...] = (
            ("K12", d.out_neighbors[center]),
            ("K21", d.in_neighbors[center]),
        )
        for kind, leaves in stars:
            for v, w in combinations(sorted(leaves), 2):
                if w not in adjacency[v]:
                    return RecognitionResult(False, tuple(sorted((center, v, w))), kind)
    return RecognitionResult(True)


def is_proper_circular_arc(d: Digraph) -> RecognitionResult:
    """
    Decide whether d is a proper circular arc digraph.

    That is, d is oriented (no bidirected pair) and has no induced K12
    (u→v, u→w, v and w nonadjacent) or K21 (v→u, w→u, v and w nonadjacent).

    Args:
        d: Any digraph

    Returns:
        A RecognitionResult carrying a witness on rejection
    """
    bidirected = d.bidirected_pairs()
    if bidirected:
        return RecognitionResult(False, bidirected[0], "bidirected")
    return find_star(d)


def is_unit_interval_digraph(d: Digraph) -> RecognitionResult:
    """Acyclic proper circular arc digraphs."""
    result = is_proper_circular_arc(d)
    if not result:
        return result
    if not d.is_acyclic():
        return RecognitionResult(False, None, "cycle")
    return result
