"""Generators for the interval and circular digraph families."""

from __future__ import annotations

from math import ceil
from typing import Literal, Optional

from directed_cqsf.combinatorics.graphs import Digraph, digraph_from_edges
from directed_cqsf.utils.errors import InvalidInputError

FamilyKind = Literal["interval", "circular", "path", "cycle"]


def interval_digraph(n: int, r: int) -> Digraph:
    """G_{n,r}: i → j whenever i < j and j - i < r."""
    if not 1 <= r <= n:
        raise InvalidInputError(f"Interval family needs 1 <= r <= n, got n={n}, r={r}")
    edges = [
        (i, j) for i in range(1, n + 1) for j in range(i + 1, min(n, i + r - 1) + 1)
    ]
    return digraph_from_edges(n, edges)


def circular_digraph(n: int, r: int) -> Digraph:
    """G*_{n,r}: i → j whenever 0 < (j - i) mod n < r."""
    if n < 1 or not 1 <= r <= ceil(n / 2):
        raise InvalidInputError(
            f"Circular family needs 1 <= r <= ceil(n/2), got n={n}, r={r}"
        )
    return _circular_edges(n, r)


def _circular_edges(n: int, r: int) -> Digraph:
    edges = [
        (i, j)
        for i in range(1, n + 1)
        for j in range(1, n + 1)
        if 0 < (j - i) % n < r
    ]
    return digraph_from_edges(n, edges)


def directed_path(n: int) -> Digraph:
    """The one-way path 1 → 2 → ... → n."""
    if n < 1:
        raise InvalidInputError(f"Path needs n >= 1, got {n}")
    return interval_digraph(n, min(2, n))


def directed_cycle(n: int) -> Digraph:
    """
    The cycle 1 → 2 → ... → n → 1.

    For n = 2 the defining rule yields the bidirected pair 1 ⇄ 2.
    """
    if n < 2:
        raise InvalidInputError(f"Directed cycle needs n >= 2, got {n}")
    return _circular_edges(n, 2)


def family_generator(kind: FamilyKind, n: int, r: Optional[int] = None) -> Digraph:
    """
    Build a member of one of the standard families.

    Args:
        kind: "interval" (G_{n,r}), "circular" (G*_{n,r}), "path" or "cycle"
        n: Number of vertices
        r: Band width; required for interval and circular

    Returns:
        The digraph

    Raises:
        InvalidInputError: If r is missing or out of range
    """
    if kind == "path":
        return directed_path(n)
    if kind == "cycle":
        return directed_cycle(n)
    if r is None:
        raise InvalidInputError(f"Family {kind!r} needs a band width r")
    if kind == "interval":
        return interval_digraph(n, r)
    if kind == "circular":
        return circular_digraph(n, r)
    raise InvalidInputError(f"Unknown family {kind!r}")
