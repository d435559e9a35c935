"""Digraph pools for the verification suites: exhaustive, sampled and families."""

from __future__ import annotations

from collections.abc import Iterator
from itertools import combinations, product
from math import ceil
from typing import Literal, Optional

import numpy as np

from directed_cqsf.combinatorics.families import (
    circular_digraph,
    directed_cycle,
    interval_digraph,
)
from directed_cqsf.combinatorics.graphs import Digraph, Graph, digraph_from_edges
from directed_cqsf.combinatorics.recognition import is_proper_circular_arc

FamilyName = Literal["interval", "circular"]

# Attempts per accepted sample before giving up on rejection sampling.
_MAX_REJECTIONS = 1000


def oriented_digraphs(n: int) -> Iterator[Digraph]:
    """Every oriented digraph on [n]: each pair absent, i → j or j → i."""
    pairs = list(combinations(range(1, n + 1), 2))
    for states in product((0, 1, 2), repeat=len(pairs)):
        edges = [
            (i, j) if state == 1 else (j, i)
            for (i, j), state in zip(pairs, states)
            if state
        ]
        yield digraph_from_edges(n, edges)


def undirected_graphs(n: int) -> Iterator[Graph]:
    """Every simple graph on [n]."""
    pairs = list(combinations(range(1, n + 1), 2))
    for mask in range(1 << len(pairs)):
        yield Graph.from_edges(n, [p for i, p in enumerate(pairs) if mask >> i & 1])


def _random_digraph(
    rng: np.random.Generator, n: int, allow_bidirected: bool
) -> Digraph:
    density = rng.uniform(0.2, 0.9)
    edges = []
    for i, j in combinations(range(1, n + 1), 2):
        if rng.random() >= density:
            continue
        roll = rng.integers(3 if allow_bidirected else 2)
        if roll == 0:
            edges.append((i, j))
        elif roll == 1:
            edges.append((j, i))
        else:
            edges.extend([(i, j), (j, i)])
    return digraph_from_edges(n, edges)


def bidirected_sample(count: int, max_n: int, seed: int = 0) -> list[Digraph]:
    """
    Random digraphs on 2..max_n vertices, each with at least one bidirected pair.
    """
    if max_n < 2:
        return []
    rng = np.random.default_rng(seed)
    sample: list[Digraph] = []
    while len(sample) < count:
        n = int(rng.integers(2, max_n + 1))
        d = _random_digraph(rng, n, allow_bidirected=True)
        if not d.is_oriented():
            sample.append(d)
    return sample


def proper_circular_arc_sample(count: int, max_n: int, seed: int = 0) -> list[Digraph]:
    """Random oriented digraphs on 1..max_n vertices with no induced K12 or K21 star."""
    if max_n < 1:
        return []
    rng = np.random.default_rng(seed + 1)
    sample: list[Digraph] = []
    rejected = 0
    while len(sample) < count and rejected < _MAX_REJECTIONS * max(count, 1):
        n = int(rng.integers(1, max_n + 1))
        d = _random_digraph(rng, n, allow_bidirected=False)
        if is_proper_circular_arc(d):
            sample.append(d)
        else:
            rejected += 1
    return sample


def family_pool(
    kind: FamilyName, max_n: int, min_n: int = 1
) -> Iterator[tuple[str, Digraph]]:
    """
    Members of G_{n,r} (r <= n) or G*_{n,r} (r <= ceil(n/2)), with labels.
    """
    for n in range(min_n, max_n + 1):
        if kind == "interval":
            for r in range(1, n + 1):
                yield f"G_{{{n},{r}}}", interval_digraph(n, r)
        else:
            for r in range(1, ceil(n / 2) + 1):
                yield f"G*_{{{n},{r}}}", circular_digraph(n, r)


def symmetric_test_pool(
    max_n: int, samples: int, seed: int = 0, exhaustive_n: Optional[int] = None
) -> Iterator[Digraph]:
    """
    Proper circular arc digraphs: the circular family, random star-free
    digraphs, and optionally every star-free oriented digraph up to
    ``exhaustive_n``.
    """
    for _, d in family_pool("circular", max_n):
        if is_proper_circular_arc(d):
            yield d
    yield from proper_circular_arc_sample(samples, max_n, seed)
    if exhaustive_n is not None:
        for n in range(1, exhaustive_n + 1):
            for d in oriented_digraphs(n):
                if is_proper_circular_arc(d):
                    yield d


def reversed_cycle(n: int) -> Digraph:
    """The directed n-cycle with its edge n → 1 turned around."""
    return directed_cycle(n).with_edge_reversed(n, 1)
