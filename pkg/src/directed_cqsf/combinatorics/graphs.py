"""Undirected graphs and digraphs on the vertex set [n]."""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from functools import cached_property

import networkx as nx

from directed_cqsf.utils.errors import InvalidInputError

Edge = tuple[int, int]


def _check_vertex_count(n: int) -> int:
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise InvalidInputError(f"Vertex count must be a nonnegative integer: {n!r}")
    return n


def _check_pair(n: int, u: int, v: int) -> None:
    if u == v:
        raise InvalidInputError(f"Loop edge ({u}, {v}) is not allowed")
    for x in (u, v):
        if not 1 <= x <= n:
            raise InvalidInputError(f"Vertex {x} is outside [1, {n}]")


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph on [n]; each edge is stored as (u, v) with u < v."""

    n: int
    edges: frozenset[Edge]

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Iterable[int]]) -> Graph:
        """Build a graph, collapsing repeated or reversed copies of an edge."""
        n = _check_vertex_count(n)
        normalized = set()
        for pair in edges:
            u, v = (int(x) for x in pair)
            _check_pair(n, u, v)
            normalized.add((min(u, v), max(u, v)))
        return cls(n, frozenset(normalized))

    @cached_property
    def sorted_edges(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.edges))

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        """``adjacency[v]`` is the neighbor set of v; index 0 is unused."""
        neighbors: list[set[int]] = [set() for _ in range(self.n + 1)]
        for u, v in self.edges:
            neighbors[u].add(v)
            neighbors[v].add(u)
        return tuple(frozenset(s) for s in neighbors)

    def adjacent(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(1, self.n + 1))
        graph.add_edges_from(self.sorted_edges)
        return graph

    def is_connected(self) -> bool:
        return self.n <= 1 or nx.is_connected(self.to_networkx())


@dataclass(frozen=True)
class Digraph:
    """
    A simple directed graph on [n].

    Both (u, v) and (v, u) may be present (a bidirected pair); loops may not.
    """

    n: int
    edges: frozenset[Edge]

    @cached_property
    def sorted_edges(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.edges))

    @cached_property
    def underlying(self) -> Graph:
        """The underlying undirected graph."""
        return Graph.from_edges(self.n, self.edges)

    @cached_property
    def out_neighbors(self) -> tuple[frozenset[int], ...]:
        heads: list[set[int]] = [set() for _ in range(self.n + 1)]
        for u, v in self.edges:
            heads[u].add(v)
        return tuple(frozenset(s) for s in heads)

    @cached_property
    def in_neighbors(self) -> tuple[frozenset[int], ...]:
        tails: list[set[int]] = [set() for _ in range(self.n + 1)]
        for u, v in self.edges:
            tails[v].add(u)
        return tuple(frozenset(s) for s in tails)

    def bidirected_pairs(self) -> list[Edge]:
        """Pairs (u, v), u < v, carrying both directions."""
        return sorted((u, v) for u, v in self.edges if u < v and (v, u) in self.edges)

    def is_oriented(self) -> bool:
        """True when no pair is bidirected."""
        return not self.bidirected_pairs()

    def to_networkx(self) -> nx.DiGraph:
        graph = nx.DiGraph()
        graph.add_nodes_from(range(1, self.n + 1))
        graph.add_edges_from(self.sorted_edges)
        return graph

    def is_acyclic(self) -> bool:
        """True when the digraph has no directed cycle (a bidirected pair is one)."""
        return nx.is_directed_acyclic_graph(self.to_networkx())

    def with_edge_reversed(self, u: int, v: int) -> Digraph:
        """Return a copy with edge (u, v) replaced by (v, u)."""
        if (u, v) not in self.edges:
            raise InvalidInputError(f"({u}, {v}) is not an edge")
        if (v, u) in self.edges:
            raise InvalidInputError(f"({u}, {v}) is part of a bidirected pair")
        return Digraph(self.n, (self.edges - {(u, v)}) | {(v, u)})

    def __str__(self) -> str:
        arcs = ", ".join(f"{u}→{v}" for u, v in self.sorted_edges)
        return f"Digraph(n={self.n}, {{{arcs}}})"


def digraph_from_edges(n: int, edges: Iterable[Iterable[int]]) -> Digraph:
    """
    Build a validated digraph on [n].

    Args:
        n: Vertex count; vertices are 1..n
        edges: Ordered pairs (u, v), meaning an edge directed u → v

    Returns:
        The digraph

    Raises:
        InvalidInputError: On a loop, an out-of-range vertex, or a
            repeated directed edge
    """
    n = _check_vertex_count(n)
    seen: set[Edge] = set()
    for pair in edges:
        items = tuple(pair)
        if len(items) != 2:
            raise InvalidInputError(f"Edge must be a pair, got {items!r}")
        u, v = int(items[0]), int(items[1])
        _check_pair(n, u, v)
        if (u, v) in seen:
            raise InvalidInputError(f"Duplicate edge ({u}, {v})")
        seen.add((u, v))
    return Digraph(n, frozenset(seen))


def orient_by_labels(graph: Graph) -> Digraph:
    """Orient every edge from its smaller label to its larger label."""
    return Digraph(graph.n, frozenset(graph.edges))
