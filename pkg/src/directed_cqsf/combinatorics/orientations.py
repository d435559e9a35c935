"""Acyclic orientations and the chromatic polynomial."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import networkx as nx

from directed_cqsf.combinatorics.graphs import Digraph, Edge, Graph
from directed_cqsf.combinatorics.poly import TPoly
from directed_cqsf.config.schema import EngineSettings
from directed_cqsf.utils.errors import BudgetExceededError, InvalidInputError


@dataclass(frozen=True)
class OrientationRecord:
    """
    One acyclic orientation of ``base``.

    Attributes:
        base: The undirected graph being oriented
        arcs: Chosen direction for each edge, in ``base.sorted_edges`` order
        sinks: Vertices with no outgoing arc
        asc: Number of arcs that also occur in the reference digraph
    """

    base: Graph
    arcs: tuple[Edge, ...]
    sinks: frozenset[int]
    asc: int

    @property
    def digraph(self) -> Digraph:
        return Digraph(self.base.n, frozenset(self.arcs))

    @property
    def sink_count(self) -> int:
        return len(self.sinks)

    def is_consistent(self) -> bool:
        """Re-check acyclicity by topological sort and recompute the sinks."""
        graph = self.digraph.to_networkx()
        try:
            order = list(nx.topological_sort(graph))
        except nx.NetworkXUnfeasible:
            return False
        recomputed = {v for v in graph.nodes if graph.out_degree(v) == 0}
        return len(order) == self.base.n and recomputed == set(self.sinks)


def _check_reference(g: Graph, reference: Digraph) -> None:
    if reference.underlying != g:
        raise InvalidInputError(
            "Reference digraph does not have the given graph as its underlying graph"
        )


def acyclic_orientations(
    g: Graph,
    reference: Digraph,
    settings: Optional[EngineSettings] = None,
) -> list[OrientationRecord]:
    """
    Enumerate the acyclic orientations of g.

    Orientations are indexed by a bitmask over ``g.sorted_edges``: bit i
    clear orients edge (u, v), u < v, as u → v; set orients it v → u.
    Records come out in increasing mask order.

    Args:
        g: Undirected graph
        reference: Digraph whose underlying graph is g; an arc ascends
            when the reference contains it
        settings: Engine settings (caps the number of edges)

    Returns:
        One OrientationRecord per acyclic orientation

    Raises:
        InvalidInputError: If g is not the underlying graph of reference
        BudgetExceededError: If g has more edges than the sweep allows
    """
    settings = settings or EngineSettings()
    _check_reference(g, reference)
    edges = g.sorted_edges
    if len(edges) > settings.max_orientation_edges:
        raise BudgetExceededError(
            f"{len(edges)} edges exceed the orientation budget "
            f"of {settings.max_orientation_edges}",
            requested=len(edges),
            budget=settings.max_orientation_edges,
        )

    n = g.n
    everyone = sum(1 << v for v in range(1, n + 1))
    records: list[OrientationRecord] = []
    for mask in range(1 << len(edges)):
        arcs = tuple(
            (v, u) if mask >> i & 1 else (u, v) for i, (u, v) in enumerate(edges)
        )
        heads = [0] * (n + 1)
        for tail, head in arcs:
            heads[tail] |= 1 << head
        if not _is_acyclic(heads, everyone, n):
            continue
        sinks = frozenset(v for v in range(1, n + 1) if heads[v] == 0)
        asc = sum(1 for arc in arcs if arc in reference.edges)
        records.append(OrientationRecord(g, arcs, sinks, asc))
    return records


def _is_acyclic(heads: list[int], everyone: int, n: int) -> bool:
    """Peel off vertices with no arc into the remaining set until none are left."""
    remaining = everyone
    while remaining:
        peeled = 0
        for v in range(1, n + 1):
            bit = 1 << v
            if remaining & bit and not heads[v] & remaining:
                peeled |= bit
        if not peeled:
            return False
        remaining &= ~peeled
    return True


def chromatic_polynomial(g: Graph) -> TPoly:
    """
    Return χ_g(k) by deletion–contraction, as a polynomial in k.

    The variable of the returned TPoly stands for the number of colors.
    """
    return _deletion_contraction(g.to_networkx())


def _deletion_contraction(graph: nx.Graph) -> TPoly:
    if graph.number_of_edges() == 0:
        return TPoly.monomial(graph.number_of_nodes())
    u, v = min(graph.edges)
    deleted = graph.copy()
    deleted.remove_edge(u, v)
    contracted = nx.contracted_nodes(graph, u, v, self_loops=False)
    return _deletion_contraction(deleted) - _deletion_contraction(contracted)
