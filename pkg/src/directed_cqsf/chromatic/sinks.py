"""Ascent polynomials of acyclic orientations, by sink count and by sink gaps."""

from __future__ import annotations

from typing import Literal, Optional

from directed_cqsf.combinatorics.graphs import Digraph
from directed_cqsf.combinatorics.orientations import (
    OrientationRecord,
    acyclic_orientations,
)
from directed_cqsf.combinatorics.partitions import Partition
from directed_cqsf.combinatorics.poly import TPoly
from directed_cqsf.config.schema import EngineSettings
from directed_cqsf.utils.errors import InvalidInputError

Shape = Literal["cycle", "path"]


def sink_generating_polynomial(
    d: Digraph, k: int, settings: Optional[EngineSettings] = None
) -> TPoly:
    """
    Σ t^asc over acyclic orientations of d's underlying graph with k sinks.

    An arc ascends when d contains it. Returns zero when no orientation
    has k sinks.

    Raises:
        BudgetExceededError: If the graph has too many edges to sweep
    """
    total = TPoly.zero()
    for record in acyclic_orientations(d.underlying, d, settings):
        if record.sink_count == k:
            total = total + TPoly.monomial(record.asc)
    return total


def _walk(d: Digraph, start: int) -> list[int]:
    order = [start]
    seen = {start}
    while True:
        step = [v for v in d.out_neighbors[order[-1]] if v not in seen]
        if not step:
            return order
        order.append(step[0])
        seen.add(step[0])


def cycle_or_path_order(d: Digraph) -> tuple[Shape, list[int]]:
    """
    Recognize a directed cycle or a one-way directed path by its structure.

    Returns the shape and the vertices in walking order: from vertex 1
    around a cycle, from the source along a path.

    Raises:
        InvalidInputError: If d is neither
    """
    n = d.n
    outs = [len(d.out_neighbors[v]) for v in range(1, n + 1)]
    ins = [len(d.in_neighbors[v]) for v in range(1, n + 1)]

    if n >= 2 and len(d.edges) == n and all(x == 1 for x in outs + ins):
        order = _walk(d, 1)
        if len(order) == n:
            return "cycle", order

    if n >= 1 and len(d.edges) == n - 1 and d.is_oriented():
        sources = [v for v in range(1, n + 1) if ins[v - 1] == 0]
        if len(sources) == 1 and max(outs + ins) <= 1:
            order = _walk(d, sources[0])
            if len(order) == n:
                return "path", order

    raise InvalidInputError(
        f"{d} is neither a directed cycle nor a one-way directed path"
    )


def orientation_gap_partition(d: Digraph, record: OrientationRecord) -> Partition:
    """
    The λ with record ∈ AO_λ: parts are one more than the sink gaps.

    On a cycle the gaps are the vertex counts strictly between cyclically
    consecutive sinks. On a path the two end segments (before the first
    sink and after the last) form a single gap, which may be empty.

    Raises:
        InvalidInputError: If d is neither a directed cycle nor a path
    """
    shape, order = cycle_or_path_order(d)
    spots = [i for i, v in enumerate(order) if v in record.sinks]
    n = d.n
    if shape == "cycle":
        gaps = [
            (spots[(i + 1) % len(spots)] - spots[i] - 1) % n for i in range(len(spots))
        ]
    else:
        gaps = [b - a - 1 for a, b in zip(spots, spots[1:])]
        gaps.append(spots[0] + (n - 1 - spots[-1]))
    return Partition(gap + 1 for gap in gaps)


def ao_lambda_polynomial(
    d: Digraph, lam: Partition, settings: Optional[EngineSettings] = None
) -> TPoly:
    """
    Σ t^asc over acyclic orientations of a directed cycle or path in AO_λ.

    Args:
        d: Directed cycle or one-way directed path
        lam: Partition of d.n
        settings: Engine settings (orientation budget)

    Returns:
        The ascent polynomial; equals the e_λ coefficient of X_d

    Raises:
        InvalidInputError: On a weight mismatch or an unsupported digraph
    """
    lam = Partition(lam)
    if lam.weight != d.n:
        raise InvalidInputError(f"Partition {lam} does not have weight {d.n}")
    cycle_or_path_order(d)
    total = TPoly.zero()
    for record in acyclic_orientations(d.underlying, d, settings):
        if orientation_gap_partition(d, record) == lam:
            total = total + TPoly.monomial(record.asc)
    return total
