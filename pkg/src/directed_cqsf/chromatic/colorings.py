"""The coloring oracle: X as a sum over surjective proper colorings."""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass
from functools import partial
from typing import Optional

import numpy as np

from directed_cqsf.algebra.elements import QSymT
from directed_cqsf.chromatic.sweep import check_factorial_budget, run_sweep
from directed_cqsf.combinatorics.graphs import Digraph, Graph, orient_by_labels
from directed_cqsf.combinatorics.partitions import Composition, compositions
from directed_cqsf.combinatorics.poly import TPoly
from directed_cqsf.config.schema import EngineSettings
from directed_cqsf.utils.errors import InvalidInputError


@dataclass(frozen=True)
class ColoringClass:
    """
    A proper coloring using colors 1..l, color i exactly ``content[i-1]`` times.

    ``assignment[v - 1]`` is the color of vertex v.
    """

    content: Composition
    assignment: tuple[int, ...]

    def color(self, v: int) -> int:
        return self.assignment[v - 1]

    def asc(self, d: Digraph) -> int:
        """Edges (u, v) of d with κ(u) < κ(v)."""
        return sum(1 for u, v in d.edges if self.color(u) < self.color(v))

    def is_proper(self, g: Graph) -> bool:
        return all(self.color(u) != self.color(v) for u, v in g.edges)


def _ascent_tables(
    d: Digraph,
) -> tuple[list[list[int]], list[list[int]], list[list[int]]]:
    """
    Per vertex v, the earlier vertices u < v that matter once v is colored.

    Returns (earlier neighbors, u with u → v, u with v → u).
    """
    g = d.underlying
    earlier = [sorted(u for u in g.adjacency[v] if u < v) for v in range(d.n + 1)]
    into = [sorted(u for u in d.in_neighbors[v] if u < v) for v in range(d.n + 1)]
    out_of = [sorted(u for u in d.out_neighbors[v] if u < v) for v in range(d.n + 1)]
    return earlier, into, out_of


def _walk(d: Digraph, content: Composition) -> Iterator[tuple[tuple[int, ...], int]]:
    """Backtrack over vertices 1..n, yielding (colors, asc) for each coloring."""
    n = d.n
    earlier, into, out_of = _ascent_tables(d)
    remaining = [0] + list(content)
    colors = [0] * (n + 1)

    def _assign(v: int, asc: int) -> Iterator[tuple[tuple[int, ...], int]]:
        if v > n:
            yield tuple(colors[1:]), asc
            return
        blocked = {colors[u] for u in earlier[v]}
        for c in range(1, len(content) + 1):
            if not remaining[c] or c in blocked:
                continue
            gained = sum(1 for u in into[v] if colors[u] < c) + sum(
                1 for u in out_of[v] if c < colors[u]
            )
            remaining[c] -= 1
            colors[v] = c
            yield from _assign(v + 1, asc + gained)
            remaining[c] += 1
        colors[v] = 0

    yield from _assign(1, 0)


def iter_coloring_classes(d: Digraph, content: Composition) -> Iterator[ColoringClass]:
    """
    Yield every proper coloring of d's underlying graph with the given content.

    Args:
        d: Digraph; only its underlying graph constrains the coloring
        content: Composition of d.n

    Yields:
        ColoringClass instances in lexicographic order of their assignment
    """
    content = Composition(content)
    if content.weight != d.n:
        raise InvalidInputError(f"Content {content} does not have weight {d.n}")
    for colors, _ in _walk(d, content):
        yield ColoringClass(content, colors)


def _content_counts(d: Digraph, content: Composition) -> np.ndarray:
    counts = np.zeros(len(d.edges) + 1, dtype=np.int64)
    for _, asc in _walk(d, content):
        counts[asc] += 1
    return counts


def chromatic_qsym_direct(
    d: Digraph, settings: Optional[EngineSettings] = None
) -> QSymT:
    """
    Compute X_d in the M basis straight from its definition.

    The coefficient of M_α sums t^asc(κ) over proper colorings κ with
    content α, asc counting edges (u, v) with κ(u) < κ(v). A bidirected
    pair contributes exactly one ascent. For n = 0 the result is the
    scalar 1, stored as the coefficient of M_().

    Args:
        d: Digraph
        settings: Engine settings (worker count, progress bars)

    Returns:
        X_d in the M basis

    Raises:
        BudgetExceededError: If n exceeds ``settings.budget_factorial``
    """
    settings = settings or EngineSettings()
    check_factorial_budget(d.n, settings)
    contents = list(compositions(d.n))
    sweep = run_sweep(
        partial(_content_counts, d),
        contents,
        settings,
        desc=f"Colorings n={d.n}",
    )
    return QSymT(
        d.n,
        "M",
        {
            alpha: TPoly.from_counts(counts.tolist())
            for alpha, counts in zip(contents, sweep)
        },
    )


def shareshian_wachs_qsym(g: Graph) -> QSymT:
    """
    The labeled-graph chromatic quasisymmetric function of g.

    Ascents are read off the labels: pairs i < j adjacent in g with
    κ(i) < κ(j). Equals chromatic_qsym_direct of the small-to-large
    orientation of g.
    """
    d = orient_by_labels(g)
    terms: dict[Composition, TPoly] = {}
    for alpha in compositions(g.n):
        counts = [0] * (len(g.edges) + 1)
        for coloring in iter_coloring_classes(d, alpha):
            asc = sum(1 for i, j in g.edges if coloring.color(i) < coloring.color(j))
            counts[asc] += 1
        terms[alpha] = TPoly.from_counts(counts)
    return QSymT(g.n, "M", terms)
