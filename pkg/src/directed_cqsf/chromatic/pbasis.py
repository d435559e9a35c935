"""The power-sum expansion of ωX through the permutation sets N_{G,λ}."""

from __future__ import annotations

from collections.abc import Sequence
from functools import partial
from typing import Optional

import numpy as np

from directed_cqsf.algebra.elements import SymT
from directed_cqsf.algebra.qsym import symmetry_witness
from directed_cqsf.chromatic.colorings import chromatic_qsym_direct
from directed_cqsf.chromatic.descents import descent_positions, inversions, word_ranks
from directed_cqsf.chromatic.sweep import check_factorial_budget, run_sweep
from directed_cqsf.combinatorics.graphs import Digraph, Graph
from directed_cqsf.combinatorics.partitions import Partition, partitions, z_lambda
from directed_cqsf.combinatorics.permutations import Permutation, all_permutations
from directed_cqsf.combinatorics.poly import TPoly, eulerian_polynomial, t_bracket
from directed_cqsf.config.schema import EngineSettings
from directed_cqsf.utils.errors import InvalidInputError, NotSymmetricError


def _latest_neighbor(
    adjacency: Sequence[frozenset[int]], word: Sequence[int]
) -> list[int]:
    """For each position j, the last earlier position holding a G-neighbor, or -1."""
    latest = []
    for j, letter in enumerate(word):
        found = -1
        for i in range(j - 1, -1, -1):
            if word[i] in adjacency[letter]:
                found = i
                break
        latest.append(found)
    return latest


def _in_n_g_lambda(
    latest: Sequence[int], descents: set[int], sizes: Sequence[int]
) -> bool:
    """
    Membership test on precomputed data.

    Inside a block starting at position s, every later position j needs a
    G-neighbor at some position >= s, and the gap between j-1 and j (the
    1-based descent index j) must not be a G-descent.
    """
    start = 0
    for size in sizes:
        for j in range(start + 1, start + size):
            if latest[j] < start or j in descents:
                return False
        start += size
    return True


def is_in_n_g_lambda(g: Graph, sigma: Permutation, lam: Partition) -> bool:
    """
    Decide whether σ ∈ N_{G,λ}.

    Raises:
        InvalidInputError: On a size or weight mismatch
    """
    lam = Partition(lam)
    if sigma.n != g.n or lam.weight != g.n:
        raise InvalidInputError(
            f"σ on [{sigma.n}] and λ of weight {lam.weight} "
            f"do not fit a graph on [{g.n}]"
        )
    word = sigma.word
    descents = set(descent_positions(word, word_ranks(g.adjacency, word)))
    return _in_n_g_lambda(_latest_neighbor(g.adjacency, word), descents, lam)


def _check_pair(g: Graph, d: Digraph) -> None:
    if d.underlying != g:
        raise InvalidInputError("The digraph's underlying graph must be g")


def n_g_lambda(g: Graph, d: Digraph, lam: Partition) -> list[tuple[Permutation, int]]:
    """
    List N_{G,λ} with each member's inv_G statistic.

    σ belongs to N_{G,λ} when, cut into consecutive blocks of sizes
    λ_1, λ_2, ..., no block has a G-isolated letter and no G-descent
    falls strictly inside a block.

    Args:
        g: Undirected graph on [n]
        d: Digraph whose underlying graph is g
        lam: Partition of n

    Returns:
        Pairs (σ, inv_d(σ)) in lexicographic order of σ

    Raises:
        InvalidInputError: On a weight mismatch or if g is not d's
            underlying graph
    """
    lam = Partition(lam)
    if lam.weight != g.n:
        raise InvalidInputError(f"Partition {lam} does not have weight {g.n}")
    _check_pair(g, d)
    edges = d.sorted_edges
    members = []
    for word in all_permutations(g.n):
        descents = set(descent_positions(word, word_ranks(g.adjacency, word)))
        if _in_n_g_lambda(_latest_neighbor(g.adjacency, word), descents, lam):
            sigma = Permutation(word)
            positions = (0,) + tuple(sigma.position(x) for x in range(1, g.n + 1))
            members.append((sigma, inversions(edges, positions)))
    return members


def _first_letter_counts(
    d: Digraph, shapes: tuple[Partition, ...], first: int
) -> np.ndarray:
    """counts[row, k] = |{σ ∈ N_{G, shapes[row]} starting with first : inv = k}|."""
    n = d.n
    adjacency = d.underlying.adjacency
    edges = d.sorted_edges
    counts = np.zeros((len(shapes), len(edges) + 1), dtype=np.int64)
    positions = [0] * (n + 1)
    for word in all_permutations(n, (first,)):
        for index, letter in enumerate(word):
            positions[letter] = index
        latest = _latest_neighbor(adjacency, word)
        descents = set(descent_positions(word, word_ranks(adjacency, word)))
        inv = inversions(edges, positions)
        for row, lam in enumerate(shapes):
            if _in_n_g_lambda(latest, descents, lam):
                counts[row, inv] += 1
    return counts


def n_g_lambda_counts(
    d: Digraph, settings: Optional[EngineSettings] = None
) -> dict[Partition, TPoly]:
    """
    Σ_{σ ∈ N_{G,λ}} t^{inv(σ)} for every λ ⊢ n from a single S_n sweep.

    Raises:
        BudgetExceededError: If n exceeds ``settings.budget_factorial``
    """
    settings = settings or EngineSettings()
    check_factorial_budget(d.n, settings)
    shapes = partitions(d.n)
    if d.n == 0:
        return {Partition(): TPoly.one()}
    sweep = run_sweep(
        partial(_first_letter_counts, d, shapes),
        list(range(1, d.n + 1)),
        settings,
        desc=f"N_(G,λ) n={d.n}",
    )
    total = np.sum(sweep, axis=0)
    return {lam: TPoly.from_counts(row.tolist()) for lam, row in zip(shapes, total)}


def p_expansion_via_n(d: Digraph, settings: Optional[EngineSettings] = None) -> SymT:
    """
    Compute ωX_d = Σ_λ z_λ^{-1} p_λ Σ_{σ ∈ N_{G,λ}} t^{inv(σ)}.

    Only valid when X_d is symmetric, which is checked first against the
    coloring oracle.

    Raises:
        NotSymmetricError: If X_d is not symmetric
        BudgetExceededError: If n exceeds ``settings.budget_factorial``
    """
    settings = settings or EngineSettings()
    check_factorial_budget(d.n, settings)
    witness = symmetry_witness(chromatic_qsym_direct(d, settings))
    if witness is not None:
        alpha, beta = witness
        raise NotSymmetricError(
            f"X is not symmetric: M{list(alpha)} and M{list(beta)} differ",
            witness=witness,
        )
    if d.n == 0:
        return SymT(0, "p", {(): 1})
    counts = n_g_lambda_counts(d, settings)
    return SymT(d.n, "p", {lam: poly / z_lambda(lam) for lam, poly in counts.items()})


def cycle_p_coefficient(n: int, lam: Partition) -> TPoly:
    """
    Closed form of Σ_{σ ∈ N_{C_n,λ}} t^{inv(σ)} for the directed cycle.

    λ = (n) gives n·t·[n-1]_t; a partition with k >= 2 parts gives
    n·t·A_{k-1}(t)·Π [λ_i]_t with A the Eulerian polynomial.

    Raises:
        InvalidInputError: If n < 2 or λ is not a partition of n
    """
    lam = Partition(lam)
    if n < 2:
        raise InvalidInputError(f"Directed cycles need n >= 2, got {n}")
    if lam.weight != n:
        raise InvalidInputError(f"Partition {lam} does not have weight {n}")
    lead = TPoly.monomial(1, n)
    if len(lam) == 1:
        return lead * t_bracket(n - 1)
    result = lead * eulerian_polynomial(len(lam) - 1)
    for part in lam:
        result = result * t_bracket(part)
    return result
