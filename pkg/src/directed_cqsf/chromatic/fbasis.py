"""X through its fundamental-basis expansion, one S_n sweep."""

from __future__ import annotations

from functools import partial
from typing import Optional

import numpy as np

from directed_cqsf.algebra.elements import QSymT
from directed_cqsf.algebra.qsym import f_to_m, omega_f
from directed_cqsf.chromatic.descents import descent_positions, inversions, word_ranks
from directed_cqsf.chromatic.sweep import check_factorial_budget, run_sweep
from directed_cqsf.combinatorics.graphs import Digraph
from directed_cqsf.combinatorics.partitions import DescentSet
from directed_cqsf.combinatorics.permutations import all_permutations
from directed_cqsf.combinatorics.poly import TPoly
from directed_cqsf.config.schema import EngineSettings


def _first_letter_counts(d: Digraph, first: int) -> np.ndarray:
    """
    counts[mask, k] = number of σ starting with ``first`` whose G-descent
    set has bitmask ``mask`` (bit i-1 for position i) and inv_G(σ) = k.
    """
    n = d.n
    adjacency = d.underlying.adjacency
    edges = d.sorted_edges
    counts = np.zeros((1 << max(n - 1, 0), len(edges) + 1), dtype=np.int64)
    positions = [0] * (n + 1)
    for word in all_permutations(n, (first,)):
        for index, letter in enumerate(word):
            positions[letter] = index
        mask = 0
        for i in descent_positions(word, word_ranks(adjacency, word)):
            mask |= 1 << (i - 1)
        counts[mask, inversions(edges, positions)] += 1
    return counts


def _mask_to_set(mask: int, n: int) -> DescentSet:
    return tuple(i for i in range(1, n) if mask >> (i - 1) & 1)


def omega_chromatic_qsym_via_f(
    d: Digraph, settings: Optional[EngineSettings] = None
) -> QSymT:
    """
    Compute ωX_d = Σ_σ F_{n, DES_G(σ)} t^{inv_G(σ)} over σ ∈ S_n.

    G is the underlying graph of d.

    Raises:
        BudgetExceededError: If n exceeds ``settings.budget_factorial``
    """
    settings = settings or EngineSettings()
    check_factorial_budget(d.n, settings)
    if d.n == 0:
        return QSymT(0, "F", {(): 1})

    sweep = run_sweep(
        partial(_first_letter_counts, d),
        list(range(1, d.n + 1)),
        settings,
        desc=f"S_{d.n} sweep",
    )
    total = np.sum(sweep, axis=0)
    terms = {
        _mask_to_set(mask, d.n): TPoly.from_counts(row.tolist())
        for mask, row in enumerate(total)
        if row.any()
    }
    return QSymT(d.n, "F", terms)


def chromatic_qsym_via_f(
    d: Digraph, settings: Optional[EngineSettings] = None
) -> QSymT:
    """
    Compute X_d in the M basis from the F-basis expansion of ωX_d.

    Args:
        d: Digraph
        settings: Engine settings (permutation budget, worker count)

    Returns:
        X_d in the M basis; equals chromatic_qsym_direct(d)

    Raises:
        BudgetExceededError: If n exceeds ``settings.budget_factorial``
    """
    return f_to_m(omega_f(omega_chromatic_qsym_via_f(d, settings)))
