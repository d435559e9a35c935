"""Digraph pools and the theorem checks run by ``verify``."""

from directed_cqsf.verification.pools import (
    bidirected_sample,
    family_pool,
    oriented_digraphs,
    proper_circular_arc_sample,
    undirected_graphs,
)
from directed_cqsf.verification.suites import SUITES, run_suite

__all__ = [
    "SUITES",
    "bidirected_sample",
    "family_pool",
    "oriented_digraphs",
    "proper_circular_arc_sample",
    "run_suite",
    "undirected_graphs",
]
