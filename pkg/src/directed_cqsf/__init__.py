"""directed-cqsf - Exact chromatic quasisymmetric functions of directed graphs."""

__version__ = "0.1.0"

from directed_cqsf.algebra import QSymT, SymT
from directed_cqsf.chromatic import (
    chromatic_qsym_direct,
    chromatic_qsym_via_f,
    p_expansion_via_n,
)
from directed_cqsf.combinatorics import Digraph, digraph_from_edges, family_generator
from directed_cqsf.config import EngineSettings, load_settings
from directed_cqsf.series import cycle_e_expansion_series
from directed_cqsf.utils.serialization import load_digraph

__all__ = [
    "Digraph",
    "EngineSettings",
    "QSymT",
    "SymT",
    "chromatic_qsym_direct",
    "chromatic_qsym_via_f",
    "cycle_e_expansion_series",
    "digraph_from_edges",
    "family_generator",
    "load_digraph",
    "load_settings",
    "p_expansion_via_n",
]
