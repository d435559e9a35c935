"""Graphs, digraphs, permutations, partitions and small polynomial gadgets."""

from directed_cqsf.combinatorics.families import family_generator
from directed_cqsf.combinatorics.graphs import Digraph, Graph, digraph_from_edges
from directed_cqsf.combinatorics.orientations import (
    OrientationRecord,
    acyclic_orientations,
    chromatic_polynomial,
)
from directed_cqsf.combinatorics.partitions import (
    Composition,
    Partition,
    compositions,
    partitions,
    z_lambda,
)
from directed_cqsf.combinatorics.permutations import Permutation
from directed_cqsf.combinatorics.poly import TPoly, eulerian_polynomial, t_bracket
from directed_cqsf.combinatorics.recognition import (
    RecognitionResult,
    is_proper_circular_arc,
    is_unit_interval_digraph,
)

__all__ = [
    "Composition",
    "Digraph",
    "Graph",
    "OrientationRecord",
    "Partition",
    "Permutation",
    "RecognitionResult",
    "TPoly",
    "acyclic_orientations",
    "chromatic_polynomial",
    "compositions",
    "digraph_from_edges",
    "eulerian_polynomial",
    "family_generator",
    "is_proper_circular_arc",
    "is_unit_interval_digraph",
    "partitions",
    "t_bracket",
    "z_lambda",
]
