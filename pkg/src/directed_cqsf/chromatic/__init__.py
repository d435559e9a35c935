"""The chromatic quasisymmetric function of a digraph, computed several ways."""

from directed_cqsf.chromatic.colorings import (
    ColoringClass,
    chromatic_qsym_direct,
    iter_coloring_classes,
    shareshian_wachs_qsym,
)
from directed_cqsf.chromatic.descents import GDescentData, g_descent_set, inv_digraph
from directed_cqsf.chromatic.fbasis import (
    chromatic_qsym_via_f,
    omega_chromatic_qsym_via_f,
)
from directed_cqsf.chromatic.pbasis import (
    cycle_p_coefficient,
    is_in_n_g_lambda,
    n_g_lambda,
    n_g_lambda_counts,
    p_expansion_via_n,
)
from directed_cqsf.chromatic.sinks import (
    ao_lambda_polynomial,
    orientation_gap_partition,
    sink_generating_polynomial,
)
from directed_cqsf.chromatic.sweep import run_sweep

__all__ = [
    "ColoringClass",
    "GDescentData",
    "ao_lambda_polynomial",
    "chromatic_qsym_direct",
    "chromatic_qsym_via_f",
    "cycle_p_coefficient",
    "g_descent_set",
    "inv_digraph",
    "is_in_n_g_lambda",
    "iter_coloring_classes",
    "n_g_lambda",
    "n_g_lambda_counts",
    "omega_chromatic_qsym_via_f",
    "orientation_gap_partition",
    "p_expansion_via_n",
    "run_sweep",
    "shareshian_wachs_qsym",
    "sink_generating_polynomial",
]
