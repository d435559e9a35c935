"""Generating-function extraction for directed cycles."""

from directed_cqsf.series.cycle import (
    ESeries,
    cycle_e_coefficient,
    cycle_e_expansion_series,
)

__all__ = ["ESeries", "cycle_e_coefficient", "cycle_e_expansion_series"]
