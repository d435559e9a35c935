"""Quasisymmetric and symmetric functions with coefficients in Q[t]."""

from directed_cqsf.algebra.elements import GradedFunction, QSymT, SymT
from directed_cqsf.algebra.positivity import (
    PositivityReport,
    e_positivity_report,
    is_palindromic,
)
from directed_cqsf.algebra.qsym import (
    f_to_m,
    from_sym_m,
    is_symmetric,
    m_to_f,
    omega_f,
    symmetry_witness,
    to_sym_m,
)
from directed_cqsf.algebra.specialization import principal_specialization
from directed_cqsf.algebra.sym import (
    convert,
    e_to_m,
    m_to_e,
    m_to_p,
    omega_sym,
    p_to_m,
    to_m,
)

__all__ = [
    "GradedFunction",
    "PositivityReport",
    "QSymT",
    "SymT",
    "convert",
    "e_positivity_report",
    "e_to_m",
    "f_to_m",
    "from_sym_m",
    "is_palindromic",
    "is_symmetric",
    "m_to_e",
    "m_to_f",
    "m_to_p",
    "omega_f",
    "omega_sym",
    "p_to_m",
    "principal_specialization",
    "symmetry_witness",
    "to_m",
    "to_sym_m",
]
