"""Quasisymmetric basis changes, the involution ω, and symmetry testing."""

from __future__ import annotations

from itertools import combinations
from typing import Optional

from directed_cqsf.algebra.elements import QSymT, SymT
from directed_cqsf.combinatorics.partitions import (
    Composition,
    DescentSet,
    composition_to_descent_set,
    descent_set_to_composition,
    rearrangements,
)
from directed_cqsf.combinatorics.poly import TPoly
from directed_cqsf.utils.errors import InvalidInputError, NotSymmetricError


def _require_basis(element, basis: str, operation: str) -> None:
    if element.basis != basis:
        raise InvalidInputError(
            f"{operation} expects basis {basis!r}, got {element.basis!r}"
        )


def _supersets(n: int, descents: DescentSet) -> list[DescentSet]:
    free = [i for i in range(1, n) if i not in descents]
    return [
        tuple(sorted(descents + extra))
        for size in range(len(free) + 1)
        for extra in combinations(free, size)
    ]


def f_to_m(q: QSymT) -> QSymT:
    """
    Expand an F-basis element in the monomial basis.

    Uses F_{n,S} = Σ_{T ⊇ S} M_{comp(T)}.
    """
    _require_basis(q, "F", "f_to_m")
    terms: dict[Composition, TPoly] = {}
    for descents, coefficient in q.terms.items():
        for superset in _supersets(q.n, descents):
            alpha = descent_set_to_composition(q.n, superset)
            terms[alpha] = terms.get(alpha, TPoly.zero()) + coefficient
    return QSymT(q.n, "M", terms)


def m_to_f(q: QSymT) -> QSymT:
    """Inverse of f_to_m: M_{comp(S)} = Σ_{T ⊇ S} (-1)^{|T∖S|} F_{n,T}."""
    _require_basis(q, "M", "m_to_f")
    terms: dict[DescentSet, TPoly] = {}
    for alpha, coefficient in q.terms.items():
        descents = composition_to_descent_set(alpha)
        for superset in _supersets(q.n, descents):
            sign = -1 if (len(superset) - len(descents)) % 2 else 1
            terms[superset] = terms.get(superset, TPoly.zero()) + coefficient * sign
    return QSymT(q.n, "F", terms)


def omega_descent_set(n: int, descents: DescentSet) -> DescentSet:
    """Complement S in [n-1], then reflect i ↦ n - i."""
    return tuple(sorted(n - i for i in range(1, n) if i not in descents))


def omega_f(q: QSymT) -> QSymT:
    """
    Apply the involution ω to an F-basis element.

    ω F_{n,S} = F_{n,S'} with S' = {n - i : i ∈ [n-1] ∖ S}, i.e. F indexed
    by the conjugate composition. On symmetric functions this agrees with
    plain complementation of S.
    """
    _require_basis(q, "F", "omega_f")
    return QSymT(
        q.n,
        "F",
        {omega_descent_set(q.n, s): c for s, c in q.terms.items()},
    )


def symmetry_witness(q: QSymT) -> Optional[tuple[Composition, Composition]]:
    """
    Find two rearrangements of one another with different M-coefficients.

    Returns None when q is symmetric.
    """
    _require_basis(q, "M", "symmetry_witness")
    checked: set[Composition] = set()
    for alpha, coefficient in q.items():
        if alpha in checked:
            continue
        for beta in rearrangements(alpha):
            checked.add(beta)
            if q.coefficient(beta) != coefficient:
                return alpha, beta
    return None


def is_symmetric(q: QSymT) -> bool:
    """True when every t-coefficient of q is a symmetric function."""
    return symmetry_witness(q) is None


def to_sym_m(q: QSymT) -> SymT:
    """
    Rewrite a symmetric M-basis element in the m basis.

    Raises:
        NotSymmetricError: Carrying a witness pair of compositions
    """
    witness = symmetry_witness(q)
    if witness is not None:
        alpha, beta = witness
        raise NotSymmetricError(
            f"Not symmetric: M{list(alpha)} and M{list(beta)} have different "
            "coefficients",
            witness=(alpha, beta),
        )
    return SymT(
        q.n,
        "m",
        {
            alpha: c
            for alpha, c in q.terms.items()
            if list(alpha) == sorted(alpha, reverse=True)
        },
    )


def from_sym_m(s: SymT) -> QSymT:
    """m_λ = Σ M_α over the distinct rearrangements α of λ."""
    _require_basis(s, "m", "from_sym_m")
    terms: dict[Composition, TPoly] = {}
    for lam, coefficient in s.terms.items():
        for alpha in rearrangements(lam):
            terms[alpha] = coefficient
    return QSymT(s.n, "M", terms)
