"""Transitions between the m, e and p bases of symmetric functions."""

from __future__ import annotations

from collections.abc import Mapping
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from types import MappingProxyType
from typing import Literal

from directed_cqsf.algebra.elements import SymT
from directed_cqsf.combinatorics.partitions import Partition, partitions
from directed_cqsf.combinatorics.poly import TPoly
from directed_cqsf.utils.errors import InvalidInputError

ProductKind = Literal["e", "p"]


@lru_cache(maxsize=None)
def _monomial_count(
    kind: ProductKind, factors: tuple[int, ...], remaining: tuple[int, ...]
) -> int:
    """
    Coefficient of x^remaining in the product of e_k (or p_k) over ``factors``.

    Only the len(remaining) variables carrying a positive exponent can
    contribute, so each factor's monomial expansion is taken in exactly
    those variables and multiplied in one factor at a time.
    """
    if not factors:
        return 0 if any(remaining) else 1
    k, rest = factors[0], factors[1:]
    total = 0
    if kind == "e":
        open_slots = [j for j, r in enumerate(remaining) if r > 0]
        for chosen in combinations(open_slots, k):
            reduced = list(remaining)
            for j in chosen:
                reduced[j] -= 1
            total += _monomial_count(kind, rest, tuple(reduced))
    else:
        for j, r in enumerate(remaining):
            if r >= k:
                reduced = list(remaining)
                reduced[j] -= k
                total += _monomial_count(kind, rest, tuple(reduced))
    return total


@lru_cache(maxsize=None)
def expansion_in_m(kind: ProductKind, lam: Partition) -> Mapping[Partition, int]:
    """The m-basis expansion of e_λ or p_λ, as μ → integer coefficient."""
    row: dict[Partition, int] = {}
    for mu in partitions(lam.weight):
        count = _monomial_count(kind, tuple(lam), tuple(mu))
        if count:
            row[mu] = count
    return MappingProxyType(row)


def _require(s: SymT, basis: str) -> None:
    if s.basis != basis:
        raise InvalidInputError(f"Expected basis {basis!r}, got {s.basis!r}")


def _expand(s: SymT, kind: ProductKind) -> SymT:
    _require(s, kind)
    terms: dict[Partition, TPoly] = {}
    for lam, coefficient in s.terms.items():
        for mu, count in expansion_in_m(kind, lam).items():
            terms[mu] = terms.get(mu, TPoly.zero()) + coefficient * count
    return SymT(s.n, "m", terms)


def e_to_m(s: SymT) -> SymT:
    """Rewrite an e-basis element in the m basis."""
    return _expand(s, "e")


def p_to_m(s: SymT) -> SymT:
    """Rewrite a p-basis element in the m basis."""
    return _expand(s, "p")


def m_to_e(s: SymT) -> SymT:
    """
    Rewrite an m-basis element in the e basis.

    e_λ has leading term m_{λ'} and otherwise only m_μ with μ below λ' in
    dominance, so sweeping μ in reverse lexicographic order (largest first)
    peels off one e-coefficient per step.
    """
    _require(s, "m")
    residual = dict(s.terms)
    result: dict[Partition, TPoly] = {}
    for mu in partitions(s.n):
        coefficient = residual.pop(mu, None)
        if coefficient is None or coefficient.is_zero():
            continue
        lam = mu.conjugate()
        row = expansion_in_m("e", lam)
        scaled = coefficient / Fraction(row[mu])
        result[lam] = scaled
        for nu, count in row.items():
            if nu != mu:
                residual[nu] = residual.get(nu, TPoly.zero()) - scaled * count
    return SymT(s.n, "e", result)


def m_to_p(s: SymT) -> SymT:
    """
    Rewrite an m-basis element in the p basis.

    p_λ has m_λ as its smallest term in dominance, so sweeping μ in
    lexicographic order (smallest first) peels off one p-coefficient per step.
    """
    _require(s, "m")
    residual = dict(s.terms)
    result: dict[Partition, TPoly] = {}
    for mu in reversed(partitions(s.n)):
        coefficient = residual.pop(mu, None)
        if coefficient is None or coefficient.is_zero():
            continue
        row = expansion_in_m("p", mu)
        scaled = coefficient / Fraction(row[mu])
        result[mu] = scaled
        for nu, count in row.items():
            if nu != mu:
                residual[nu] = residual.get(nu, TPoly.zero()) - scaled * count
    return SymT(s.n, "p", result)


def to_m(s: SymT) -> SymT:
    """Rewrite any symmetric element in the m basis."""
    if s.basis == "m":
        return s
    return e_to_m(s) if s.basis == "e" else p_to_m(s)


def convert(s: SymT, basis: str) -> SymT:
    """Rewrite a symmetric element in the requested basis (m, e or p)."""
    if basis == s.basis:
        return s
    m_form = to_m(s)
    if basis == "m":
        return m_form
    if basis == "e":
        return m_to_e(m_form)
    if basis == "p":
        return m_to_p(m_form)
    raise InvalidInputError(f"Unknown symmetric basis {basis!r}")


def omega_sym(s: SymT) -> SymT:
    """
    Apply ω: p_λ ↦ (-1)^{n - l(λ)} p_λ, returning the input's basis.
    """
    p_form = convert(s, "p")
    flipped = SymT(
        s.n,
        "p",
        {
            lam: c * (-1 if (s.n - len(lam)) % 2 else 1)
            for lam, c in p_form.terms.items()
        },
    )
    return convert(flipped, s.basis)
