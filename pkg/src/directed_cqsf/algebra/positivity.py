"""e-positivity, palindromicity and e-unimodality of polynomials in t."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Optional

from directed_cqsf.algebra.elements import GradedFunction, SymT
from directed_cqsf.utils.errors import InvalidInputError

Witness = tuple[Any, int]


@dataclass(frozen=True)
class PositivityReport:
    """
    Result of e_positivity_report.

    ``witnesses`` maps "positive", "palindromic" or "unimodal" to the
    first (λ, j) where that property fails; j is the t-degree.
    """

    positive: bool
    palindromic: bool
    unimodal: bool
    center: Optional[Fraction]
    witnesses: dict[str, Witness] = field(default_factory=dict)

    @property
    def all_hold(self) -> bool:
        return self.positive and self.palindromic and self.unimodal


def _palindromic_witness(element: GradedFunction) -> Optional[Witness]:
    support = element.t_support()
    if support is None:
        return None
    low, high = support
    for index, coefficient in element.items():
        for j in range(low, high + 1):
            if coefficient[j] != coefficient[low + high - j]:
                return index, j
    return None


def is_palindromic(element: GradedFunction) -> bool:
    """a_j = a_{m-j} about the centre of the nonzero t-support, in any basis."""
    return _palindromic_witness(element) is None


def e_positivity_report(s: SymT) -> PositivityReport:
    """
    Check e-positivity, palindromicity and e-unimodality.

    Writing s = Σ a_j t^j and reindexing so the lowest nonzero degree is 0
    and the highest is m, s is e-unimodal when a_{j+1} - a_j is e-positive
    for 0 <= j < (m-1)/2.

    Args:
        s: Symmetric function in the e basis

    Returns:
        PositivityReport with the first failing (λ, j) for each property
    """
    if s.basis != "e":
        raise InvalidInputError(
            f"e_positivity_report expects basis 'e', got {s.basis!r}"
        )

    witnesses: dict[str, Witness] = {}
    support = s.t_support()
    if support is None:
        return PositivityReport(True, True, True, None, witnesses)
    low, high = support
    m = high - low

    for index, coefficient in s.items():
        negative = next((j for j, c in coefficient.items() if c < 0), None)
        if negative is not None:
            witnesses["positive"] = (index, negative)
            break

    palindrome = _palindromic_witness(s)
    if palindrome is not None:
        witnesses["palindromic"] = palindrome

    for j in range(m + 1):
        if 2 * j >= m - 1:
            break
        step = next(
            (
                index
                for index, coefficient in s.items()
                if coefficient[low + j + 1] - coefficient[low + j] < 0
            ),
            None,
        )
        if step is not None:
            witnesses["unimodal"] = (step, low + j + 1)
            break

    return PositivityReport(
        positive="positive" not in witnesses,
        palindromic="palindromic" not in witnesses,
        unimodal="unimodal" not in witnesses,
        center=Fraction(low + high, 2),
        witnesses=witnesses,
    )
