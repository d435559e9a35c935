"""Two-sided checks behind ``directed-cqsf verify``, one function per suite."""

from __future__ import annotations

from collections.abc import Callable, Iterable
from dataclasses import dataclass, field
from typing import Any, Optional

import click
from tqdm import tqdm

from directed_cqsf.algebra.elements import GradedFunction, SymT
from directed_cqsf.algebra.positivity import e_positivity_report
from directed_cqsf.algebra.qsym import (
    f_to_m,
    from_sym_m,
    is_symmetric,
    m_to_f,
    omega_f,
    to_sym_m,
)
from directed_cqsf.algebra.specialization import principal_specialization
from directed_cqsf.algebra.sym import convert, m_to_e, omega_sym
from directed_cqsf.chromatic.colorings import (
    chromatic_qsym_direct,
    shareshian_wachs_qsym,
)
from directed_cqsf.chromatic.fbasis import chromatic_qsym_via_f
from directed_cqsf.chromatic.pbasis import (
    cycle_p_coefficient,
    n_g_lambda_counts,
    p_expansion_via_n,
)
from directed_cqsf.chromatic.sinks import (
    ao_lambda_polynomial,
    sink_generating_polynomial,
)
from directed_cqsf.combinatorics.families import directed_cycle, directed_path
from directed_cqsf.combinatorics.graphs import (
    Digraph,
    digraph_from_edges,
    orient_by_labels,
)
from directed_cqsf.combinatorics.orientations import chromatic_polynomial
from directed_cqsf.combinatorics.partitions import partitions
from directed_cqsf.combinatorics.poly import TPoly
from directed_cqsf.config.schema import EngineSettings, SuiteTag, VerificationReport
from directed_cqsf.series.cycle import cycle_e_coefficient, cycle_e_expansion_series
from directed_cqsf.utils.errors import InvalidInputError
from directed_cqsf.utils.serialization import (
    digraph_to_document,
    polynomial_to_document,
)
from directed_cqsf.verification.pools import (
    FamilyName,
    bidirected_sample,
    family_pool,
    oriented_digraphs,
    reversed_cycle,
    symmetric_test_pool,
    undirected_graphs,
)

# Largest n swept exhaustively over all oriented digraphs (3^C(n,2) of them).
EXHAUSTIVE_LIMIT = 4
# Largest k used when specializing x_1 = ... = x_k = 1.
SPECIALIZATION_COLORS = 5


def _value_document(value: Any) -> Any:
    if isinstance(value, GradedFunction):
        return polynomial_to_document(value)
    if isinstance(value, TPoly):
        return {"t": [str(c) for c in value.coefficients]}
    return value


def _witness_document(witnesses: dict[str, tuple[Any, int]]) -> dict[str, Any]:
    return {
        name: {"index": list(index), "t_degree": j}
        for name, (index, j) in witnesses.items()
    }


class Mismatch(Exception):
    """Raised inside a suite to stop at the first counterexample."""

    def __init__(self, counterexample: dict[str, Any]):
        super().__init__(counterexample.get("check", "mismatch"))
        self.counterexample = counterexample


@dataclass
class SuiteRun:
    """Counts comparisons and turns the first failing one into a counterexample."""

    settings: EngineSettings
    checked: int = 0
    params: dict[str, Any] = field(default_factory=dict)

    def expect(
        self,
        check: str,
        expected: Any,
        actual: Any,
        graph: Optional[Digraph] = None,
        **detail: Any,
    ) -> None:
        self.checked += 1
        if expected == actual:
            return
        counterexample: dict[str, Any] = {"check": check}
        if graph is not None:
            counterexample["graph"] = digraph_to_document(graph)
        counterexample.update({k: _value_document(v) for k, v in detail.items()})
        counterexample["expected"] = _value_document(expected)
        counterexample["actual"] = _value_document(actual)
        raise Mismatch(counterexample)

    def progress(self, items: Iterable[Any], desc: str) -> Iterable[Any]:
        return tqdm(
            items,
            desc=desc,
            unit="graph",
            leave=False,
            disable=not self.settings.progress,
        )


def _symmetric_x(d: Digraph, settings: EngineSettings) -> SymT:
    return to_sym_m(chromatic_qsym_direct(d, settings))


def f_basis_suite(run: SuiteRun, max_n: int, family: Optional[FamilyName]) -> None:
    """F-basis expansion against the coloring oracle, plus the labeled-graph case."""
    settings = run.settings
    pool: list[Digraph] = []
    for n in range(0, min(max_n, EXHAUSTIVE_LIMIT) + 1):
        pool.extend(oriented_digraphs(n))
    pool.extend(bidirected_sample(settings.bidirected_samples, max_n, settings.seed))
    run.params["pool"] = len(pool)
    for d in run.progress(pool, "f-basis"):
        run.expect(
            "f-basis",
            chromatic_qsym_direct(d, settings),
            chromatic_qsym_via_f(d, settings),
            graph=d,
        )
    for n in range(1, min(max_n, EXHAUSTIVE_LIMIT) + 1):
        for g in undirected_graphs(n):
            d = orient_by_labels(g)
            run.expect(
                "labeled-graph",
                shareshian_wachs_qsym(g),
                chromatic_qsym_direct(d, settings),
                graph=d,
            )


def p_basis_suite(run: SuiteRun, max_n: int, family: Optional[FamilyName]) -> None:
    """p-expansion through N_{G,λ} against ω of the oracle, and unique-sink counts."""
    settings = run.settings
    pool = list(
        symmetric_test_pool(
            max_n, settings.circular_arc_samples, settings.seed, exhaustive_n=None
        )
    )
    run.params["pool"] = len(pool)
    for d in run.progress(pool, "p-basis"):
        expected = convert(omega_sym(_symmetric_x(d, settings)), "p")
        run.expect("p-basis", expected, p_expansion_via_n(d, settings), graph=d)

    for n in range(1, min(max_n, 5) + 1):
        for g in undirected_graphs(n):
            if not g.is_connected():
                continue
            d = orient_by_labels(g)
            unique_sink = sink_generating_polynomial(d, 1, settings)(1)
            whole = n_g_lambda_counts(d, settings)[(n,)](1)
            run.expect("unique-sink", unique_sink, whole, graph=d)


def cycle_p_suite(run: SuiteRun, max_n: int, family: Optional[FamilyName]) -> None:
    """Closed-form cycle p-coefficients against N_{C_n,λ} enumeration."""
    for n in range(2, max_n + 1):
        d = directed_cycle(n)
        counts = n_g_lambda_counts(d, run.settings)
        for lam in partitions(n):
            run.expect(
                "cycle-p",
                counts[lam],
                cycle_p_coefficient(n, lam),
                graph=d,
                partition=list(lam),
            )


def cycle_e_suite(run: SuiteRun, max_n: int, family: Optional[FamilyName]) -> None:
    """Generating-function e-expansion of X_{C_n} against the oracle."""
    if max_n < 2:
        return
    series = cycle_e_expansion_series(max_n)
    for n in range(2, max_n + 1):
        d = directed_cycle(n)
        extracted = series[n]
        run.expect("cycle-e", m_to_e(_symmetric_x(d, run.settings)), extracted, graph=d)
        report = e_positivity_report(extracted)
        run.expect(
            "cycle-e-positivity",
            True,
            report.all_hold,
            graph=d,
            witnesses=_witness_document(report.witnesses),
        )
        chromatic_value = (n - 1) ** n + (-1) ** n * (n - 1)
        run.expect(
            "cycle-e-specialization",
            chromatic_value,
            principal_specialization(extracted, n)(1),
            graph=d,
        )


def sinks_suite(run: SuiteRun, max_n: int, family: Optional[FamilyName]) -> None:
    """Sums of e-coefficients by length against acyclic orientations by sink count."""
    settings = run.settings
    pool = symmetric_test_pool(
        max_n,
        settings.circular_arc_samples,
        settings.seed,
        exhaustive_n=min(max_n, EXHAUSTIVE_LIMIT),
    )
    for d in run.progress(list(pool), "sinks"):
        e_form = m_to_e(_symmetric_x(d, settings))
        for k in range(1, d.n + 1):
            by_length = TPoly.zero()
            for lam, c in e_form.terms.items():
                if len(lam) == k:
                    by_length = by_length + c
            run.expect(
                "sinks",
                by_length,
                sink_generating_polynomial(d, k, settings),
                graph=d,
                sinks=k,
            )


def ao_lambda_suite(run: SuiteRun, max_n: int, family: Optional[FamilyName]) -> None:
    """AO_λ ascent polynomials of directed cycles and paths against e-coefficients."""
    settings = run.settings
    shapes: list[tuple[str, Digraph]] = [
        ("path", directed_path(n)) for n in range(1, max_n + 1)
    ]
    shapes.extend(("cycle", directed_cycle(n)) for n in range(2, max_n + 1))
    for kind, d in shapes:
        e_form = m_to_e(_symmetric_x(d, settings))
        for lam in partitions(d.n):
            counted = ao_lambda_polynomial(d, lam, settings)
            run.expect(
                "ao-lambda",
                e_form.coefficient(lam),
                counted,
                graph=d,
                partition=list(lam),
            )
            if kind == "cycle":
                run.expect(
                    "ao-lambda-series",
                    cycle_e_coefficient(d.n, lam),
                    counted,
                    graph=d,
                    partition=list(lam),
                )


def conjecture_suite(run: SuiteRun, max_n: int, family: Optional[FamilyName]) -> None:
    """e-positivity, palindromicity and e-unimodality across the families."""
    kinds: list[FamilyName] = [family] if family else ["circular", "interval"]
    for kind in kinds:
        for label, d in run.progress(list(family_pool(kind, max_n)), kind):
            report = e_positivity_report(m_to_e(_symmetric_x(d, run.settings)))
            run.expect(
                "conjecture",
                True,
                report.all_hold,
                graph=d,
                member=label,
                witnesses=_witness_document(report.witnesses),
            )


def symmetry_suite(run: SuiteRun, max_n: int, family: Optional[FamilyName]) -> None:
    """Symmetry of X on proper circular arc digraphs, fixed non-examples, and ω."""
    settings = run.settings
    pool = symmetric_test_pool(
        max_n,
        settings.circular_arc_samples,
        settings.seed,
        exhaustive_n=min(max_n, EXHAUSTIVE_LIMIT),
    )
    for d in run.progress(list(pool), "symmetry"):
        x = chromatic_qsym_direct(d, settings)
        run.expect("symmetric", True, is_symmetric(x), graph=d)
        if d.n <= 6:
            via_sym = from_sym_m(omega_sym(to_sym_m(x)))
            via_f = f_to_m(omega_f(m_to_f(x)))
            run.expect("omega", via_sym, via_f, graph=d)

    if max_n >= 3:
        for edges in ([(1, 3), (2, 3)], [(3, 1), (3, 2)]):
            d = digraph_from_edges(3, edges)
            x = chromatic_qsym_direct(d, settings)
            run.expect("not-symmetric", False, is_symmetric(x), graph=d)
    if max_n >= 5:
        d = reversed_cycle(5)
        x = chromatic_qsym_direct(d, settings)
        run.expect("reversed-cycle", True, is_symmetric(x), graph=d)


def specialization_suite(
    run: SuiteRun, max_n: int, family: Optional[FamilyName]
) -> None:
    """X(1^k, t=1) = χ_G(k), and X at t = 1 only sees the underlying graph."""
    settings = run.settings
    for n in range(0, min(max_n, EXHAUSTIVE_LIMIT) + 1):
        at_one: dict[Any, Any] = {}
        for d in oriented_digraphs(n):
            x = chromatic_qsym_direct(d, settings)
            chi = chromatic_polynomial(d.underlying)
            for k in range(0, SPECIALIZATION_COLORS + 1):
                run.expect(
                    "specialization",
                    chi(k),
                    principal_specialization(x, k)(1),
                    graph=d,
                    colors=k,
                )
            flat = x.evaluate_t(1)
            first = at_one.setdefault(d.underlying, (d, flat))
            run.expect(
                "t-equals-one",
                first[1],
                flat,
                graph=d,
                compared_with=digraph_to_document(first[0]),
            )


SUITES: dict[str, Callable[[SuiteRun, int, Optional[FamilyName]], None]] = {
    "f-basis": f_basis_suite,
    "p-basis": p_basis_suite,
    "cycle-p": cycle_p_suite,
    "cycle-e": cycle_e_suite,
    "sinks": sinks_suite,
    "ao-lambda": ao_lambda_suite,
    "conjecture": conjecture_suite,
    "symmetry": symmetry_suite,
    "specialization": specialization_suite,
}


def run_suite(
    suite: SuiteTag,
    max_n: int,
    family: Optional[FamilyName] = None,
    settings: Optional[EngineSettings] = None,
) -> VerificationReport:
    """
    Run one verification suite and report the outcome.

    Args:
        suite: Suite name
        max_n: Largest vertex count checked
        family: Restrict the conjecture suite to one family
        settings: Engine settings (budgets, workers, sample sizes, seed)

    Returns:
        VerificationReport with status "fail" and a counterexample on the
        first mismatch

    Raises:
        BudgetExceededError: If a sweep exceeds the configured budget
        InvalidInputError: If the suite name is unknown
    """
    settings = settings or EngineSettings()
    if suite not in SUITES:
        raise InvalidInputError(f"Unknown suite {suite!r}")
    run = SuiteRun(settings, params={"max_n": max_n, "family": family})
    try:
        SUITES[suite](run, max_n, family)
    except Mismatch as mismatch:
        click.echo(f"Counterexample in {suite}: {mismatch}", err=True)
        return VerificationReport(
            suite=suite,
            params=run.params,
            status="fail",
            checked=run.checked,
            counterexample=mismatch.counterexample,
        )
    return VerificationReport(
        suite=suite, params=run.params, status="pass", checked=run.checked
    )
