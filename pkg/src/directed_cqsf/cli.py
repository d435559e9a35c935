"""Command-line interface for directed-cqsf."""

from __future__ import annotations

import functools
from collections.abc import Callable
from pathlib import Path
from typing import Any, Optional

import click
from pydantic import ValidationError

from directed_cqsf.algebra.elements import GradedFunction, QSymT, SymT
from directed_cqsf.algebra.positivity import is_palindromic
from directed_cqsf.algebra.qsym import (
    from_sym_m,
    m_to_f,
    omega_f,
    symmetry_witness,
    to_sym_m,
)
from directed_cqsf.algebra.sym import convert, omega_sym
from directed_cqsf.chromatic.colorings import chromatic_qsym_direct
from directed_cqsf.chromatic.fbasis import (
    chromatic_qsym_via_f,
    omega_chromatic_qsym_via_f,
)
from directed_cqsf.chromatic.pbasis import p_expansion_via_n
from directed_cqsf.chromatic.sinks import cycle_or_path_order
from directed_cqsf.combinatorics.families import family_generator
from directed_cqsf.combinatorics.graphs import Digraph
from directed_cqsf.combinatorics.recognition import (
    is_proper_circular_arc,
    is_unit_interval_digraph,
)
from directed_cqsf.config.loader import load_settings
from directed_cqsf.config.schema import (
    ClassifyCommand,
    ComputeCommand,
    EngineSettings,
    FamilyCommand,
    VerifyCommand,
)
from directed_cqsf.series.cycle import cycle_e_expansion_series
from directed_cqsf.utils.errors import (
    BudgetExceededError,
    InvalidInputError,
    NotSymmetricError,
)
from directed_cqsf.utils.serialization import (
    digraph_to_document,
    dumps,
    load_digraph,
    polynomial_to_document,
    render,
)
from directed_cqsf.verification.suites import run_suite

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_NOT_SYMMETRIC = 2
EXIT_BUDGET = 3
EXIT_COUNTEREXAMPLE = 4


def engine_options(command: Callable[..., Any]) -> Callable[..., Any]:
    """Attach the options shared by every command that runs a sweep."""

    @click.option(
        "--config",
        "config_path",
        type=click.Path(),
        default=None,
        help="Engine settings file (JSON or YAML)",
    )
    @click.option("--jobs", type=int, default=None, help="Worker processes for sweeps")
    @click.option(
        "--budget-factorial",
        type=int,
        default=None,
        help="Largest n allowed in S_n sweeps",
    )
    @click.option(
        "--progress/--no-progress", default=None, help="Show progress bars on stderr"
    )
    @functools.wraps(command)
    def wrapper(
        *args: Any,
        config_path: Optional[str],
        jobs: Optional[int],
        budget_factorial: Optional[int],
        progress: Optional[bool],
        **kwargs: Any,
    ) -> Any:
        overrides = {
            "jobs": jobs,
            "budget_factorial": budget_factorial,
            "progress": progress,
        }
        kwargs["engine"] = (config_path, overrides)
        return command(*args, **kwargs)

    return wrapper


def _build_settings(engine: tuple[Optional[str], dict[str, Any]]) -> EngineSettings:
    config_path, overrides = engine
    base = load_settings(config_path) if config_path else EngineSettings()
    merged = base.model_dump()
    merged.update({k: v for k, v in overrides.items() if v is not None})
    return EngineSettings(**merged)


def _emit(
    document: Any, summary: str, json_output: bool, output: Optional[str]
) -> None:
    """JSON goes to stdout (or the output file); the summary goes to stderr."""
    if output:
        path = Path(output)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(dumps(document) + "\n", encoding="utf-8")
        click.echo(summary)
        click.echo(f"Saved to {output}", err=True)
    elif json_output:
        click.echo(dumps(document))
        click.echo(summary, err=True)
    else:
        click.echo(summary)


def _express(x: GradedFunction, basis: str) -> GradedFunction:
    """Rewrite X in the requested basis, passing through the m basis when needed."""
    if isinstance(x, QSymT):
        if basis == "M":
            return x
        if basis == "F":
            return m_to_f(x)
        return convert(to_sym_m(x), basis)
    assert isinstance(x, SymT)
    if basis in ("m", "e", "p"):
        return convert(x, basis)
    monomial = from_sym_m(convert(x, "m"))
    return monomial if basis == "M" else m_to_f(monomial)


def _compute(
    d: Digraph, command: ComputeCommand, settings: EngineSettings
) -> GradedFunction:
    if command.method == "direct":
        return _express(chromatic_qsym_direct(d, settings), command.basis)
    if command.method == "f-basis":
        if command.basis == "F":
            return omega_f(omega_chromatic_qsym_via_f(d, settings))
        return _express(chromatic_qsym_via_f(d, settings), command.basis)
    if command.method == "p-basis":
        return _express(omega_sym(p_expansion_via_n(d, settings)), command.basis)
    shape, _ = cycle_or_path_order(d)
    if shape != "cycle":
        raise InvalidInputError("method 'series' needs a directed cycle")
    return _express(cycle_e_expansion_series(d.n)[d.n], command.basis)


@click.group()
def cli() -> None:
    """directed-cqsf - Chromatic quasisymmetric functions of directed graphs."""
    pass


@cli.command()
@click.option(
    "--graph", "graph_path", required=True, help="Digraph file (JSON or YAML)"
)
@click.option("--basis", default="M", help="Output basis: M, F, m, e or p")
@click.option(
    "--method",
    default="direct",
    help="direct, f-basis, p-basis or series",
)
@click.option("--json/--pretty", "json_output", default=True, help="Output format")
@click.option("-o", "--output", type=click.Path(), default=None, help="Write JSON here")
@engine_options
@click.pass_context
def compute(
    ctx: click.Context,
    graph_path: str,
    basis: str,
    method: str,
    json_output: bool,
    output: Optional[str],
    engine: tuple[Optional[str], dict[str, Any]],
) -> None:
    """Compute the chromatic quasisymmetric function of a digraph."""
    try:
        command = ComputeCommand(
            graph=graph_path, basis=basis, method=method, json_output=json_output
        )
        settings = _build_settings(engine)
        d = load_digraph(command.graph)
        click.echo(
            f"Computing X for {d} ({command.method}, basis {command.basis})...",
            err=True,
        )
        result = _compute(d, command, settings)
    except NotSymmetricError as e:
        click.echo(f"Error: {e}", err=True)
        if e.witness is not None:
            alpha, beta = (" ".join(map(str, part)) for part in e.witness)
            click.echo(f"Witness: M[{alpha}] vs M[{beta}]", err=True)
        ctx.exit(EXIT_NOT_SYMMETRIC)
    except BudgetExceededError as e:
        click.echo(f"Error: {e}", err=True)
        ctx.exit(EXIT_BUDGET)
    except (ValidationError, FileNotFoundError, ValueError) as e:
        click.echo(f"Error: {e}", err=True)
        ctx.exit(EXIT_USAGE)

    _emit(polynomial_to_document(result), render(result), command.json_output, output)


@cli.command()
@click.option(
    "--graph", "graph_path", required=True, help="Digraph file (JSON or YAML)"
)
@click.option("--json/--pretty", "json_output", default=True, help="Output format")
@click.option("-o", "--output", type=click.Path(), default=None, help="Write JSON here")
@engine_options
@click.pass_context
def classify(
    ctx: click.Context,
    graph_path: str,
    json_output: bool,
    output: Optional[str],
    engine: tuple[Optional[str], dict[str, Any]],
) -> None:
    """Report structural and symmetry properties of a digraph."""
    try:
        command = ClassifyCommand(graph=graph_path)
        settings = _build_settings(engine)
        d = load_digraph(command.graph)
        click.echo(f"Classifying {d}...", err=True)
        circular_arc = is_proper_circular_arc(d)
        x = chromatic_qsym_direct(d, settings)
        witness = symmetry_witness(x)
    except BudgetExceededError as e:
        click.echo(f"Error: {e}", err=True)
        ctx.exit(EXIT_BUDGET)
    except (ValidationError, FileNotFoundError, ValueError) as e:
        click.echo(f"Error: {e}", err=True)
        ctx.exit(EXIT_USAGE)

    report: dict[str, Any] = {
        "oriented": d.is_oriented(),
        "acyclic": d.is_acyclic(),
        "proper_circular_arc": circular_arc.accepted,
        "unit_interval": is_unit_interval_digraph(d).accepted,
        "symmetric": witness is None,
        "palindromic": is_palindromic(x),
    }
    if not circular_arc:
        report["proper_circular_arc_witness"] = {
            "obstruction": circular_arc.obstruction,
            "vertices": list(circular_arc.witness or ()),
        }
    if witness is not None:
        report["symmetry_witness"] = [list(witness[0]), list(witness[1])]

    summary = "\n".join(
        f"  {key}: {'yes' if value else 'no'}"
        for key, value in report.items()
        if isinstance(value, bool)
    )
    _emit(report, summary, json_output, output)


@cli.command()
@click.argument("suite")
@click.option("--max-n", type=int, default=4, help="Largest vertex count checked")
@click.option("--family", default=None, help="interval or circular (conjecture suite)")
@click.option(
    "-o", "--output", type=click.Path(), default=None, help="Write report here"
)
@engine_options
@click.pass_context
def verify(
    ctx: click.Context,
    suite: str,
    max_n: int,
    family: Optional[str],
    output: Optional[str],
    engine: tuple[Optional[str], dict[str, Any]],
) -> None:
    """Run a verification suite.

    SUITE: f-basis, p-basis, cycle-p, cycle-e, sinks, ao-lambda, conjecture,
    symmetry or specialization
    """
    try:
        command = VerifyCommand(suite=suite, max_n=max_n, family=family)
        settings = _build_settings(engine)
        click.echo(f"Running {command.suite} up to n={command.max_n}...", err=True)
        report = run_suite(command.suite, command.max_n, command.family, settings)
    except BudgetExceededError as e:
        click.echo(f"Error: {e}", err=True)
        ctx.exit(EXIT_BUDGET)
    except (ValidationError, FileNotFoundError, ValueError) as e:
        click.echo(f"Error: {e}", err=True)
        ctx.exit(EXIT_USAGE)

    document = report.model_dump(exclude_none=True)
    if report.status == "pass":
        summary = f"✓ {report.suite}: {report.checked} checks passed"
    else:
        summary = f"✗ {report.suite}: counterexample after {report.checked} checks"
    _emit(document, summary, True, output)
    if report.status != "pass":
        ctx.exit(EXIT_COUNTEREXAMPLE)


@cli.command()
@click.argument("kind")
@click.option("-n", "n", type=int, required=True, help="Number of vertices")
@click.option("-r", "r", type=int, default=None, help="Band width (interval, circular)")
@click.option("-o", "--output", type=click.Path(), default=None, help="Write JSON here")
@click.pass_context
def family(
    ctx: click.Context, kind: str, n: int, r: Optional[int], output: Optional[str]
) -> None:
    """Emit a member of a standard digraph family.

    KIND: interval (G_{n,r}), circular (G*_{n,r}), path or cycle
    """
    try:
        command = FamilyCommand(kind=kind, n=n, r=r)
        d = family_generator(command.kind, command.n, command.r)
    except (ValidationError, ValueError) as e:
        click.echo(f"Error: {e}", err=True)
        ctx.exit(EXIT_USAGE)

    _emit(digraph_to_document(d), str(d), True, output)


if __name__ == "__main__":
    cli()
