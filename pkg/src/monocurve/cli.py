"""CLI entry point for monocurve."""

import json
import shutil
from contextlib import contextmanager
from math import gcd
from pathlib import Path
from typing import Any, Iterator, Optional

import typer
from rich.console import Console
from rich.markup import escape
from rich.panel import Panel
from rich.table import Table

from monocurve import __version__
from monocurve.algebra.exponents import (
    format_binomial,
    format_monomial,
    parse_binomial,
    parse_monomial,
)
from monocurve.algebra.grobner import graver_basis, membership, saturate
from monocurve.algebra.intlat import Grading
from monocurve.algebra.semigroup import critical_exponents, fiber as curve_fiber
from monocurve.analysis.classify4 import classify
from monocurve.analysis.critical import (
    chain_implies_toric,
    circuit,
    circuit_in_reduced_gb,
    circuit_indispensable,
    classify_critical_case,
    critical_set,
    distinct_choice_generates,
    indispensable_critical,
)
from monocurve.analysis.edgeideal import (
    edge_ideal,
    lawrence_containment,
    verify_all_connected,
    verify_unique_generation,
)
from monocurve.analysis.fibergraph import (
    Verdict,
    as_degree,
    curve_ideal,
    fiber_graph,
    indispensable_binomial,
    indispensable_monomial,
    is_minimal_generator,
    minimal_generating_set,
    unique_minimal_system,
)
from monocurve.analysis.graver import min_graver_degree_indispensables, primitive_indispensables
from monocurve.output.markdown_writer import MarkdownWriter
from monocurve.output.report import ClassificationModel
from monocurve.pipeline.sweep import SweepConfig, SweepOrchestrator
from monocurve.utils.config import CONFIG_FILENAME, get_settings, get_templates_dir
from monocurve.utils.errors import ComputationRejected, InvariantViolation, ParseError
from monocurve.utils.io import load_ideal, read_graph_file
from monocurve.utils.logger import setup_logging

app = typer.Typer(
    name="monocurve",
    help="monocurve - toric ideals of monomial curves: minimal systems, indispensability, uniqueness",
    add_completion=False,
)
console = Console()

EXIT_USAGE = 2
EXIT_REJECTED = 3

GENERATORS = typer.Argument(..., help="Positive integers a_1 ... a_n with gcd 1")
JSON_OPTION = typer.Option(False, "--json", help="Print canonical JSON instead of tables")


@app.callback()
def main(
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Log algorithm internals"),
    quiet: bool = typer.Option(False, "--quiet", "-q", help="Only log warnings and errors"),
):
    """Exact computations on toric ideals of monomial curves."""
    level = get_settings().log_level
    if verbose:
        level = "debug"
    elif quiet:
        level = "warning"
    setup_logging(level)


@contextmanager
def reported_errors() -> Iterator[None]:
    """Map package errors to exit codes: 2 for bad input, 3 for rejected computations."""
    try:
        yield
    except (ParseError, FileNotFoundError, ValueError) as e:
        console.print(f"[red]Error:[/] {escape(str(e))}")
        raise typer.Exit(EXIT_USAGE)
    except (ComputationRejected, InvariantViolation) as e:
        console.print(f"[red]Error:[/] {escape(str(e))}")
        raise typer.Exit(EXIT_REJECTED)


def _curve(generators: list[int]) -> tuple[int, ...]:
    A = tuple(generators)
    if len(A) < 2:
        raise ComputationRejected("at least two generators are needed")
    if any(a <= 0 for a in A):
        raise ComputationRejected(f"generators must be positive: {A}")
    if gcd(*A) != 1:
        raise ComputationRejected(f"gcd{A} != 1")
    return A


def _emit_json(data: Any) -> None:
    typer.echo(json.dumps(data, sort_keys=True, separators=(",", ":")))


def _yes(flag: bool) -> str:
    return "[green]yes[/]" if flag else "[yellow]no[/]"


def _parse_degree(text: str) -> tuple[int, ...]:
    try:
        return as_degree([int(part) for part in text.split(",")])
    except ValueError:
        raise ParseError(f"expected a degree like 165 or 1,0,2: {text!r}") from None


@app.command()
def init(force: bool = typer.Option(False, "--force", help="Overwrite an existing config")):
    """Write the default monocurve.config.yaml into the current directory."""
    target = Path.cwd() / CONFIG_FILENAME
    if target.exists() and not force:
        console.print(f"[red]Error:[/] {CONFIG_FILENAME} already exists (use --force).")
        raise typer.Exit(1)
    shutil.copy(get_templates_dir() / "config" / "default_config.yaml", target)
    console.print(f"[green]Created:[/] {CONFIG_FILENAME}")


@app.command(name="classify")
def classify_command(
    generators: list[int] = GENERATORS,
    as_json: bool = JSON_OPTION,
    markdown: Optional[Path] = typer.Option(None, "--markdown", help="Also write a Markdown report"),
    no_checks: bool = typer.Option(False, "--no-checks", help="Skip the run-time invariant checks"),
):
    """Classify four generators: critical case, S u I u R and the uniqueness verdict."""
    with reported_errors():
        report = classify(_curve(generators), check_invariants=False if no_checks else None)
        model = ClassificationModel.from_report(report)
        if markdown is not None:
            writer = MarkdownWriter(markdown.parent)
            writer.write_classification(model, markdown.name)
    if as_json:
        typer.echo(model.to_json())
        return

    table = Table(title=f"A = {model.generators}")
    table.add_column("Property", style="cyan")
    table.add_column("Value", style="green")
    table.add_row("critical exponents", str(tuple(model.c)))
    table.add_row("case", model.case)
    table.add_row("variable order", ", ".join(f"x{p + 1}" for p in model.permutation))
    table.add_row("mu(I_A)", str(model.mu_ia))
    table.add_row("mu(C_A)", str(model.mu_ca))
    table.add_row("unique", _yes(model.unique))
    table.add_row("C_A unique", _yes(model.critical_unique))
    table.add_row("fiber-graph criterion", _yes(model.exact_unique))
    table.add_row("Gorenstein", _yes(model.gorenstein))
    table.add_row("complete intersection", _yes(model.complete_intersection))
    console.print(table)
    for name, members in (("S", model.s_system), ("I", model.i_system), ("R", model.r_system)):
        console.print(f"[bold]{name}[/] ({len(members)})")
        for f in members:
            console.print(f"  {f}")
    for note in model.notes:
        console.print(f"[yellow]Note:[/] {escape(note)}")


@app.command()
def mingens(generators: list[int] = GENERATORS, as_json: bool = JSON_OPTION):
    """A minimal generating set of I_A, grouped by Betti degree."""
    with reported_errors():
        A = _curve(generators)
        I = curve_ideal(A)
        table = minimal_generating_set(I)
        unique = unique_minimal_system(I, table)
    if as_json:
        _emit_json(
            {
                "A": list(A),
                "mu": table.mu,
                "unique": unique,
                "betti": [[b[0], count] for b, count in table.counts()],
                "generators": [format_binomial(f) for f in table.generators()],
            }
        )
        return

    out = Table(title=f"Minimal generators of I_A, A = {list(A)}")
    out.add_column("Degree", style="cyan", justify="right")
    out.add_column("Components", justify="right")
    out.add_column("Binomials", style="green")
    for b in table.degrees():
        entry = table.entries[b]
        out.add_row(str(b[0]), str(entry.components), "\n".join(format_binomial(f) for f in entry.generators))
    console.print(out)
    console.print(f"mu(I_A) = {table.mu}, unique minimal system: {_yes(unique)}")


@app.command()
def critical(generators: list[int] = GENERATORS, as_json: bool = JSON_OPTION):
    """Critical exponents, critical binomials and, for four generators, the critical case."""
    with reported_errors():
        A = _curve(generators)
        cs = critical_set(A)
        rows = [
            (i, f, indispensable_critical(A, f)) for i, group in enumerate(cs.per_variable) for f in group
        ]
        chain = chain_implies_toric(A)
        case = classify_critical_case(A) if len(A) == 4 else None
        generates = distinct_choice_generates(A) if len(A) == 4 else None
    data = {
        "A": list(A),
        "c": list(cs.c),
        "critical": [
            {"variable": i + 1, "binomial": format_binomial(f), "indispensable": flag} for i, f, flag in rows
        ],
        "chain": chain.value,
    }
    if case is not None:
        data.update(
            case=case.label.value,
            mu_CA=case.mu_CA,
            S=[format_binomial(f) for f in case.S],
            one_per_variable=generates.value if generates else None,
        )
    if as_json:
        _emit_json(data)
        return

    console.print(f"c = {tuple(cs.c)}, critical degrees = {cs.degrees}")
    table = Table(title="Critical binomials")
    table.add_column("Variable", style="cyan")
    table.add_column("Binomial", style="green")
    table.add_column("Indispensable")
    for i, f, flag in rows:
        table.add_row(f"x{i + 1}", format_binomial(f), _yes(flag))
    console.print(table)
    console.print(f"all critical degrees equal with pure-power fibers: {chain.value}")
    if case is not None:
        console.print(f"case {case.label.value}, mu(C_A) = {case.mu_CA}")
        for f in case.S:
            console.print(f"  {format_binomial(f)}")


@app.command()
def circuits(generators: list[int] = GENERATORS, as_json: bool = JSON_OPTION):
    """Every circuit x_i^. - x_j^., its indispensability and reduced-basis membership."""
    with reported_errors():
        A = _curve(generators)
        rows = [
            (i, j, circuit(A, i, j), circuit_indispensable(A, i, j), circuit_in_reduced_gb(A, i, j))
            for i in range(len(A))
            for j in range(i + 1, len(A))
        ]
    if as_json:
        _emit_json(
            [
                {"i": i + 1, "j": j + 1, "circuit": format_binomial(f), "indispensable": ind, "in_reduced_gb": gb}
                for i, j, f, ind, gb in rows
            ]
        )
        return

    table = Table(title=f"Circuits of A = {list(A)}")
    table.add_column("Pair", style="cyan")
    table.add_column("Circuit", style="green")
    table.add_column("Indispensable")
    table.add_column("In reduced GB")
    for i, j, f, ind, gb in rows:
        table.add_row(f"({i + 1}, {j + 1})", format_binomial(f), _yes(ind), _yes(gb))
    console.print(table)


@app.command()
def graver(generators: list[int] = GENERATORS, as_json: bool = JSON_OPTION):
    """The Graver basis; for four generators also its certified indispensable elements."""
    with reported_errors():
        A = _curve(generators)
        basis = graver_basis(Grading.curve(A))
        strict = primitive_indispensables(A, basis) if len(A) == 4 else []
        least = min_graver_degree_indispensables(A, basis) if len(A) >= 4 else []
    data = {
        "A": list(A),
        "graver": [format_binomial(f) for f in basis],
        "primitive_indispensable": [format_binomial(f) for f in strict],
        "least_degree_indispensable": [format_binomial(f) for f in least],
    }
    if as_json:
        _emit_json(data)
        return

    console.print(f"Graver basis of A = {list(A)}: {len(basis)} elements")
    for f in basis:
        marks = ("*" if f in strict else "") + ("+" if f in least else "")
        console.print(f"  {format_binomial(f)} {marks}".rstrip())
    if strict or least:
        console.print("[dim]* all exponents below c, + least Graver degree; both indispensable[/]")


@app.command()
def fiber(
    generators: Optional[list[int]] = typer.Argument(None, help="Curve generators"),
    degree: str = typer.Option(..., "--degree", "-d", help="Degree b (comma separated for gradings)"),
    ideal: Optional[Path] = typer.Option(None, "--ideal", help="Ideal file; shows G_b(J) instead"),
    as_json: bool = JSON_OPTION,
):
    """Monomials of a given degree, or the fiber graph G_b(J) of an ideal file."""
    with reported_errors():
        b = _parse_degree(degree)
        if ideal is not None:
            J = load_ideal(ideal)
            graph = fiber_graph(J, b)
            if as_json:
                _emit_json(
                    {
                        "degree": list(b),
                        "components": [[format_monomial(u) for u in comp] for comp in graph.components],
                        "classes": len(graph.classes),
                        "generators": graph.generator_count,
                    }
                )
                return
            console.print(f"G_{list(b)}(J): {graph.t} component(s), {len(graph.classes)} class(es)")
            for comp in graph.components:
                console.print("  {" + ", ".join(format_monomial(u) for u in comp) + "}")
            return
        if not generators:
            raise ParseError("give curve generators or --ideal")
        A = _curve(generators)
        if len(b) != 1:
            raise ParseError("a curve degree is a single integer")
        monomials = curve_fiber(A, b[0], get_settings().compute.max_fiber_size)
    if as_json:
        _emit_json({"A": list(A), "degree": b[0], "fiber": [format_monomial(u) for u in monomials]})
        return
    console.print(f"{len(monomials)} monomial(s) of degree {b[0]}:")
    for u in monomials:
        console.print(f"  {format_monomial(u)}")


@app.command()
def indisp(
    generators: list[int] = GENERATORS,
    binomial: Optional[str] = typer.Option(None, "--binomial", "-b", help='e.g. "x1^4 - x2^3"'),
    monomial: Optional[str] = typer.Option(None, "--monomial", "-m", help='e.g. "x3*x4"'),
    as_json: bool = JSON_OPTION,
):
    """Whether a binomial or a monomial is indispensable in I_A."""
    with reported_errors():
        A = _curve(generators)
        I = curve_ideal(A)
        if (binomial is None) == (monomial is None):
            raise ParseError("give exactly one of --binomial or --monomial")
        if binomial is not None:
            f = parse_binomial(binomial, len(A))
            data = {
                "binomial": format_binomial(f),
                "minimal_generator": is_minimal_generator(I, f),
                "indispensable": indispensable_binomial(I, f) is Verdict.YES,
            }
        else:
            u = parse_monomial(monomial or "", len(A))
            data = {"monomial": format_monomial(u), "indispensable": indispensable_monomial(I, u)}
    if as_json:
        _emit_json(data)
        return
    for key, value in data.items():
        console.print(f"{key}: {_yes(value) if isinstance(value, bool) else value}")


@app.command()
def grading(
    ideal: Path = typer.Option(..., "--ideal", help="Ideal file"),
    as_json: bool = JSON_OPTION,
):
    """The finest grading making the ideal's generators homogeneous."""
    with reported_errors():
        J = load_ideal(ideal)
    assert J.grading is not None
    rows = [list(row) for row in J.grading.matrix]
    weight = list(J.grading.weight) if J.grading.weight else None
    if as_json:
        _emit_json({"n": J.n, "d": J.grading.d, "rows": rows, "positive_weight": weight})
        return
    console.print(f"n = {J.n}, d = {J.grading.d}")
    for row in rows:
        console.print(f"  ({', '.join(str(a) for a in row)})")
    console.print(f"positive: {_yes(weight is not None)}" + (f", weight {tuple(weight)}" if weight else ""))


@app.command(name="saturate")
def saturate_command(ideal: Path = typer.Option(..., "--ideal", help="Ideal file"), as_json: bool = JSON_OPTION):
    """(J : (x_1 ... x_n)^inf) for an ideal file."""
    with reported_errors():
        J = load_ideal(ideal)
        gens = saturate(J).generators
    if as_json:
        _emit_json([format_binomial(f) for f in gens])
        return
    for f in gens:
        console.print(format_binomial(f))


@app.command(name="membership")
def membership_command(
    ideal: Path = typer.Option(..., "--ideal", help="Ideal file"),
    binomial: str = typer.Option(..., "--binomial", "-b", help="Binomial to test"),
    as_json: bool = JSON_OPTION,
):
    """Whether a binomial lies in the ideal of a file."""
    with reported_errors():
        J = load_ideal(ideal)
        f = parse_binomial(binomial, J.n)
        inside = membership(J, f)
    if as_json:
        _emit_json({"binomial": format_binomial(f), "member": inside})
        return
    console.print(f"{format_binomial(f)} in J: {_yes(inside)}")


@app.command(name="edge-ideal")
def edge_ideal_command(
    graph: Optional[Path] = typer.Option(None, "--graph", help="Graph file"),
    all_connected: Optional[int] = typer.Option(
        None, "--all-connected", help="Check every connected graph on at most N vertices"
    ),
    as_json: bool = JSON_OPTION,
):
    """Binomial edge ideals and their unique minimal system."""
    with reported_errors():
        if (graph is None) == (all_connected is None):
            raise ParseError("give exactly one of --graph or --all-connected")
        if all_connected is not None:
            results = verify_all_connected(all_connected)
            failed = [str(G) for G, ok in results.items() if not ok]
            if as_json:
                _emit_json({"graphs": len(results), "failed": failed})
            else:
                console.print(f"{len(results)} connected graphs checked, {len(failed)} without a unique system")
                for name in failed:
                    console.print(f"  [red]{name}[/]")
            if failed:
                raise InvariantViolation(f"{len(failed)} edge ideal(s) without a unique minimal system")
            return
        assert graph is not None
        G = read_graph_file(graph)
        J = edge_ideal(G)
        unique = verify_unique_generation(G)
        contained, equal = lawrence_containment(G)
    data = {
        "n": G.n,
        "edges": [[i + 1, j + 1] for i, j in G.edges],
        "generators": [format_binomial(f, lawrence=True) for f in J.generators],
        "unique": unique,
        "in_lawrence_ideal": contained,
        "equals_lawrence_ideal": equal,
    }
    if as_json:
        _emit_json(data)
        return
    console.print(Panel(str(G), title="Binomial edge ideal"))
    for f in data["generators"]:
        console.print(f"  {f}")
    console.print(f"unique minimal system: {_yes(unique)}")
    console.print(f"equals the Lawrence ideal: {_yes(equal)}")


@app.command()
def sweep(
    min_value: Optional[int] = typer.Option(None, "--min", help="Smallest generator"),
    max_value: Optional[int] = typer.Option(None, "--max", help="Largest generator"),
    count: Optional[int] = typer.Option(None, "--count", "-n", help="Number of quadruples"),
    seed: Optional[int] = typer.Option(None, "--seed", help="PRNG seed"),
    workers: Optional[int] = typer.Option(None, "--workers", "-w", help="Worker processes"),
    out: Optional[Path] = typer.Option(None, "--out", "-o", help="JSON-lines output file"),
    markdown: Optional[Path] = typer.Option(None, "--markdown", help="Also write a Markdown summary"),
    no_circuits: bool = typer.Option(False, "--no-circuits", help="Skip the circuit differential test"),
    as_json: bool = JSON_OPTION,
):
    """Classify random gcd-1 quadruples and run the differential checks."""
    settings = get_settings()
    with reported_errors():
        config = SweepConfig.from_settings(
            settings,
            min_value=min_value,
            max_value=max_value,
            count=count,
            seed=seed,
            workers=workers,
            out_path=out,
            check_circuits=not no_circuits,
        )
        orchestrator = SweepOrchestrator(config, settings)
        orchestrator.run()
        summary = orchestrator.summary()
        if markdown is not None:
            MarkdownWriter(markdown.parent).write_sweep(summary, orchestrator.state.reports, markdown.name)

    if as_json:
        typer.echo(summary.model_dump_json())
    else:
        table = Table(title=f"Sweep of {summary.count} quadruples (seed {summary.seed})")
        table.add_column("Check", style="cyan")
        table.add_column("Failures", justify="right")
        table.add_row("uniqueness criteria", str(summary.uniqueness_disagreements))
        table.add_row("mu(C_A) <= 4", str(summary.mu_ca_violations))
        table.add_row("circuits", str(summary.circuit_disagreements))
        table.add_row("Gorenstein", str(summary.gorenstein_violations))
        table.add_row("other problems", str(len(summary.errors)))
        console.print(table)
        console.print("cases: " + ", ".join(f"{k}: {v}" for k, v in summary.cases.items()))
    if not summary.clean:
        console.print("[red]Error:[/] the sweep found violations")
        raise typer.Exit(EXIT_REJECTED)


@app.command()
def version():
    """Show version information."""
    console.print(f"monocurve v{__version__}")


if __name__ == "__main__":
    app()
