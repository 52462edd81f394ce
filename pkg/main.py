import csv
import io
import os
import sys
from functools import wraps
from pathlib import Path

import click
from dotenv import load_dotenv
from loguru import logger
from progress.bar import IncrementalBar
from pydantic import BaseModel

from core.boolean import SignVector
from core.errors import CodingError, DomainError
from core.neuron import Neuron, canonical_bias, delta, is_constant, spectrum
from core.settings import settings
from core.utils import rational_to_str
from network.coded import code_network, joint_layer_distance
from network.simulation import (
    MC_CSV_HEADER,
    SimulationReport,
    exhaustive_single_fault_check,
    monte_carlo_fault_sim,
)
from records.codec import dump_json, load_network, load_neuron, load_solution, solution_to_record
from records.schemas import AnalysisModel, DistanceModel, LayerDistanceModel, VerifyModel
from robustness.criterion import coded_agreement, distance_criterion
from robustness.distance import min_distance
from robustness.oracle import is_r_robust, is_ts_robust
from robustness.report import CSV_HEADER, WitnessModel, build_report, erasure_table
from solutions import build_solution, comparison_kinds
from solutions.bounds import expected_relative_distance

EXIT_ROBUST = 0
EXIT_NOT_ROBUST = 1

FORMATS = click.Choice(["human", "csv", "record"])


def setup_logging(level: str):
    os.makedirs(settings.log_dir, exist_ok=True)
    logger.remove()
    logger.add(sys.stderr, level=level, format="{level} | {message}")
    logger.add(
        settings.log_file,
        level="DEBUG",
        format="{time:YYYY-MM-DD at HH:mm:ss} | {file}:{line} | {level} | {message}",
        backtrace=True,
        diagnose=True,
        rotation="01:00",
        compression="gz",
    )


def exits_on_error(func):
    """Map library errors onto the exit code contract (2 input, 3 budget)."""

    @wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except CodingError as e:
            logger.error(f"{type(e).__name__}: {e}")
            sys.exit(e.exit_code)

    return wrapper


def write_output(text: str, out: str | None):
    if out is None:
        click.echo(text, nl=not text.endswith("\n"))
    else:
        Path(out).write_text(text if text.endswith("\n") else text + "\n")
        logger.info(f"Report written to {out}")


def to_csv(header: list[str], rows: list[list[str]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def emit(models: list, fmt: str, out: str | None, human: list[str]):
    if fmt == "human":
        click.echo("\n".join(human))
        if out is not None:
            write_output("\n".join(dump_json(m) for m in models), out)
    elif fmt == "csv":
        header = list(type(models[0]).model_fields)
        rows = [[_cell(getattr(m, f)) for f in header] for m in models]
        write_output(to_csv(header, rows), out)
    else:
        write_output("\n".join(dump_json(m) for m in models), out)


def _cell(value) -> str:
    if isinstance(value, BaseModel):
        value = value.model_dump()
    if isinstance(value, dict):
        return ";".join(f"{k}={_cell(v)}" for k, v in value.items())
    if isinstance(value, list):
        return " ".join(_cell(v) for v in value)
    return "" if value is None else str(value)


def parse_point(text: str, n: int) -> SignVector:
    try:
        entries = [int(part) for part in text.split(",")]
    except ValueError:
        raise DomainError(f"input '{text}' must be comma-separated +-1 entries")
    x = SignVector.from_signs(entries)
    if x.n != n:
        raise DomainError(f"input '{text}' has {x.n} entries, the neuron reads {n}")
    return x


@click.group()
@click.option("--log-level", default=None, help="Diagnostics level on standard error.")
def cli(log_level):
    """Coded threshold neurons: construction, exact distances and robustness checks."""
    load_dotenv()
    setup_logging(log_level or settings.log_level)


@cli.command()
@click.argument("neuron_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--top", default=5, show_default=True, help="Spectrum coefficients to show.")
@click.option("--format", "fmt", type=FORMATS, default="human")
@click.option("--out", type=click.Path(dir_okay=False), default=None)
@exits_on_error
def analyze(neuron_file, top, fmt, out):
    """n, canonical bias, delta, weight flags and the largest Fourier coefficients."""
    nr = load_neuron(neuron_file)
    d = delta(nr)
    canonical = None
    if nr.is_binary:
        canonical = canonical_bias(nr.theta, nr.n)
    elif nr.is_integer:
        canonical = canonical_bias(nr.theta, int(sum(abs(c) for c in nr.w)))
    top_coefficients = []
    if nr.n <= settings.spectrum_cap:
        top_coefficients = [
            {"subset": list(subset), "value": rational_to_str(value)}
            for subset, value in spectrum(nr).top(top)
        ]
    model = AnalysisModel(
        n=nr.n,
        weights=[rational_to_str(c) for c in nr.w],
        bias=rational_to_str(nr.theta),
        canonical_bias=rational_to_str(canonical),
        delta=rational_to_str(d),
        binary=nr.is_binary,
        integer=nr.is_integer,
        constant=is_constant(nr),
        spectrum_top=top_coefficients,
    )
    human = [
        f"n = {model.n}",
        f"weights = ({', '.join(model.weights)}), bias = {model.bias}",
        f"canonical bias = {model.canonical_bias if canonical is not None else '-'}",
        f"delta = {model.delta}",
        f"binary = {model.binary}, integer = {model.integer}, constant = {model.constant}",
        "spectrum:",
        *(f"  S={tuple(c['subset'])}: {c['value']}" for c in top_coefficients),
    ]
    emit([model], fmt, out, human)


@cli.command()
@click.argument("neuron_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--solution", "kind", default=None,
              help="identity | replication:L | parity | gen-parity | fourier | constant:M [default: parity]")
@click.option("--solution-file", type=click.Path(exists=True, dir_okay=False), default=None,
              help="Solution record to verify instead of building one.")
@click.option("--r", "r", type=int, default=None, help="Target robustness radius.")
@click.option("--t", "t", type=int, default=None, help="Erasures (with --s).")
@click.option("--s", "s", type=int, default=None, help="Errors (with --t).")
@click.option("--budget", type=int, default=None, help="Max evaluated (input, pattern) pairs.")
@click.option("--workers", type=int, default=None)
@click.option("--format", "fmt", type=FORMATS, default="human")
@click.option("--out", type=click.Path(dir_okay=False), default=None)
@exits_on_error
def verify(neuron_file, kind, solution_file, r, t, s, budget, workers, fmt, out):
    """Exit 0 when the coded neuron is robust, 1 with a witness otherwise."""
    if r is None and (t is None or s is None):
        raise click.UsageError("give either --r or both --t and --s")
    if r is not None and (t is not None or s is not None):
        raise click.UsageError("--r excludes --t/--s")
    if budget is not None and budget <= 0:
        raise click.UsageError("--budget must be positive")
    if kind is not None and solution_file is not None:
        raise click.UsageError("--solution excludes --solution-file")
    if solution_file is not None:
        sol, nr = load_solution(solution_file), load_neuron(neuron_file)
        kind = sol.kind
    else:
        kind = kind or "parity"
        sol, nr = build_solution(kind, load_neuron(neuron_file))

    if r is not None:
        verdict = is_r_robust(sol, nr, r, budget, workers)
        target, cost = f"r={r}", r
    else:
        verdict = is_ts_robust(sol, nr, t, s, budget, workers)
        target, cost = f"(t,s)=({t},{s})", t + 2 * s
    criterion = distance_criterion(sol, nr, cost) if cost >= 1 else coded_agreement(sol, nr)
    if r is not None:
        agree = criterion == verdict.robust
    else:
        # robustness at cost t + 2s implies (t,s)-robustness, not conversely
        agree = verdict.robust or not criterion
    if not agree:
        logger.warning(f"{kind} {target}: oracle says {verdict.robust}, criterion says {criterion}")

    witness = None
    if verdict.witness is not None:
        witness = WitnessModel.from_witness(verdict.witness).model_dump()
    model = VerifyModel(
        kind=sol.kind,
        r=cost,
        m=sol.m,
        oracle_robust=verdict.robust,
        criterion_robust=criterion,
        agree=agree,
        witness=witness,
        solution=solution_to_record(sol),
    )
    human = [
        f"{kind} solution, m = {sol.m}, target {target}",
        f"oracle: {'robust' if verdict.robust else 'NOT robust'} ({verdict.checked} patterns)",
        f"criterion: {'robust' if criterion else 'NOT robust'}",
    ]
    if not agree:
        human.append("DISAGREEMENT between oracle and criterion")
    if witness is not None:
        human.append(
            f"witness: x = {tuple(witness['x'])}, erasures = {witness['erasures']}, "
            f"errors = {witness['errors']}"
        )
    emit([model], fmt, out, human)
    sys.exit(EXIT_ROBUST if verdict.robust else EXIT_NOT_ROBUST)


def _distance_model(kind: str, nr: Neuron) -> DistanceModel:
    sol, _ = build_solution(kind, nr)
    d = min_distance(sol)
    return DistanceModel(
        kind=kind,
        m=sol.m,
        d=rational_to_str(d),
        relative=rational_to_str(d / sol.m),
        expected_relative=rational_to_str(expected_relative_distance(sol)),
    )


@cli.command()
@click.argument("neuron_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--solution", "kind", default="parity", show_default=True)
@click.option("--compare", is_flag=True, help="Table across all applicable solution kinds.")
@click.option("--radius", is_flag=True, help="Also compute the exact robustness radius.")
@click.option("--budget", type=int, default=None)
@click.option("--workers", type=int, default=None)
@click.option("--format", "fmt", type=FORMATS, default="human")
@click.option("--out", type=click.Path(dir_okay=False), default=None)
@exits_on_error
def distance(neuron_file, kind, compare, radius, budget, workers, fmt, out):
    """Code length m, exact minimum distance d and relative distance d/m."""
    nr = load_neuron(neuron_file)
    kinds = list(comparison_kinds(nr)) if compare else [kind]
    if radius:
        reports = []
        for each in kinds:
            try:
                sol, coded = build_solution(each, nr)
                reports.append(build_report(sol, coded, budget, workers))
            except DomainError as e:
                if not compare:
                    raise
                logger.warning(f"{each}: skipped, {e}")
        if fmt == "csv":
            write_output(to_csv(CSV_HEADER, [rep.csv_row() for rep in reports]), out)
            return
        human = [f"{'kind':<14}{'m':>5}  {'d':>8}  {'d/m':>8}  {'radius':>6}"] + [
            f"{rep.kind:<14}{rep.m:>5}  {rep.d:>8}  {rep.relative:>8}  {rep.radius:>6}" for rep in reports
        ]
        emit(reports, fmt, out, human)
        return

    models = []
    for each in kinds:
        try:
            models.append(_distance_model(each, nr))
        except DomainError as e:
            if not compare:
                raise
            logger.warning(f"{each}: skipped, {e}")
    human = [f"{'kind':<14}{'m':>5}  {'d':>8}  {'d/m':>8}"] + [
        f"{m.kind:<14}{m.m:>5}  {m.d:>8}  {m.relative:>8}" for m in models
    ]
    emit(models, fmt, out, human)


@cli.command()
@click.argument("network_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--scheme", type=click.Choice(["parity", "identity"]), default="parity", show_default=True)
@click.option("--erasures-per-neuron", type=click.IntRange(min=0), default=1, show_default=True)
@click.option("--erasure-prob", default="0", show_default=True, help="Exact rational, e.g. 1/100.")
@click.option("--error-prob", default="0", show_default=True)
@click.option("--trials", type=int, default=1000, show_default=True, help="0 skips Monte Carlo.")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--budget", type=int, default=None)
@click.option("--workers", type=int, default=None)
@click.option("--format", "fmt", type=FORMATS, default="human")
@click.option("--out", type=click.Path(dir_okay=False), default=None,
              help="Report path; the human format writes CSV there.")
@exits_on_error
def simulate(network_file, scheme, erasures_per_neuron, erasure_prob, error_prob, trials, seed,
             budget, workers, fmt, out):
    """Exhaustive erasure check plus Monte Carlo; exit 0 iff the exhaustive check passes."""
    net = load_network(network_file)
    cnet = code_network(net, scheme)
    check = exhaustive_single_fault_check(cnet, erasures_per_neuron, budget=budget, workers=workers)
    human = fmt == "human"
    if human:
        click.echo(
            f"exhaustive ({scheme}, <= {erasures_per_neuron} erasure(s) per neuron): "
            f"{check.passed}/{check.checked} agree"
        )
        if check.witness is not None:
            click.echo(f"witness: {check.witness.model_dump()}")

    rows = [[
        f"exhaustive:scheme={scheme};erasures_per_neuron={erasures_per_neuron}",
        str(check.checked),
        str(check.passed),
        rational_to_str(check.accuracy),
        str(seed),
    ]]
    report = None
    if trials:
        # the bar shares stdout with the human output only
        bar = IncrementalBar(f"Simulating {trials} trials", max=trials, file=sys.stdout) if human else None
        report = monte_carlo_fault_sim(
            cnet, erasure_prob, error_prob, trials, seed, workers=workers,
            progress=bar.next if bar is not None else None,
        )
        if bar is not None:
            bar.finish()
            click.echo(f"monte carlo: accuracy {report.accuracy} ({report.agreements}/{report.trials})")
        rows.append(report.csv_row())

    if fmt == "record":
        write_output(dump_json(SimulationReport(check=check, monte_carlo=report)), out)
    elif not human or out is not None:
        write_output(to_csv(MC_CSV_HEADER, rows), out)
    sys.exit(EXIT_ROBUST if check.ok else EXIT_NOT_ROBUST)


@cli.command()
@click.argument("network_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--format", "fmt", type=FORMATS, default="human")
@click.option("--out", type=click.Path(dir_okay=False), default=None)
@exits_on_error
def joint(network_file, fmt, out):
    """Per layer, the joint minimum distance of the shared parity code."""
    net = load_network(network_file)
    models = [
        LayerDistanceModel(layer=ld.layer, m=ld.m, d=rational_to_str(ld.d), relative=rational_to_str(ld.relative))
        for ld in joint_layer_distance(net)
    ]
    human = [f"layer {m.layer}: m = {m.m}, d = {m.d}, d/m = {m.relative}" for m in models]
    emit(models, fmt, out, human)


@cli.command()
@click.argument("neuron_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--input", "inputs", multiple=True, help="Comma-separated +-1 input, repeatable.")
@click.option("--solution", "kind", default="parity", show_default=True)
@exits_on_error
def table(neuron_file, inputs, kind):
    """Coded neuron output on each input under every single erasure."""
    sol, nr = build_solution(kind, load_neuron(neuron_file))
    points = [parse_point(text, nr.n) for text in inputs]
    bias = rational_to_str(-sol.mu)
    bias = bias if bias.startswith("-") else f"+{bias}"
    failures = 0
    for x in points:
        for row in erasure_table(sol, nr, x):
            expression = "".join(
                term if i == 0 or term.startswith("-") else f"+{term}"
                for i, term in enumerate(row.terms)
            )
            mark = "ok" if row.output == row.expected else "WRONG"
            failures += row.output != row.expected
            click.echo(
                f"{tuple(row.coded)}  erase {row.erased}:  "
                f"sign({expression}{bias}) = {row.output}  {mark}"
            )
    sys.exit(EXIT_ROBUST if not failures else EXIT_NOT_ROBUST)


if __name__ == "__main__":
    cli()
