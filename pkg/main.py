"""RDFC toolkit CLI entrypoint."""
from enum import Enum
from pathlib import Path
from typing import Any, Dict, List, NoReturn, Optional, Sequence, Tuple

import numpy as np
import typer
import yaml
from pydantic import ValidationError
from rich.console import Console
from rich.markup import escape
from rich.table import Table

from rdfc import __version__
from rdfc.blocklength import DiscreteSource, FblConfig, GaussianSource, blocklength_curve
from rdfc.common.errors import CapacityError, MappingAmbiguityError, NumericalError, RdfcError
from rdfc.common.logging import configure_logging
from rdfc.discrete import (
    BscMixtureParams,
    JointPmf,
    MixtureMapping,
    bsc_mixture,
    disambiguate_mapping,
    ldp_audit,
    rate_chain,
    rr_sweep,
    wci_lower_bound_discrete,
)
from rdfc.gaussian import GaussianLdpConfig, ParamRanges, corner_points, sweep as gaussian_sweep, table_ratio
from rdfc.harness import (
    TABLE_COLUMNS,
    ConfigLoader,
    ReferenceTables,
    ReportRenderer,
    RunManifest,
    TableReport,
    atomic_write,
    evaluate_table1,
    evaluate_table2,
    from_nats,
    table_rows,
    to_csv,
    to_json,
    to_nats,
    write_artifact,
)
from rdfc.synthesis import CoordinationScheme, SynthesisConfig, rate_region_check, synthesis_experiment

app = typer.Typer(help="RDFC toolkit - rate-region calculator and channel-synthesis simulator")
console = Console()

EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_NUMERICAL = 3


class OutputFormat(str, Enum):
    table = "table"
    json = "json"
    csv = "csv"


class Units(str, Enum):
    nats = "nats"
    bits = "bits"


FORMAT_OPTION = typer.Option(OutputFormat.table, "--format", help="Output format")
OUT_OPTION = typer.Option(None, "--out", "-o", help="Write results to this file (with a manifest side file)")
UNITS_OPTION = typer.Option(Units.nats, "--units", help="Units of rates and information quantities")
DEBUG_OPTION = typer.Option(False, "--debug", help="Log intermediate quantities")


def _plain(value: Any) -> Any:
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, Path):
        return str(value)
    if isinstance(value, tuple):
        return list(value)
    return value


def _params(local_vars: Dict[str, Any]) -> Dict[str, Any]:
    return {k: _plain(v) for k, v in local_vars.items()}


def _fail(exc: BaseException) -> NoReturn:
    """Report an error and exit with its code."""
    if isinstance(exc, MappingAmbiguityError):
        code = EXIT_MISMATCH
    elif isinstance(exc, (NumericalError, CapacityError)):
        code = EXIT_NUMERICAL
    else:
        code = EXIT_USAGE
    console.print(f"[bold red]Error:[/] {escape(str(exc))}")
    raise typer.Exit(code)


def _int_list(text: str, name: str) -> List[int]:
    try:
        values = [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise typer.BadParameter(f"expected comma-separated integers, got {text!r}", param_hint=name)
    if not values or min(values) < 1:
        raise typer.BadParameter(f"expected positive integers, got {text!r}", param_hint=name)
    return values


def _print_rows(title: str, rows: Sequence[Dict[str, Any]], columns: Sequence[str]) -> None:
    table = Table(title=title)
    for column in columns:
        table.add_column(column, justify="left" if column in ("branch", "flagged") else "right")
    for row in rows:
        cells = []
        for column in columns:
            value = row.get(column)
            cells.append("" if value is None else f"{value:.6g}" if isinstance(value, float) else str(value))
        table.add_row(*cells)
    console.print(table)


def _emit(
    command: str,
    params: Dict[str, Any],
    rows: List[Dict[str, Any]],
    columns: Sequence[str],
    fmt: str,
    out: Optional[Path],
    title: str,
    seed: Optional[int] = None,
    **meta: Any,
) -> None:
    """Print rows in the requested format and optionally save them as an artifact."""
    text = to_json(rows, command=command, **meta) if fmt == OutputFormat.json else to_csv(rows, columns)
    if fmt == OutputFormat.table:
        _print_rows(title, rows, columns)
    elif out is None:
        typer.echo(text, nl=False)
    if out is not None:
        write_artifact(out, text, RunManifest(command=command, params=params, seed=seed))
        if fmt == OutputFormat.table:
            console.print(f"[green]Results saved to {out}[/]")


@app.command("gaussian")
def gaussian(
    sigma_x: float = typer.Option(..., "--sigma-x", help="Standard deviation of the unclipped input"),
    eps: float = typer.Option(..., "--eps", help="Privacy parameter epsilon, 0 < eps <= 1"),
    delta: float = typer.Option(..., "--delta", help="Privacy parameter delta, 0 < delta < 1"),
    clip: float = typer.Option(1.0, "--clip", help="Clipping bound C"),
    literal_pdf: bool = typer.Option(False, "--literal-pdf", help="Integrate the printed output density instead of the exact one"),
    units: Units = UNITS_OPTION,
    fmt: OutputFormat = FORMAT_OPTION,
    out: Optional[Path] = OUT_OPTION,
    debug: bool = DEBUG_OPTION,
):
    """Both corner points for one clipped-Gaussian LDP scenario."""
    params = _params(locals())
    configure_logging(debug)
    try:
        cfg = GaussianLdpConfig(sigma_x=sigma_x, clip_c=clip, epsilon=eps, delta=delta)
        point = corner_points(cfg, literal_pdf=literal_pdf)
        row = {
            "sigma_x": sigma_x,
            "epsilon": eps,
            "delta": delta,
            "clip_c": clip,
            "wci_lower": from_nats(point.wci_lower, units),
            "mutual_info": from_nats(point.mutual_info, units),
            "ratio": table_ratio(point.wci_lower, point.mutual_info),
            "ratio_raw": point.ratio,
        }
        _emit("gaussian", params, [row], list(row), fmt, out, "Gaussian-LDP corner points", units=_plain(units))
    except (RdfcError, ValueError, OSError) as exc:
        _fail(exc)


def _finish_table(
    command: str,
    params: Dict[str, Any],
    report: TableReport,
    fmt: str,
    out: Optional[Path],
    report_path: Optional[Path],
) -> None:
    if fmt == OutputFormat.table:
        names = [c.name for c in report.rows[0].cells]
        table = Table(title=f"{command} reproduction (data version {report.version})")
        table.add_column("Row", style="cyan")
        table.add_column("Inputs")
        for name in names:
            table.add_column(f"{name}\ncomputed / reference", justify="right")
        for row in report.rows:
            cells = []
            for c in row.cells:
                mark = "[green]✓[/]" if c.passed else "[dim]-[/]" if c.passed is None else "[red]✗[/]"
                cells.append(f"{c.computed:.4g} / {c.reference:.4g} {mark}")
            table.add_row(str(row.index), row.label, *cells)
        console.print(table)
        if report.mapping is not None:
            console.print(f"Parameter mapping: p1/p3 swapped = {report.mapping.swap_x}")
        console.print(f"Evaluated in {report.runtime_s:.2f} s")
    if out is not None or fmt != OutputFormat.table:
        # saved tables are written as CSV when the console shows the rich view
        artifact_fmt = OutputFormat.csv if fmt == OutputFormat.table else fmt
        _emit(command, params, table_rows(report), TABLE_COLUMNS, artifact_fmt, out, command)
        if fmt == OutputFormat.table:
            console.print(f"[green]Results saved to {out}[/]")
    if report_path is not None:
        atomic_write(report_path, ReportRenderer().render(report))
        if fmt == OutputFormat.table:
            console.print(f"[green]Report written to {report_path}[/]")
    if not report.passed:
        # json/csv payloads carry the per-cell verdicts; stdout stays parseable
        if fmt == OutputFormat.table:
            console.print(f"[bold red]{report.failures} cell(s) outside tolerance[/]")
        raise typer.Exit(EXIT_MISMATCH)
    if fmt == OutputFormat.table:
        console.print("[green]All cells within tolerance[/]")


@app.command("table1")
def table1(
    report: Optional[Path] = typer.Option(None, "--report", help="Write a markdown reproduction report"),
    literal_pdf: bool = typer.Option(False, "--literal-pdf", help="Integrate the printed output density instead of the exact one"),
    perturb: float = typer.Option(0.0, "--perturb", hidden=True),
    fmt: OutputFormat = FORMAT_OPTION,
    out: Optional[Path] = OUT_OPTION,
    debug: bool = DEBUG_OPTION,
):
    """Reproduce the Gaussian-LDP table (WCI bound, mutual information, ratio)."""
    params = _params(locals())
    configure_logging(debug)
    try:
        result = evaluate_table1(literal_pdf=literal_pdf, perturb=perturb)
        _finish_table("table1", params, result, fmt, out, report)
    except (RdfcError, ValueError, OSError) as exc:
        _fail(exc)


@app.command("table2")
def table2(
    report: Optional[Path] = typer.Option(None, "--report", help="Write a markdown reproduction report"),
    perturb: float = typer.Option(0.0, "--perturb", hidden=True),
    fmt: OutputFormat = FORMAT_OPTION,
    out: Optional[Path] = OUT_OPTION,
    debug: bool = DEBUG_OPTION,
):
    """Reproduce the random-response table (entropies, mutual information, WCI bound)."""
    params = _params(locals())
    configure_logging(debug)
    try:
        result = evaluate_table2(perturb=perturb)
        _finish_table("table2", params, result, fmt, out, report)
    except (RdfcError, ValueError, OSError) as exc:
        _fail(exc)


RR_COLUMNS = ["h_x", "h_y", "h_joint", "mutual_info", "wci_lower", "ceiling", "cond_entropy_y_given_x"]
PARAM_NAMES = ("p1", "p2", "p3", "p4", "c", "d")


def _table_mapping() -> MixtureMapping:
    """The BSC-mixture mapping pinned down by the bundled reference rows."""
    rows = ReferenceTables.load().table2.rows
    return disambiguate_mapping([(r.params, r.mi, r.wci) for r in rows])


@app.command("rr")
def rr(
    p1: Optional[float] = typer.Option(None, "--p1", help="X~-side crossover attached to weight d"),
    p2: Optional[float] = typer.Option(None, "--p2", help="Y-side crossover attached to weight c"),
    p3: Optional[float] = typer.Option(None, "--p3", help="X~-side crossover attached to weight 1 - d"),
    p4: Optional[float] = typer.Option(None, "--p4", help="Y-side crossover attached to weight 1 - c"),
    c: Optional[float] = typer.Option(None, "--c", help="Y-side mixture weight"),
    d: Optional[float] = typer.Option(None, "--d", help="X~-side mixture weight"),
    eps: Optional[float] = typer.Option(None, "--eps", help="Also audit the channel at this epsilon"),
    count: Optional[int] = typer.Option(None, "--count", help="Random search over this many parameter draws instead"),
    seed: int = typer.Option(0, "--seed", help="Master seed of the random search"),
    flagged_only: bool = typer.Option(False, "--flagged-only", help="Keep only draws where the WCI bound exceeds I"),
    units: Units = UNITS_OPTION,
    fmt: OutputFormat = FORMAT_OPTION,
    out: Optional[Path] = OUT_OPTION,
    debug: bool = DEBUG_OPTION,
):
    """Rate chain I <= C <= min{H(X~), H(Y)} for BSC-mixture random response."""
    params = _params(locals())
    configure_logging(debug)
    try:
        scale = lambda v: from_nats(v, units)  # noqa: E731
        mapping = _table_mapping()
        if count is not None:
            rows = []
            for r in rr_sweep(count, seed, mapping):
                if flagged_only and not r.flagged:
                    continue
                chain = r.chain
                row = {"index": r.index, **r.params.model_dump()}
                row.update({k: scale(getattr(chain, k)) for k in RR_COLUMNS})
                row["flagged"] = r.flagged
                rows.append(row)
            columns = ["index", *PARAM_NAMES, *RR_COLUMNS, "flagged"]
            _emit("rr", params, rows, columns, fmt, out, "Random-response search", seed=seed, units=_plain(units))
            return

        values = dict(zip(PARAM_NAMES, (p1, p2, p3, p4, c, d)))
        missing = [f"--{k}" for k, v in values.items() if v is None]
        if missing:
            raise typer.BadParameter(f"missing {', '.join(missing)} (or use --count for a random search)")
        mixture = BscMixtureParams(**values)
        Q = bsc_mixture(mixture, mapping)
        chain = rate_chain(Q)
        bound = wci_lower_bound_discrete(Q)
        row = {**values}
        row.update({k: scale(getattr(chain, k)) for k in RR_COLUMNS})
        row.update({"maxtrace": bound.maxtr, "branch": bound.branch})
        if eps is not None:
            row["ldp_delta"] = ldp_audit(Q, eps)
        _emit("rr", params, [row], list(row), fmt, out, "Random-response rate chain", units=_plain(units))
    except (RdfcError, ValueError, OSError) as exc:
        _fail(exc)


SWEEP_COLUMNS = ["index", "sigma_x", "epsilon", "delta", "wci_lower", "mutual_info", "ratio", "flagged"]


@app.command("sweep")
def sweep(
    count: int = typer.Option(50, "--count", help="Number of random scenarios"),
    seed: int = typer.Option(0, "--seed", help="Master seed; row i uses (seed, i)"),
    sigma_x_range: Tuple[float, float] = typer.Option((0.1, 0.7), "--sigma-x-range", help="Range of sigma_x"),
    eps_range: Tuple[float, float] = typer.Option((0.1, 1.0), "--eps-range", help="Range of epsilon"),
    delta_range: Tuple[float, float] = typer.Option((0.001, 0.01), "--delta-range", help="Range of delta"),
    clip: float = typer.Option(1.0, "--clip", help="Clipping bound C"),
    flagged_only: bool = typer.Option(False, "--flagged-only", help="Keep only rows where the WCI bound exceeds I"),
    units: Units = UNITS_OPTION,
    fmt: OutputFormat = FORMAT_OPTION,
    out: Optional[Path] = OUT_OPTION,
    debug: bool = DEBUG_OPTION,
):
    """Random search over Gaussian-LDP scenarios."""
    params = _params(locals())
    configure_logging(debug)
    try:
        ranges = ParamRanges(sigma_x=sigma_x_range, epsilon=eps_range, delta=delta_range, clip_c=clip)
        rows = []
        for r in gaussian_sweep(ranges, count, seed):
            if flagged_only and not r.flagged:
                continue
            rows.append({
                "index": r.index,
                "sigma_x": r.sigma_x,
                "epsilon": r.epsilon,
                "delta": r.delta,
                "wci_lower": from_nats(r.wci_lower, units),
                "mutual_info": from_nats(r.mutual_info, units),
                "ratio": r.ratio,
                "flagged": r.flagged,
            })
        _emit("sweep", params, rows, SWEEP_COLUMNS, fmt, out, "Gaussian-LDP random search", seed=seed, units=_plain(units))
    except (RdfcError, ValueError, OSError) as exc:
        _fail(exc)


FBL_COLUMNS = ["n", "rate_R", "rho_star", "exponent", "branch", "delta_cap_n", "delta_n"]
INDEPENDENT_PMF = [[0.25, 0.25], [0.25, 0.25]]


@app.command("fbl")
def fbl(
    rate: float = typer.Option(..., "--rate", help="Rate R (per symbol, in --units)"),
    n_list: str = typer.Option("10,20,30,40,50,60,70,80,90,100", "--n-list", help="Comma-separated blocklengths"),
    pmf: Optional[Path] = typer.Option(None, "--pmf", help='Joint pmf file {"k": k, "q": [...]}; default independent bits'),
    sigma_x: Optional[float] = typer.Option(None, "--sigma-x", help="Use the clipped Gaussian mechanism with this sigma_x"),
    clip: float = typer.Option(1.0, "--clip", help="Clipping bound C of the Gaussian mechanism"),
    eps: float = typer.Option(1.0, "--eps", help="LDP epsilon of the synthesized channel"),
    delta: Optional[float] = typer.Option(None, "--delta", help="LDP delta; audited from the pmf when omitted"),
    a: float = typer.Option(2.0, "--a", help="Markov-inequality slack, a > 1"),
    k_const: float = typer.Option(1.0, "--K", help="Constant of the total-variation bound"),
    units: Units = UNITS_OPTION,
    fmt: OutputFormat = FORMAT_OPTION,
    out: Optional[Path] = OUT_OPTION,
    debug: bool = DEBUG_OPTION,
):
    """Finite-blocklength TV bound Delta_n and achieved delta_n over blocklengths."""
    params = _params(locals())
    configure_logging(debug)
    try:
        n_values = _int_list(n_list, "--n-list")
        if sigma_x is not None:
            if delta is None:
                raise typer.BadParameter("--delta is required with --sigma-x")
            src = GaussianSource.from_config(GaussianLdpConfig(sigma_x=sigma_x, clip_c=clip, epsilon=eps, delta=delta))
        else:
            joint = JointPmf.from_dict(ConfigLoader.load_raw(pmf)) if pmf else JointPmf(np.array(INDEPENDENT_PMF))
            src = DiscreteSource(joint)
            if delta is None:
                delta = ldp_audit(joint, eps)
        cfg = FblConfig(rate_R=to_nats(rate, units), n=n_values[0], epsilon=eps, delta=delta, a=a, K=k_const)
        rows = []
        for result in blocklength_curve(src, cfg, n_values):
            row = result.to_dict()
            row["rate_R"] = from_nats(result.rate_R, units)
            row["exponent"] = from_nats(result.exponent, units)
            rows.append(row)
        _emit(
            "fbl", params, rows, FBL_COLUMNS, fmt, out, f"Finite-blocklength bound ({src.kind} source)",
            units=_plain(units), source=src.kind, epsilon=eps, delta=delta,
        )
    except (RdfcError, ValueError, OSError, yaml.YAMLError) as exc:
        _fail(exc)


SYNTH_COLUMNS = ["trial", "n", "R", "R0", "tv"]


@app.command("synth")
def synth(
    scheme: Path = typer.Option(Path("schemes/binary-symmetric.yaml"), "--scheme", help="Coordination scheme (YAML/JSON)"),
    n_list: str = typer.Option("2,4,6,8", "--n-list", help="Comma-separated blocklengths"),
    rate: float = typer.Option(0.6, "--rate", help="Message rate R (per symbol, in --units)"),
    rate0: float = typer.Option(0.3, "--rate0", help="Common-randomness rate R0 (per symbol, in --units)"),
    trials: int = typer.Option(20, "--trials", help="Independent codebooks per blocklength"),
    seed: int = typer.Option(0, "--seed", help="Master seed; trial t uses (seed, t)"),
    units: Units = UNITS_OPTION,
    fmt: OutputFormat = FORMAT_OPTION,
    out: Optional[Path] = OUT_OPTION,
    debug: bool = DEBUG_OPTION,
):
    """Exact channel-synthesis experiment with a likelihood encoder."""
    params = _params(locals())
    configure_logging(debug)
    try:
        n_values = _int_list(n_list, "--n-list")
        coord = ConfigLoader.load(scheme, CoordinationScheme)
        rate_R, rate_R0 = to_nats(rate, units), to_nats(rate0, units)
        region = rate_region_check(coord, rate_R, rate_R0)
        if fmt == OutputFormat.table:
            console.print(
                f"I(X~;U) = {from_nats(region.I_xu, units):.4f}, I(X~,Y;U) = {from_nats(region.I_xyu, units):.4f} {_plain(units)}; "
                f"R >= I(X~;U): {region.ok_R}, R + R0 >= I(X~,Y;U): {region.ok_sum}"
            )

        rows, summary = [], []
        for n in n_values:
            outcome = synthesis_experiment(
                SynthesisConfig(scheme=coord, n=n, rate_R=rate_R, rate_R0=rate_R0, trials=trials, seed=seed)
            )
            for row in outcome.rows():
                row.update({"R": rate, "R0": rate0})
                rows.append(row)
            summary.append({
                "n": n,
                "M": outcome.codebook_sizes[0],
                "M0": outcome.codebook_sizes[1],
                "median_tv": outcome.median_tv,
                "mean_tv": outcome.mean_tv,
                "max_single_letter_tv": max(outcome.single_letter_tv),
                "marginal_error": outcome.marginal_error,
            })

        if fmt == OutputFormat.table:
            _print_rows("Synthesis total variation", summary, list(summary[0]))
            if out is not None:
                _emit("synth", params, rows, SYNTH_COLUMNS, "csv", out, "", seed=seed)
                console.print(f"[green]Results saved to {out}[/]")
        else:
            _emit(
                "synth", params, rows, SYNTH_COLUMNS, fmt, out, "", seed=seed,
                units=_plain(units), region=region._asdict(), summary=summary,
            )
    except (RdfcError, ValueError, OSError, yaml.YAMLError) as exc:
        _fail(exc)


COMMANDS = {
    "gaussian": gaussian,
    "table1": table1,
    "table2": table2,
    "rr": rr,
    "sweep": sweep,
    "fbl": fbl,
    "synth": synth,
}


@app.command("replay")
def replay(
    manifest: Path = typer.Argument(..., help="A <artifact>.manifest.json file"),
    out: Optional[Path] = typer.Option(None, "--out", "-o", help="Write to this path instead of the recorded one"),
):
    """Re-run a command from its run manifest."""
    try:
        run = RunManifest.load(manifest)
    except (ValidationError, OSError) as exc:
        _fail(exc)
    if run.command not in COMMANDS:
        _fail(ValueError(f"manifest names unknown command {run.command!r}"))
    if run.version != __version__:
        console.print(f"[yellow]Manifest was written by version {run.version}, running {__version__}[/]")
    params = dict(run.params)
    if out is not None:
        params["out"] = str(out)
    COMMANDS[run.command](**params)


if __name__ == "__main__":
    app()
