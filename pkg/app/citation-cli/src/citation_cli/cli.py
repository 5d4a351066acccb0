from collections.abc import Iterator
from contextlib import contextmanager
from pathlib import Path
from typing import Annotated, NoReturn

import structlog
import typer
from citation_core.core import CitationError, DatasetFormatError
from citation_core.dataset_reader import read_dataset, write_dataset
from citation_indicators.core import DegenerateTableError, InvalidFractionError
from citation_indicators.display import as_fraction
from citation_indicators.models import DegeneratePolicy
from citation_indicators.percentiles import top_fraction
from citation_perturbation.core import MismatchedIdsError, NegativeResultError, OverlappingSelectorsError, SelectorUnresolvedError, SpecFormatError
from citation_perturbation.mechanism import classify_mechanism
from citation_perturbation.perturbation import apply, diff
from citation_perturbation.spec_reader import read_perturbation_spec

from citation_cli.config import LOG_LEVELS, CliSettings, load_settings
from citation_cli.logging_config import configure_logging
from citation_cli.plotdata import PlotMode, format_plot_data, plot_points
from citation_cli.reporting import build_report_table, compare_reference_sets, render_comparison, render_diff, render_report_table, render_top, write_report_records

log = structlog.get_logger()

EXIT_FAILURE = 1
EXIT_PARSE = 2
EXIT_DEGENERATE = 3
EXIT_PERTURBATION = 4

app = typer.Typer(
    name="p100",
    help="P100 citation-rank indicator and percentile statistics for citation reference sets.",
    no_args_is_help=True,
)

DatasetArgument = Annotated[Path, typer.Argument(exists=True, dir_okay=False, readable=True, help="Dataset CSV with the columns id,citations,authors,year,categories.")]
PrecisionOption = Annotated[int | None, typer.Option("--precision", min=0, help="Decimals of displayed values [default: P100_PRECISION or 1].")]
PolicyOption = Annotated[DegeneratePolicy | None, typer.Option("--degenerate-policy", help="P100 of a set whose papers share one citation count: refuse, or map it to 100.")]
FractionOption = Annotated[str, typer.Option("--fraction", help="Share of the top class, e.g. 0.10 or 1/10.")]


@app.callback()
def main(
    ctx: typer.Context,
    log_json: Annotated[bool, typer.Option("--log-json", help="Write log events to standard error as JSON lines.")] = False,
    log_level: Annotated[str | None, typer.Option("--log-level", help=f"One of {', '.join(LOG_LEVELS)} [default: P100_LOG_LEVEL or warning].")] = None,
):
    """
    Compute P100 rank tables, top-class thresholds and the effect of citation changes.

    Defaults are read from P100_* environment variables and a .env file.
    """
    try:
        settings = load_settings()
    except ValueError as e:
        typer.echo(f"Error: {e}", err=True)
        raise typer.Exit(EXIT_FAILURE) from e
    level = (log_level or settings.log_level).lower()
    if level not in LOG_LEVELS:
        raise typer.BadParameter(f"expected one of {', '.join(LOG_LEVELS)}, got '{log_level}'", param_hint="'--log-level'")
    configure_logging(json_logs=log_json or settings.log_format == "json", level=level)
    ctx.obj = settings


def _fail(error: Exception, exit_code: int, hint: str | None = None) -> NoReturn:
    log.warning("command failed", error=str(error), error_type=type(error).__name__, exit_code=exit_code)
    typer.echo(f"Error: {error}", err=True)
    if hint:
        typer.echo(hint, err=True)
    raise typer.Exit(exit_code) from error


@contextmanager
def _exit_codes() -> Iterator[None]:
    try:
        yield
    except InvalidFractionError as e:
        raise typer.BadParameter(str(e), param_hint="'--fraction'") from e
    except (DatasetFormatError, SpecFormatError) as e:
        _fail(e, EXIT_PARSE)
    except DegenerateTableError as e:
        _fail(e, EXIT_DEGENERATE, hint="Pass --degenerate-policy=top to rank the sole citation count at 100.")
    except (SelectorUnresolvedError, NegativeResultError, OverlappingSelectorsError, MismatchedIdsError) as e:
        _fail(e, EXIT_PERTURBATION)
    except CitationError as e:
        _fail(e, EXIT_FAILURE)


def _settings(ctx: typer.Context) -> CliSettings:
    return ctx.obj if isinstance(ctx.obj, CliSettings) else load_settings()


@app.command()
def compute(
    ctx: typer.Context,
    dataset: DatasetArgument,
    show_cumulated: Annotated[bool, typer.Option("--show-cumulated", help="Add the cumulated percentage of papers up to each count.")] = False,
    show_author_means: Annotated[bool, typer.Option("--show-author-means", help="Add the mean P100 of every author label.")] = False,
    with_gaps: Annotated[bool, typer.Option("--with-gaps", help="List every count between the lowest and highest, unranked ones with empty cells.")] = False,
    precision: PrecisionOption = None,
    degenerate_policy: PolicyOption = None,
    out: Annotated[Path | None, typer.Option("--out", dir_okay=False, help="Also write one JSON record per unique count to this file.")] = None,
):
    """Rank table of a dataset: unique citation counts, paper counts, ranks and P100 values."""
    settings = _settings(ctx)
    digits = settings.precision if precision is None else precision
    with _exit_codes():
        reference_set = read_dataset(dataset)
        report = build_report_table(
            reference_set,
            policy=degenerate_policy or settings.degenerate_policy,
            show_cumulated=show_cumulated,
            show_author_means=show_author_means,
            with_gaps=with_gaps,
        )
    typer.echo(render_report_table(report, digits))
    if out is not None:
        write_report_records(report, out, digits)


@app.command()
def perturb(
    ctx: typer.Context,
    dataset: DatasetArgument,
    spec: Annotated[Path, typer.Argument(exists=True, dir_okay=False, readable=True, help="Perturbation spec, one '<selector> <signed delta>' per line.")],
    precision: PrecisionOption = None,
    degenerate_policy: PolicyOption = None,
    out: Annotated[Path | None, typer.Option("--out", dir_okay=False, help="Also write the perturbed dataset to this CSV file.")] = None,
):
    """Apply citation changes to a dataset and report how unique counts, P100 values and author means move."""
    settings = _settings(ctx)
    digits = settings.precision if precision is None else precision
    with _exit_codes():
        before = read_dataset(dataset)
        after = apply(before, read_perturbation_spec(spec))
        report = diff(before, after, degenerate_policy or settings.degenerate_policy)
    typer.echo(render_diff(report, classify_mechanism(report), digits))
    if out is not None:
        write_dataset(after, out)


@app.command()
def top(
    ctx: typer.Context,
    dataset: DatasetArgument,
    fraction: FractionOption = "0.10",
    precision: PrecisionOption = None,
    degenerate_policy: PolicyOption = None,
):
    """Threshold citation count, members and P100 of the top class of a dataset."""
    settings = _settings(ctx)
    digits = settings.precision if precision is None else precision
    with _exit_codes():
        reference_set = read_dataset(dataset)
        result = top_fraction(reference_set, as_fraction(fraction), degenerate_policy or settings.degenerate_policy)
    typer.echo(render_top(reference_set, result, digits))


@app.command()
def compare_years(
    ctx: typer.Context,
    datasets: Annotated[list[Path], typer.Argument(exists=True, dir_okay=False, readable=True, help="Two or more dataset CSV files, e.g. one per publication year.")],
    fraction: FractionOption = "0.10",
    degenerate_policy: PolicyOption = None,
):
    """Compare the top-class thresholds of several datasets and flag rows whose threshold P100 differ."""
    if len(datasets) < 2:
        raise typer.BadParameter(f"at least two datasets are needed, got {len(datasets)}", param_hint="DATASETS")
    settings = _settings(ctx)
    with _exit_codes():
        reference_sets = [read_dataset(dataset) for dataset in datasets]
        rows = compare_reference_sets(reference_sets, as_fraction(fraction), degenerate_policy or settings.degenerate_policy)
    typer.echo(render_comparison(rows))


@app.command()
def plotdata(
    ctx: typer.Context,
    dataset: DatasetArgument,
    mode: Annotated[PlotMode, typer.Option("--mode", help="x column: every citation count, ranked counts only, or P100 values.")] = PlotMode.BY_UNIQUE_COUNT,
    max_citations: Annotated[int | None, typer.Option("--max-citations", min=0, help="Leave out citation counts above this value.")] = None,
    precision: PrecisionOption = None,
    degenerate_policy: PolicyOption = None,
    out: Annotated[Path | None, typer.Option("--out", dir_okay=False, help="Write the data to this file instead of standard output.")] = None,
):
    """Two-column data of paper counts for plotting."""
    settings = _settings(ctx)
    digits = settings.precision if precision is None else precision
    with _exit_codes():
        reference_set = read_dataset(dataset)
        points = plot_points(reference_set, mode, max_citations=max_citations, policy=degenerate_policy or settings.degenerate_policy)
    text = format_plot_data(points, mode, digits, label=reference_set.label)
    if out is None:
        typer.echo(text, nl=False)
    else:
        out.write_text(text, encoding="utf-8")
        log.info("plot data written", path=str(out), points=len(points))
