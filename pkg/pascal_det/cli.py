"""
Command-line interface for pascal_det

Usage:
    pascal-det gen --order 2 --rows 4 --cols 4 --format json
    pascal-det det --order 3 --i0 0 --j0 2 --method condensation
    pascal-det check general --max-i 8 --max-j 8 --max-k 6
    pascal-det bench --order 6 --i0 4 --j0 4 --iters 10

Exit status: 0 when everything passes, 1 for a counterexample or a route
error, 2 for a usage error.
"""

import json
import logging
import sys

import click

from pascal_det.config import Config
from pascal_det.det_arrays import pd_grid
from pascal_det.exact_det import (
    as_matrix,
    det_bareiss,
    det_condensation,
    det_laplace,
    det_with_fallback,
)
from pascal_det.exceptions import DomainError, PascalDetError
from pascal_det.logging_setup import configure_logging
from pascal_det.models import GridIndex, Method
from pascal_det.pascal_core import pascal_window
from pascal_det.reports import (
    FORMATTERS,
    IDENTITIES,
    Benchmark,
    IdentitySweeper,
    format_bench,
    report_to_json,
)

__all__ = [
    "cli",
    "main",
]

logger = logging.getLogger(__name__)

GRID_METHODS = ["direct", "algorithm", "recursive", "condensation", "closed-form"]
DET_METHODS = ["laplace", "bareiss", "condensation", "fallback"]

NonNegative = click.IntRange(min=0)
Positive = click.IntRange(min=1)


def _fail(ctx, error):
    """Report a route error on standard error and exit with status 1"""
    click.echo(f"error: {error}", err=True)
    logger.error(f"{type(error).__name__}: {error}")
    ctx.exit(1)


@click.group()
@click.option("--config", "config_path", type=click.Path(exists=True, dir_okay=False),
              help="Settings file with KEY=value lines.")
@click.option("-v", "--verbose", count=True, help="Log INFO (-v) or DEBUG (-vv) to standard error.")
@click.pass_context
def cli(ctx, config_path, verbose):
    """Pascal determinantal arrays: generate, evaluate, check and benchmark."""
    try:
        config = Config.from_file(config_path) if config_path else Config()
    except DomainError as e:
        raise click.UsageError(str(e))
    level = config.LOG_LEVEL
    if verbose == 1:
        level = "INFO"
    elif verbose >= 2:
        level = "DEBUG"
    configure_logging(level)
    ctx.obj = config


@cli.command()
@click.option("--order", type=NonNegative, default=1, show_default=True, help="Array order k.")
@click.option("--i0", type=NonNegative, default=0, show_default=True, help="Origin row.")
@click.option("--j0", type=NonNegative, default=0, show_default=True, help="Origin column.")
@click.option("--rows", type=Positive, default=5, show_default=True)
@click.option("--cols", type=Positive, default=5, show_default=True)
@click.option("--method", type=click.Choice(GRID_METHODS), default="direct", show_default=True)
@click.option("--format", "fmt", type=click.Choice(sorted(FORMATTERS)), default="table", show_default=True)
@click.pass_context
def gen(ctx, order, i0, j0, rows, cols, method, fmt):
    """Print a window of the determinantal array PD_k."""
    method = Method.parse(method)
    if method is Method.ALGORITHM and (i0, j0) != (0, 0):
        raise click.UsageError("--method algorithm requires --i0 0 --j0 0")
    try:
        grid = pd_grid(order, GridIndex(i0, j0), rows, cols, method)
    except PascalDetError as e:
        _fail(ctx, e)
    click.echo(FORMATTERS[fmt](grid), nl=False)


@cli.command()
@click.option("--order", type=Positive, default=2, show_default=True, help="Window side k.")
@click.option("--i0", type=NonNegative, default=0, show_default=True)
@click.option("--j0", type=NonNegative, default=0, show_default=True)
@click.option("--matrix", "matrix_path", type=click.Path(exists=True, dir_okay=False),
              help="JSON file holding a square matrix; replaces the Pascal window.")
@click.option("--method", type=click.Choice(DET_METHODS), default="bareiss", show_default=True)
@click.pass_context
def det(ctx, order, i0, j0, matrix_path, method):
    """Print the determinant of a Pascal window or of a matrix file."""
    if matrix_path:
        try:
            with open(matrix_path) as f:
                matrix = as_matrix(json.load(f))
        except (ValueError, TypeError, DomainError) as e:
            raise click.UsageError(f"cannot read a square integer matrix from {matrix_path}: {e}")
    else:
        matrix = pascal_window(GridIndex(i0, j0), order, order)

    evaluators = {
        "laplace": lambda m: det_laplace(m, ctx.obj.LAPLACE_CAP),
        "bareiss": det_bareiss,
        "condensation": det_condensation,
        "fallback": det_with_fallback,
    }
    try:
        value = evaluators[method](matrix)
    except PascalDetError as e:
        _fail(ctx, e)
    click.echo(str(value))


@cli.command()
@click.argument("identity", type=click.Choice(IDENTITIES))
@click.option("--max-i", type=NonNegative, help="Largest row index (inclusive).")
@click.option("--max-j", type=NonNegative, help="Largest column index (inclusive).")
@click.option("--max-k", type=NonNegative, help="Largest order (inclusive).")
@click.option("--max-m", type=NonNegative, help="Largest rectangle row extent.")
@click.option("--max-l", type=NonNegative, help="Largest rectangle column extent.")
@click.option("--max-size", type=NonNegative, help="Largest cross size.")
@click.option("--samples", type=NonNegative, help="Random matrices for the condensation sweep.")
@click.option("--seed", type=int, help="Seed for the condensation sweep.")
@click.option("--max-n", type=Positive, help="Largest random matrix side.")
@click.option("--workers", type=Positive, help="Threads used for the sweep.")
@click.pass_context
def check(ctx, identity, workers, **bounds):
    """Sweep an identity and print a JSON CheckReport."""
    sweeper = IdentitySweeper(ctx.obj, workers=workers)
    try:
        report = sweeper.run(identity, **bounds)
    except DomainError as e:
        raise click.UsageError(str(e))
    except PascalDetError as e:
        _fail(ctx, e)
    click.echo(report_to_json(report), nl=False)
    ctx.exit(0 if report.passed else 1)


@cli.command()
@click.option("--order", type=Positive, default=6, show_default=True)
@click.option("--i0", type=NonNegative, default=4, show_default=True)
@click.option("--j0", type=NonNegative, default=4, show_default=True)
@click.option("--iters", type=Positive, help="Repetitions per method (default from config).")
@click.pass_context
def bench(ctx, order, i0, j0, iters):
    """Time the evaluation routes on one entry from cold memo tables."""
    try:
        records = Benchmark(ctx.obj).run(order, GridIndex(i0, j0), iters)
    except PascalDetError as e:
        _fail(ctx, e)
    click.echo(format_bench(records), nl=False)


def main():
    cli(prog_name="pascal-det")


if __name__ == "__main__":
    sys.exit(main())
