"""
fracdelay | CLI | Solve | Commands
"""

import click

from fracdelay.core.nonlinearity import BUILTIN_NAMES

from ...utils import handle_errors, prepare_run, shared_options
from ...utils.fd_config import HISTORY_KINDS, SCHEMES
from .functions import run_schemes, summary_table, write_deviation, write_trajectories


@click.command("solve", help="Solve one initial value problem and write trajectory.csv.")
@click.option("--scheme", type=click.Choice(SCHEMES), default=None, help="Solver to use.")
@click.option("--compare", is_flag=True, default=False,
              help="Run both schemes and write deviation.csv.")
@click.option("--f", "f", type=click.Choice(BUILTIN_NAMES), default=None, help="Nonlinearity.")
@click.option("--term", "terms", type=(float, int, int), multiple=True,
              help="Polynomial term c i j meaning c * x^i * y^j; repeatable.")
@click.option("--history", type=click.Choice(HISTORY_KINDS), default=None,
              help="Initial function on [-tau, 0].")
@click.option("--c", "c", type=float, default=None, help="Value of a constant history.")
@click.option("--slope", type=float, default=None, help="Slope of an affine history.")
@click.option("--intercept", type=float, default=None, help="phi(0) of an affine history.")
@shared_options
@handle_errors
def solve_command(**options):
    """
    Writes trajectory.csv (t, x, scheme, h); with --compare both schemes go
    into it and the max deviation into deviation.csv.
    """
    run = prepare_run("solve", options)
    trajectories = run_schemes(run, options["compare"])
    path = write_trajectories(run, trajectories)

    deviation = None
    if options["compare"]:
        deviation = write_deviation(run, *trajectories)

    click.echo(summary_table(trajectories, deviation))
    click.echo(f"Wrote {path}")
    run.finish()
