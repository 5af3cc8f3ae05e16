"""
fracdelay | CLI | Example51 | Commands
"""

import click

from ...utils import handle_errors, prepare_run, shared_options
from .functions import certify_example51, solve_example51, summary_table, write_example51


@click.command("example51", help="Reproduce the reference example: four curves, CSV, SVG and verdict.")
@click.option("--f", "f", type=click.Choice(["zero", "example51"]), default=None,
              help="Nonlinearity; 'zero' solves the linear part only.")
@click.option("--no-certify", "no_certify", is_flag=True, default=False,
              help="Skip the stability certificate.")
@shared_options
@handle_errors
def example51_command(**options):
    """
    Solves the four trajectories (ABM), writes example51.csv and example51.svg,
    then prints the certify verdict.
    """
    run = prepare_run("example51", options)
    trajectories = solve_example51(run)
    csv_path, svg_path = write_example51(run, trajectories)

    click.echo(summary_table(trajectories))
    click.echo(f"Wrote {csv_path}")
    click.echo(f"Wrote {svg_path}")

    if not options["no_certify"]:
        verdict = certify_example51(run)
        click.echo(verdict.record(), nl=False)

    run.finish()
