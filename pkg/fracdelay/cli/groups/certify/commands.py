"""
fracdelay | CLI | Certify | Commands
"""

import click

from fracdelay.core.nonlinearity import BUILTIN_NAMES
from fracdelay.stability import RANDOM_SAMPLES

from ...utils import handle_errors, prepare_run, shared_options
from .functions import run_attractivity, run_certify


@click.command("certify", help="Certify asymptotic stability of the zero solution.")
@click.option("--f", "f", type=click.Choice(BUILTIN_NAMES), default=None, help="Nonlinearity.")
@click.option("--term", "terms", type=(float, int, int), multiple=True,
              help="Polynomial term c i j meaning c * x^i * y^j; repeatable.")
@click.option("--samples", type=click.IntRange(min=0), default=RANDOM_SAMPLES, show_default=True,
              help="Random pairs for the Lipschitz estimates.")
@click.option("--attractivity", type=click.IntRange(min=0), default=0, show_default=True,
              help="When certified, solve from this many random histories inside the delta-ball.")
@shared_options
@handle_errors
def certify_command(**options):
    """
    Prints the verdict record and writes verdict.txt; with --attractivity also
    attractivity.csv.
    """
    run = prepare_run("certify", options)
    verdict = run_certify(run, options["samples"])
    click.echo(verdict.record(), nl=False)

    if options["attractivity"] and verdict.certified:
        report = run_attractivity(run, verdict.delta, options["attractivity"])
        decayed = sum(1 for entry in report.entries if entry.decayed)
        click.echo(f"Attractivity: {decayed}/{len(report.entries)} histories decayed "
                   f"below {report.tol:g} after t = {report.t_tail:g}")

    run.finish()
