"""
fracdelay | CLI | ML Eval | Commands
"""

import click

from fracdelay.core import Beta

from ...utils import handle_errors, prepare_run, shared_options
from .functions import evaluate, evaluation_times, kernel_table, write_decay, write_l1


@click.command("ml-eval", help="Evaluate the delayed Mittag-Leffler kernel E^{a,b,tau}_{alpha,beta}.")
@click.option("--beta", "beta", type=click.Choice([beta.value for beta in Beta]), default="one",
              help="Second index: 'one' (beta = 1) or 'alpha' (beta = alpha).")
@click.option("--t", "t_values", type=float, multiple=True, help="Evaluation time; repeatable.")
@click.option("--decay", is_flag=True, default=False,
              help="Also print compensated values and write decay.csv (needs t >= 1).")
@click.option("--l1", is_flag=True, default=False,
              help="Estimate the L1 norm of E_{alpha,alpha} and write l1.csv.")
@click.option("--mu", type=float, default=None, help="Fixed arc radius of the contour.")
@click.option("--theta", type=float, default=None, help="Ray angle of the contour, in (pi/2, pi).")
@shared_options
@handle_errors
def ml_eval_command(**options):
    """
    Prints t and E(t); with --decay the compensated values |E(t)| t^rate too.
    """
    run = prepare_run("ml-eval", options)
    beta = Beta(options["beta"])
    times = evaluation_times(options["t_values"], options["decay"])
    values = evaluate(run, beta, times)

    profile = write_decay(run, beta, times) if options["decay"] else None
    click.echo(kernel_table(beta, times, values, profile))
    if profile is not None and not profile.bounded:
        click.echo("Compensated values grow at the end of the grid.")

    if options["l1"]:
        norm = write_l1(run)
        click.echo(f"L1 norm of E_alpha,alpha: {norm.value:.10g} (error estimate {norm.error_estimate:.3g})")

    run.finish()
