"""
fracdelay | CLI | Roots | Commands
"""

import click

from fracdelay.charfn import stability_certificate

from ...utils import handle_errors, prepare_run, shared_options
from .functions import build_region, find_roots, right_half_plane_count, roots_table


@click.command("roots", help="Count and locate zeros of Q(s) = s^alpha - a - b e^{-s tau} in a rectangle.")
@click.option("--re-lo", "re_lo", type=float, default=0.0, show_default=True)
@click.option("--re-hi", "re_hi", type=float, default=10.0, show_default=True)
@click.option("--im-lo", "im_lo", type=float, default=-50.0, show_default=True)
@click.option("--im-hi", "im_hi", type=float, default=50.0, show_default=True)
@shared_options
@handle_errors
def roots_command(**options):
    """
    Writes roots.csv (re, im, residual, multiplicity), prints the winding count
    and whether the right half-plane part of the region is free of zeros.
    """
    run = prepare_run("roots", options)
    p = run.problem()
    region = build_region(options["re_lo"], options["re_hi"], options["im_lo"], options["im_hi"])
    report = find_roots(run, region)

    if report.roots:
        click.echo(roots_table(report))
    click.echo(f"Winding count: {report.winding_count}")
    if report.partial:
        click.echo(f"Partial: located {report.located_count} of {report.winding_count}; "
                   f"{len(report.unresolved)} sub-regions unresolved.")

    rhp = right_half_plane_count(p, region, report)
    if rhp is None:
        click.echo("Right half-plane count: region lies in Re s < 0")
    else:
        click.echo(f"Right half-plane count: {rhp} ({'zero' if rhp == 0 else 'nonzero'})")
    click.echo(f"Certificate: {stability_certificate(p).describe()}")

    run.finish()
