"""
fracdelay | CLI | Stability Map | Commands
"""

from collections import Counter

import click
import numpy as np

from ...utils import handle_errors, prepare_run, shared_options
from .functions import classify_grid, verify_cells, write_map


@click.command("stability-map", help="Classify a grid of (a, b) pairs and draw the map.")
@click.option("--a-range", "a_range", type=(float, float), default=(-2.0, 2.0), show_default=True)
@click.option("--b-range", "b_range", type=(float, float), default=(-2.0, 2.0), show_default=True)
@click.option("--grid-n", "grid_n", type=click.IntRange(min=2), default=41, show_default=True,
              help="Grid points per axis.")
@click.option("--verify", is_flag=True, default=False,
              help="Cross-check sampled criterion cells with the root counter.")
@click.option("--verify-samples", "verify_samples", type=click.IntRange(min=1), default=10,
              show_default=True)
@shared_options
@handle_errors
def stability_map_command(**options):
    """
    Writes stability_map.csv (a, b, class) and stability_map.svg. Classes come
    from the coefficient inequalities alone.
    """
    a_lo, a_hi = options["a_range"]
    b_lo, b_hi = options["b_range"]
    if not (a_lo < a_hi and b_lo < b_hi):
        raise click.BadParameter("ranges must satisfy lo < hi.", param_hint="--a-range/--b-range")

    run = prepare_run("stability-map", options)
    base = run.problem()
    a_values = np.linspace(a_lo, a_hi, options["grid_n"])
    b_values = np.linspace(b_lo, b_hi, options["grid_n"])

    with run.stage("classify"):
        cells = classify_grid(base, a_values, b_values)
    csv_path, svg_path = write_map(run, a_values, b_values, cells)

    tally = Counter(cls.value for row in cells for _, _, cls in row)
    for name in sorted(tally):
        click.echo(f"{name}: {tally[name]}")
    click.echo(f"Wrote {csv_path}")
    click.echo(f"Wrote {svg_path}")

    if options["verify"]:
        with run.stage("verify"):
            results = verify_cells(run, base, cells, options["verify_samples"])
        agreeing = sum(1 for *_, agrees in results if agrees)
        click.echo(f"Verified: {agreeing}/{len(results)} criterion cells with zero "
                   "right half-plane count")
        for a, b, count, agrees in results:
            if not agrees:
                click.echo(f"Disagreement at (a, b) = ({a:g}, {b:g}): count {count}")

    run.finish()
