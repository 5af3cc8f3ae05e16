"""
fracdelay | CLI | Entry

The entry point for the CLI.
"""

import click

from fracdelay.version import __version__

from .groups.certify.commands import certify_command
from .groups.example51.commands import example51_command
from .groups.ml_eval.commands import ml_eval_command
from .groups.roots.commands import roots_command
from .groups.solve.commands import solve_command
from .groups.stability_map.commands import stability_map_command


@click.group()
@click.version_option(__version__, prog_name="fracdelay")
def fracdelay_cli():
    """
    Stability analysis of scalar Caputo fractional delay equations.

    Every command takes --config with a TOML file such as:

    \b
        f = "zero"
        [problem]
        a = -3.0
        b = 1.0
        [solver]
        h = 0.015625
    """


fracdelay_cli.add_command(example51_command)  # fracdelay example51
fracdelay_cli.add_command(solve_command)  # fracdelay solve
fracdelay_cli.add_command(ml_eval_command)  # fracdelay ml-eval
fracdelay_cli.add_command(roots_command)  # fracdelay roots
fracdelay_cli.add_command(stability_map_command)  # fracdelay stability-map
fracdelay_cli.add_command(certify_command)  # fracdelay certify
