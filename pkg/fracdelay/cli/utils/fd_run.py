"""
fracdelay | cli | utils | fd_run.py

Options shared by every subcommand and the per-run context built from them.
"""

import os
from dataclasses import dataclass
from typing import Any, Dict, Optional

import click

from fracdelay.core import HistoryFunction, Nonlinearity, ProblemParams
from fracdelay.error import ConfigError, ParameterError
from fracdelay.mlf import ContourSpec
from fracdelay.solver import SolveConfig
from fracdelay.utils.fd_debugger import (
    Checkpoints,
    LineTimer,
    clear_debugger_output,
    get_debugger_output,
    timing_table,
)
from fracdelay.utils.fd_logger import LOG_LEVELS, FracDelayLogger

from .fd_config import RUN_SCHEMA, problem_from, resolve_config
from .fd_record import write_run_record

log = FracDelayLogger()

SHARED_OPTIONS = [
    click.option("--alpha", type=float, default=None, help="Fractional order in (0, 1)."),
    click.option("--a", "a", type=float, default=None, help="Coefficient of x(t)."),
    click.option("--b", "b", type=float, default=None, help="Coefficient of x(t - tau)."),
    click.option("--tau", type=float, default=None, help="Delay, positive."),
    click.option("--h", "h", type=float, default=None, help="Step size; must divide tau."),
    click.option("--t-end", "t_end", type=float, default=None, help="Time horizon."),
    click.option("--out-dir", "out_dir", type=click.Path(file_okay=False), default=None,
                 help="Directory for CSV, SVG and run.toml output."),
    click.option("--config", "config_path", type=click.Path(exists=True, dir_okay=False),
                 default=None,
                 help='TOML configuration file; flags override it. Keys sit at the top '
                      'level or in [problem], [nonlinearity], [history], [solver], '
                      '[contour] and [output], e.g. f = "zero" or [problem] a = -3.'),
    click.option("--seed", type=int, default=None, help="Seed for sampled estimates."),
    click.option("--log-level", "log_level", type=click.Choice(LOG_LEVELS, case_sensitive=False),
                 default=None, help="Log level for this run."),
    click.option("--timings", is_flag=True, default=False,
                 help="Print a table of stage durations at the end."),
]

RUN_OPTIONS = ("config_path", "log_level", "timings")


def shared_options(func):
    """Attach the shared flags to a click command."""
    for option in reversed(SHARED_OPTIONS):
        func = option(func)
    return func


@dataclass
class RunContext:
    """Resolved configuration of one CLI invocation."""

    command: str
    config: Dict[str, Any]
    options: Dict[str, Any]
    timings: bool = False

    @property
    def out_dir(self) -> str:
        return self.config["out_dir"]

    @property
    def seed(self) -> int:
        return self.config["seed"]

    def path(self, name: str) -> str:
        os.makedirs(self.out_dir, exist_ok=True)
        return os.path.join(self.out_dir, name)

    def problem(self) -> ProblemParams:
        return problem_from(self.config)

    def nonlinearity(self, name: Optional[str] = None) -> Nonlinearity:
        return Nonlinearity.from_name(name or self.config["f"], self.config["terms"])

    def history(self) -> HistoryFunction:
        tau = self.config["tau"]
        if self.config["history"] == "affine":
            return HistoryFunction.affine(self.config["slope"], self.config["intercept"], tau)
        return HistoryFunction.constant(self.config["c"], tau)

    def solve_config(self) -> SolveConfig:
        cfg = SolveConfig(
            h=self.config["h"],
            t_end=self.config["t_end"],
            corrector_iters=self.config["corrector_iters"],
            picard_tol=self.config["picard_tol"],
            picard_max_iters=self.config["picard_max_iters"],
        )
        cfg.grid_steps(self.config["tau"])
        return cfg

    def contour(self) -> ContourSpec:
        try:
            return ContourSpec(
                mu=self.config["mu"],
                theta=self.config["theta"],
                ray_truncation=self.config["ray_truncation"],
                n_ray=self.config["n_ray"],
                n_arc=self.config["n_arc"],
            )
        except ParameterError as err:
            raise ConfigError(str(err), field="contour") from err

    def stage(self, name: str) -> LineTimer:
        return LineTimer(f"{self.command}: {name}")

    def finish(self) -> None:
        """Write run.toml and, with --timings, print the stage table."""
        write_run_record(self.out_dir, self.command, self.config, self.options)
        if self.timings:
            click.echo(timing_table(get_debugger_output()))
        else:
            clear_debugger_output()
        Checkpoints().set_recording(False)


def prepare_run(command: str, options: Dict[str, Any]) -> RunContext:
    """
    Resolve the configuration of a run from the click options. Options that are
    neither shared nor configuration keys are kept for the run record.
    """
    if options.get("log_level"):
        log.set_level(options["log_level"].upper())

    config = resolve_config(options, options.get("config_path"))
    extra = {
        key: value for key, value in options.items()
        if key not in RUN_SCHEMA and key not in RUN_OPTIONS
    }
    log.debug(f"resolved configuration: {config}", command)
    timings = bool(options.get("timings"))
    Checkpoints().set_recording(timings)
    return RunContext(command=command, config=config, options=extra,
                      timings=timings)
