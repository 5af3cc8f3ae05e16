"""
fracdelay | cli | groups | solve | functions.py
"""

from typing import List, Optional

from prettytable import PrettyTable

from fracdelay.core import Trajectory
from fracdelay.solver import max_deviation, solve_abm, solve_picard
from fracdelay.utils.fd_csv import write_csv

from ...utils import RunContext

TRAJECTORY_CSV = "trajectory.csv"
TRAJECTORY_CSV_HEADER = ("t", "x", "scheme", "h")
DEVIATION_CSV = "deviation.csv"
DEVIATION_CSV_HEADER = ("metric", "value")


def run_schemes(run: RunContext, compare: bool) -> List[Trajectory]:
    """The configured scheme, or both (ABM first) when comparing."""
    p = run.problem()
    f = run.nonlinearity()
    phi = run.history()
    cfg = run.solve_config()

    schemes = ["abm", "picard"] if compare else [run.config["scheme"]]
    trajectories = []
    for scheme in schemes:
        with run.stage(scheme):
            if scheme == "abm":
                trajectories.append(solve_abm(p, f, phi, cfg))
            else:
                trajectories.append(solve_picard(p, f, phi, cfg, c=run.contour()))
    return trajectories


def write_trajectories(run: RunContext, trajectories: List[Trajectory]) -> str:
    rows = [row for traj in trajectories for row in traj.rows()]
    return write_csv(run.path(TRAJECTORY_CSV), TRAJECTORY_CSV_HEADER, rows)


def write_deviation(run: RunContext, abm: Trajectory, picard: Trajectory) -> float:
    """max |ABM - Picard| over [0, t_end], written to deviation.csv."""
    t_to = min(abm.t_end, picard.t_end)
    deviation = max_deviation(abm, picard, 0.0, t_to)
    rows = [
        ("max_abs_deviation", deviation),
        ("t_from", 0.0),
        ("t_to", t_to),
        ("h", abm.h),
    ]
    write_csv(run.path(DEVIATION_CSV), DEVIATION_CSV_HEADER, rows)
    return deviation


def summary_table(trajectories: List[Trajectory], deviation: Optional[float] = None) -> PrettyTable:
    table = PrettyTable(["Scheme", "Nodes", "x(t_end)", "Iterations"])
    for traj in trajectories:
        iterations = "-" if traj.iterations is None else traj.iterations
        table.add_row((traj.scheme.value, len(traj.times), f"{traj.values[-1]:.6g}", iterations))
    if deviation is not None:
        table.title = f"max |ABM - Picard| = {deviation:.3e}"
    return table
