"""
fracdelay | cli | groups | example51 | functions.py

The reference problem with its four initial functions, solved by ABM.
"""

from typing import List, Tuple

from prettytable import PrettyTable

from fracdelay.core import Trajectory, example51_histories
from fracdelay.solver import solve_abm
from fracdelay.stability import CertifyConfig, StabilityVerdict, certify
from fracdelay.utils.fd_csv import write_csv
from fracdelay.utils.fd_svg import LineChart

from ...utils import RunContext

EXAMPLE51_CSV = "example51.csv"
EXAMPLE51_SVG = "example51.svg"
EXAMPLE51_CSV_HEADER = ("t", "x1", "x2", "x3", "x4")


def solve_example51(run: RunContext) -> List[Trajectory]:
    """One ABM trajectory per initial function, in order phi_1..phi_4."""
    p = run.problem()
    f = run.nonlinearity()
    cfg = run.solve_config()

    trajectories = []
    for index, phi in enumerate(example51_histories(p.tau), start=1):
        with run.stage(f"solve x{index}"):
            trajectories.append(solve_abm(p, f, phi, cfg))
    return trajectories


def write_example51(run: RunContext, trajectories: List[Trajectory]) -> Tuple[str, str]:
    """example51.csv with one column per curve and the matching line chart."""
    times = trajectories[0].times
    rows = [
        (float(t),) + tuple(float(traj.values[k]) for traj in trajectories)
        for k, t in enumerate(times)
    ]
    csv_path = write_csv(run.path(EXAMPLE51_CSV), EXAMPLE51_CSV_HEADER, rows)

    chart = LineChart("x(t) for the four initial functions")
    for index, traj in enumerate(trajectories, start=1):
        chart.add_series(f"x{index}", traj.times, traj.values)
    chart.add_reference_line(0.0)
    svg_path = chart.write(run.path(EXAMPLE51_SVG))
    return csv_path, svg_path


def summary_table(trajectories: List[Trajectory]) -> PrettyTable:
    table = PrettyTable(["Curve", "x(t_end)", "max |x|"])
    for index, traj in enumerate(trajectories, start=1):
        table.add_row((f"x{index}", f"{traj.values[-1]:.6g}", f"{abs(traj.values).max():.6g}"))
    return table


def certify_example51(run: RunContext) -> StabilityVerdict:
    config = CertifyConfig(seed=run.seed, contour=run.contour())
    with run.stage("certify"):
        return certify(run.problem(), run.nonlinearity(), config)
