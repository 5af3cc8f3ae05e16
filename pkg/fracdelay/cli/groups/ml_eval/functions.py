"""
fracdelay | cli | groups | ml_eval | functions.py
"""

from typing import Optional, Sequence

import numpy as np
from prettytable import PrettyTable

from fracdelay.core import Beta
from fracdelay.mlf import DecayProfile, L1Norm, decay_profile, eval_kernel_batch, kernel_l1_norm

from ...utils import RunContext

DECAY_CSV = "decay.csv"
L1_CSV = "l1.csv"
DECAY_GRID = (1.0, 2.0, 5.0, 10.0, 20.0, 50.0, 100.0)


def evaluation_times(t_values: Sequence[float], decay: bool) -> np.ndarray:
    """The --t values as given, else the decay grid (with --decay) or t = 1."""
    if t_values:
        return np.asarray(t_values, dtype=float)
    return np.asarray(DECAY_GRID if decay else (1.0,))


def evaluate(run: RunContext, beta: Beta, times: np.ndarray) -> np.ndarray:
    with run.stage(f"kernel beta={beta.value}"):
        return eval_kernel_batch(run.problem(), beta, times, run.contour())


def write_decay(run: RunContext, beta: Beta, times: np.ndarray) -> DecayProfile:
    with run.stage("decay profile"):
        profile = decay_profile(run.problem(), beta, times, run.contour())
    profile.write_csv(run.path(DECAY_CSV))
    return profile


def write_l1(run: RunContext) -> L1Norm:
    with run.stage("l1 norm"):
        norm = kernel_l1_norm(run.problem(), c=run.contour())
    norm.write_csv(run.path(L1_CSV))
    return norm


def kernel_table(
    beta: Beta, times: np.ndarray, values: np.ndarray, profile: Optional[DecayProfile] = None
) -> PrettyTable:
    columns = ["t", f"E(beta={beta.value})"]
    if profile is not None:
        columns.append(f"|E| t^{profile.rate:g}")
    table = PrettyTable(columns)
    for index, (t, value) in enumerate(zip(times, values)):
        row = [f"{t:g}", f"{value:.12e}"]
        if profile is not None:
            row.append(f"{profile.compensated[index]:.6e}")
        table.add_row(row)
    return table
