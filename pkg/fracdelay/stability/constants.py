"""
fracdelay | stability | constants.py

Numerical stand-ins for the kernel constants of the contraction argument:
sup |E_{alpha,1}|, the L1 norm of E_{alpha,alpha}, and one constant C bounding
the compensated decay and the L1 norm together.
"""

from dataclasses import dataclass
from typing import Optional

import numpy as np

from fracdelay.core import Beta, ProblemParams
from fracdelay.error import ParameterError
from fracdelay.mlf import ContourSpec, decay_profile, eval_kernel_batch, kernel_l1_norm, tail_bound
from fracdelay.utils.fd_logger import FracDelayLogger

log = FracDelayLogger()

SUP_POINTS = 1200
DECAY_POINTS = 40


@dataclass(frozen=True)
class Constants:
    """sup_E1, l1_Ealpha and C_empirical, with the pieces C was taken from."""

    sup_E1: float
    l1_Ealpha: float
    C_empirical: float
    l1_error: float
    compensated_one: float
    compensated_alpha: float
    t_sup: float


def sup_kernel_one(
    p: ProblemParams, t_sup: float, points: int = SUP_POINTS, c: Optional[ContourSpec] = None
) -> float:
    """
    max |E_{alpha,1}| over [0, t_sup] (E(0) = 1), refined geometrically near 0,
    and the decay bound C / t_sup^alpha beyond it.
    """
    near = np.geomspace(1e-6, 1.0, points // 6)
    far = np.linspace(1.0, t_sup, points - near.size)
    grid = np.unique(np.concatenate([near, far]))
    values = np.abs(eval_kernel_batch(p, Beta.ONE, grid, c))
    return float(max(1.0, np.max(values), tail_bound(p, t_sup, c)))


def compute_constants(
    p: ProblemParams,
    c: Optional[ContourSpec] = None,
    t_sup: Optional[float] = None,
    split_point: Optional[float] = None,
    sup_points: int = SUP_POINTS,
) -> Constants:
    """
    sup_E1 on a dense grid of [0, 100 max(1, tau)], the L1 norm of E_{alpha,alpha},
    and C_empirical = max(compensated maxima for beta = 1 and beta = alpha, L1 norm).
    """
    if not p.criterion_holds:
        raise ParameterError(
            f"compute_constants needs a <= b < -a; got a = {p.a:g}, b = {p.b:g}."
        )
    t_sup = 100.0 * max(1.0, p.tau) if t_sup is None else float(t_sup)

    sup_e1 = sup_kernel_one(p, t_sup, sup_points, c)
    l1 = kernel_l1_norm(p, split_point=split_point, c=c)

    decay_grid = np.geomspace(1.0, t_sup, DECAY_POINTS)
    comp_one = decay_profile(p, Beta.ONE, decay_grid, c).compensated_max
    comp_alpha = decay_profile(p, Beta.ALPHA, decay_grid, c).compensated_max
    c_empirical = max(comp_one, comp_alpha, l1.value)

    log.debug(
        f"sup_E1 = {sup_e1:.6g}, l1 = {l1.value:.6g}, C = {c_empirical:.6g}", "constants"
    )
    return Constants(
        sup_E1=sup_e1,
        l1_Ealpha=l1.value,
        C_empirical=c_empirical,
        l1_error=l1.error_estimate,
        compensated_one=comp_one,
        compensated_alpha=comp_alpha,
        t_sup=t_sup,
    )
