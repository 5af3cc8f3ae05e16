"""
fracdelay | mlf | decay.py

Power-law decay of the delayed kernels under a <= b < -a: |E_{alpha,1}(t)| t^alpha
and |E_{alpha,alpha}(t)| t^(alpha+1) stay bounded, and E_{alpha,alpha} is integrable.
"""

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

import numpy as np
from scipy import integrate

from fracdelay.core import Beta, ProblemParams
from fracdelay.error import DomainError, ParameterError, TailEstimateFailed
from fracdelay.utils.fd_csv import write_csv
from fracdelay.utils.fd_logger import FracDelayLogger

from .contour import ContourSpec
from .kernel import DEFAULT_CONTOUR, eval_kernel_batch, kernel_value

log = FracDelayLogger()

DECAY_CSV_HEADER = ("t", "kernel_abs", "compensated")
L1_CSV_HEADER = ("value", "error_estimate", "split_point")
TAIL_FIT_POINTS = 16


def _require_criterion(p: ProblemParams, operation: str) -> None:
    if not p.criterion_holds:
        raise ParameterError(
            f"{operation} needs a <= b < -a; got a = {p.a:g}, b = {p.b:g}."
        )


def decay_rate(p: ProblemParams, beta: Beta) -> float:
    """alpha for beta = 1, alpha + 1 for beta = alpha."""
    return p.alpha if beta is Beta.ONE else p.alpha + 1.0


@dataclass(frozen=True)
class DecayProfile:
    """Rows (t, |E(t)|, |E(t)| t^rate)."""

    beta: Beta
    rate: float
    rows: Tuple[Tuple[float, float, float], ...]

    @property
    def compensated(self) -> np.ndarray:
        return np.array([row[2] for row in self.rows])

    @property
    def compensated_max(self) -> float:
        return float(np.max(self.compensated)) if self.rows else 0.0

    @property
    def bounded(self) -> bool:
        """No growth at the tail: the last value is at most twice the running max."""
        values = self.compensated
        if values.size < 2:
            return True
        return bool(values[-1] <= 2.0 * np.max(values[:-1]))

    def write_csv(self, path: str) -> str:
        return write_csv(path, DECAY_CSV_HEADER, self.rows)


@dataclass(frozen=True)
class L1Norm:
    """Integral of |E_{alpha,alpha}| over [0, inf) with a head/tail error estimate."""

    value: float
    error_estimate: float
    split_point: float

    def rows(self):
        return [(self.value, self.error_estimate, self.split_point)]

    def write_csv(self, path: str) -> str:
        return write_csv(path, L1_CSV_HEADER, self.rows())


def decay_profile(
    p: ProblemParams,
    beta: Beta,
    t_grid: Sequence[float],
    c: Optional[ContourSpec] = None,
) -> DecayProfile:
    """Kernel magnitudes and compensated values on t_grid (all t >= 1)."""
    _require_criterion(p, "decay_profile")
    grid = np.asarray(t_grid, dtype=float)
    if grid.size and float(np.min(grid)) < 1.0:
        raise DomainError(f"decay_profile grid must lie in [1, inf); min is {np.min(grid):g}.")

    rate = decay_rate(p, beta)
    magnitudes = np.abs(eval_kernel_batch(p, beta, grid, c))
    rows = tuple(
        (float(t), float(value), float(value * t**rate)) for t, value in zip(grid, magnitudes)
    )
    profile = DecayProfile(beta=beta, rate=rate, rows=rows)
    if not profile.bounded:
        log.warn(f"compensated {beta.value} kernel grows at the end of the grid", "decay")
    return profile


def kernel_l1_norm(
    p: ProblemParams,
    split_point: Optional[float] = None,
    quad_tol: float = 1e-8,
    c: Optional[ContourSpec] = None,
) -> L1Norm:
    """
    Adaptive quadrature of |E_{alpha,alpha}| on [0, split_point], one panel per
    delay interval, plus the tail C_emp split^(-alpha) / alpha from the largest
    compensated value on [split, 4 split].
    """
    _require_criterion(p, "kernel_l1_norm")
    contour = c or DEFAULT_CONTOUR
    split = 50.0 * p.tau if split_point is None else float(split_point)
    if split <= 0:
        raise DomainError(f"split_point = {split} must be positive.")

    def integrand(t):
        return abs(kernel_value(p, p.alpha, t, contour))

    edges = np.append(np.arange(0.0, split, p.tau), split)
    head, head_error = 0.0, 0.0
    for lo, hi in zip(edges[:-1], edges[1:]):
        if hi - lo <= 1e-12 * split:
            continue
        value, error = integrate.quad(integrand, lo, hi, epsabs=quad_tol * 1e-3,
                                      epsrel=quad_tol, limit=200)
        head += value
        head_error += error

    fit_grid = np.geomspace(split, 4.0 * split, TAIL_FIT_POINTS)
    compensated = np.abs(eval_kernel_batch(p, Beta.ALPHA, fit_grid, contour)) * fit_grid ** (
        p.alpha + 1.0
    )
    if not np.all(np.isfinite(compensated)) or compensated[-1] > 2.0 * compensated[0]:
        raise TailEstimateFailed(
            f"compensated kernel on [{split:g}, {4 * split:g}] does not settle: "
            f"{compensated[0]:.3g} -> {compensated[-1]:.3g}."
        )
    scale = split ** (-p.alpha) / p.alpha
    tail = float(np.max(compensated)) * scale
    spread = float(np.max(compensated) - np.min(compensated)) * scale

    log.debug(f"l1 head {head:.6g} (+-{head_error:.2g}), tail {tail:.6g}", "decay")
    return L1Norm(value=head + tail, error_estimate=head_error + spread,
                  split_point=split)


def compensated_max(p: ProblemParams, beta: Beta, t_grid: Sequence[float],
                    c: Optional[ContourSpec] = None) -> float:
    """Largest |E(t)| t^rate on the grid."""
    return decay_profile(p, beta, t_grid, c).compensated_max


def tail_bound(p: ProblemParams, t_from: float, c: Optional[ContourSpec] = None) -> float:
    """C / t_from^alpha bound on |E_{alpha,1}| beyond t_from, C from [t_from, 4 t_from]."""
    grid = np.geomspace(t_from, 4.0 * t_from, TAIL_FIT_POINTS)
    return compensated_max(p, Beta.ONE, grid, c) / t_from**p.alpha
