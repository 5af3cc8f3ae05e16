"""
fracdelay | solver | abm.py

Fractional Adams-Bashforth-Moulton predictor-corrector for

    D^alpha x = a x(t) + b x(t - tau) + f(x(t), x(t - tau)),  x = phi on [-tau, 0].

The whole right-hand side goes through the product-rectangle predictor and the
product-trapezoid corrector; x(t - tau) is read from the grid at index n - m.
"""

import math

import numpy as np

from fracdelay.core import HistoryFunction, Nonlinearity, ProblemParams, Scheme, Trajectory
from fracdelay.error import SolutionBlowup
from fracdelay.utils.fd_logger import FracDelayLogger

from .config import SolveConfig

log = FracDelayLogger()


def _blowup(t: float, value: float, guard: float) -> SolutionBlowup:
    return SolutionBlowup(
        f"|x({t:.6g})| = {abs(value):.3g} exceeds the overflow guard {guard:g}.",
        t=t,
        value=value,
    )


def solve_abm(
    p: ProblemParams, f: Nonlinearity, phi: HistoryFunction, cfg: SolveConfig
) -> Trajectory:
    """
    Trajectory on {-tau, ..., 0, h, ..., N h}; raises SolutionBlowup when a value
    leaves the overflow guard.
    """
    m = cfg.grid_steps(p.tau)
    n_steps = cfg.n_steps
    h, alpha = cfg.h, p.alpha

    x = np.empty(m + n_steps + 1)
    x[: m + 1] = phi.sample(h)
    x0 = x[m]
    rhs = np.empty(n_steps + 1)

    def g(current, delayed):
        return p.a * current + p.b * delayed + float(f(current, delayed))

    rhs[0] = g(x[m], x[0])

    powers = np.arange(n_steps + 2, dtype=float)
    predictor = powers[1:] ** alpha - powers[:-1] ** alpha
    corrector = (
        powers[2:] ** (alpha + 1) + powers[:-2] ** (alpha + 1) - 2.0 * powers[1:-1] ** (alpha + 1)
    )
    p_factor = h**alpha / math.gamma(alpha + 1)
    c_factor = h**alpha / math.gamma(alpha + 2)

    for n in range(n_steps):
        t_next = (n + 1) * h
        # b_{j,n+1} = (n+1-j)^alpha - (n-j)^alpha
        memory_p = float(np.dot(predictor[n::-1], rhs[: n + 1]))
        x_next = x0 + p_factor * memory_p

        # a_{0,n+1} and a_{j,n+1} = c[n - j], j = 1..n
        a_zero = n ** (alpha + 1) - (n - alpha) * (n + 1) ** alpha
        memory_c = a_zero * rhs[0]
        if n > 0:
            memory_c += float(np.dot(corrector[n - 1::-1], rhs[1 : n + 1]))

        delayed = x[n + 1]  # index of t_{n+1} - tau
        for _ in range(cfg.corrector_iters):
            x_next = x0 + c_factor * (g(x_next, delayed) + memory_c)

        if not math.isfinite(x_next) or abs(x_next) > cfg.overflow_guard:
            raise _blowup(t_next, x_next, cfg.overflow_guard)

        x[m + n + 1] = x_next
        rhs[n + 1] = g(x_next, delayed)

    times = (np.arange(m + n_steps + 1) - m) * h
    times[0] = -p.tau
    log.debug(f"ABM solved {n_steps} steps, h = {h:g}, m = {m}", "abm")
    return Trajectory(h=h, m=m, times=times, values=x, scheme=Scheme.ABM)
