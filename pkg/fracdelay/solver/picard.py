"""
fracdelay | solver | picard.py

Fixed-point iteration of the Lyapunov-Perron map

    (T xi)(t) = phi(0) E_{alpha,1}(t) + b H(t) + int_0^t E_{alpha,alpha}(t - s) f(xi(s), xi(s - tau)) ds

on the solver grid. The history term H and the forcing convolution use
product integration against piecewise-linear data, with weights built from the
first and second integrals K1, K2 of E_{alpha,alpha}: a hat of width h whose
centre lies a distance d from the evaluation point has weight
(K2(d + h) - 2 K2(d) + K2(d - h)) / h, with K1 and K2 extended by 0 below 0.
"""

from dataclasses import dataclass
from typing import Optional

import numpy as np

from fracdelay.core import Beta, HistoryFunction, Nonlinearity, ProblemParams, Scheme, Trajectory
from fracdelay.error import PicardDiverged
from fracdelay.mlf import ContourSpec, eval_kernel_batch, integrated_kernel_grid
from fracdelay.utils.fd_debugger import LineTimer
from fracdelay.utils.fd_logger import FracDelayLogger

from .config import SolveConfig

log = FracDelayLogger()


@dataclass(frozen=True)
class KernelCache:
    """E_{alpha,1}(n h) for n = 0..N and K1, K2 at i h for i = 0..N + 1."""

    h: float
    e1: np.ndarray
    k1: np.ndarray
    k2: np.ndarray

    def _at(self, values: np.ndarray, index):
        index = np.asarray(index)
        return np.where(index > 0, values[np.clip(index, 0, values.size - 1)], 0.0)

    def hat_weights(self, distance_steps) -> np.ndarray:
        """Interior hat weights for centre distances i h (zero for i < 0)."""
        i = np.asarray(distance_steps)
        k2 = self.k2
        return (self._at(k2, i + 1) - 2.0 * self._at(k2, i) + self._at(k2, i - 1)) / self.h

    def left_half_weight(self, i: int) -> float:
        """Half hat on [s_j, s_j + h], centre at distance i h."""
        return float(
            self._at(self.k1, i) - (self._at(self.k2, i) - self._at(self.k2, i - 1)) / self.h
        )

    def right_half_weight(self, i: int) -> float:
        """Half hat on [s_j - h, s_j], centre at distance i h."""
        return float(
            (self._at(self.k2, i + 1) - self._at(self.k2, i)) / self.h - self._at(self.k1, i)
        )


def build_kernel_cache(
    p: ProblemParams, h: float, n_steps: int, c: Optional[ContourSpec] = None
) -> KernelCache:
    """Kernel values on the grid; each family is evaluated concurrently over nodes."""
    nodes = np.arange(1, n_steps + 2) * h
    e1 = np.concatenate([[1.0], eval_kernel_batch(p, Beta.ONE, nodes[:-1], c)])
    k1 = np.concatenate([[0.0], integrated_kernel_grid(p, 1, nodes, c)])
    k2 = np.concatenate([[0.0], integrated_kernel_grid(p, 2, nodes, c)])
    return KernelCache(h=h, e1=e1, k1=k1, k2=k2)


def _linear_part(p: ProblemParams, history: np.ndarray, cache: KernelCache, m: int) -> np.ndarray:
    """
    phi(0) E_{alpha,1}(t_n) + b H(t_n) for n = 0..N. The history node
    s_j = -tau + j h sits at distance (n - j) h from t_n - tau.
    """
    n_steps = cache.e1.size - 1
    linear = history[m] * cache.e1
    if p.b == 0:
        return linear

    j = np.arange(1, m)
    memory = np.zeros(n_steps + 1)
    for n in range(1, n_steps + 1):
        total = history[0] * cache.left_half_weight(n)
        total += history[m] * cache.right_half_weight(n - m)
        if m > 1:
            total += float(np.dot(cache.hat_weights(n - j), history[1:m]))
        memory[n] = total
    return linear + p.b * memory


def solve_picard(
    p: ProblemParams,
    f: Nonlinearity,
    phi: HistoryFunction,
    cfg: SolveConfig,
    c: Optional[ContourSpec] = None,
    cache: Optional[KernelCache] = None,
) -> Trajectory:
    """
    Iterate xi_{k+1} = T xi_k from xi_0 = phi(0) until the sup-norm change drops
    below picard_tol; PicardDiverged after picard_max_iters or on overflow.
    """
    m = cfg.grid_steps(p.tau)
    n_steps = cfg.n_steps
    h = cfg.h
    history = phi.sample(h)

    if cache is None:
        with LineTimer(f"picard kernel cache ({n_steps} nodes)"):
            cache = build_kernel_cache(p, h, n_steps, c)
    linear = _linear_part(p, history, cache, m)

    # W_{n,n} = K2(h) / h and interior weights at distance i h; W_{n,0} separately
    conv_weights = cache.hat_weights(np.arange(n_steps))
    left_weights = np.array([cache.left_half_weight(n) for n in range(n_steps + 1)])

    xi = np.full(n_steps + 1, history[m])
    iterations = 0
    change = float("inf")
    while iterations < cfg.picard_max_iters:
        iterations += 1
        extended = np.concatenate([history, xi[1:]])
        forcing = np.asarray(f(xi, extended[: n_steps + 1]), dtype=float) * np.ones(n_steps + 1)

        update = linear.copy()
        if not f.is_zero:
            update[1:] += np.convolve(forcing[1:], conv_weights)[:n_steps]
            update[1:] += forcing[0] * left_weights[1:]
        update[0] = history[m]

        if not np.all(np.isfinite(update)) or np.max(np.abs(update)) > cfg.overflow_guard:
            raise PicardDiverged(
                f"Picard iterate left the overflow guard after {iterations} iterations.",
                iterations=iterations,
                last_change=change,
            )
        change = float(np.max(np.abs(update - xi)))
        xi = update
        if f.is_zero or change < cfg.picard_tol:
            break
    else:
        raise PicardDiverged(
            f"Picard iteration did not settle in {iterations} iterations; last change "
            f"{change:.3g} >= {cfg.picard_tol:g}. The data may lie outside the contraction regime.",
            iterations=iterations,
            last_change=change,
        )

    if iterations > 20:
        log.warn(f"Picard iteration needed {iterations} iterations", "picard")
    else:
        log.debug(f"Picard converged in {iterations} iterations (change {change:.3g})", "picard")

    times = (np.arange(m + n_steps + 1) - m) * h
    times[0] = -p.tau
    values = np.concatenate([history, xi[1:]])
    return Trajectory(h=h, m=m, times=times, values=values, scheme=Scheme.PICARD,
                      iterations=iterations)


def max_deviation(
    traj_a: Trajectory,
    traj_b: Trajectory,
    t_from: Optional[float] = None,
    t_to: Optional[float] = None,
) -> float:
    """max |a - b| over the nodes of traj_a in [t_from, t_to], b interpolated linearly."""
    lo = max(traj_a.t0, traj_b.t0) if t_from is None else t_from
    hi = min(traj_a.t_end, traj_b.t_end) if t_to is None else t_to
    mask = traj_a.window(lo, hi)
    if not np.any(mask):
        raise ValueError(f"no common nodes in [{lo:g}, {hi:g}].")
    return float(np.max(np.abs(traj_a.values[mask] - traj_b.at(traj_a.times[mask]))))
