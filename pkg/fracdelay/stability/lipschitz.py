"""
fracdelay | stability | lipschitz.py

Sampled estimates of

    l_f(rho) = sup |f(x, y) - f(x', y')| / max(|x - x'|, |y - y'|)

over pairs in the square |x|, |y|, |x'|, |y'| <= rho. Every estimate is a lower
bound of the true supremum.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

import numpy as np

from fracdelay.core import Nonlinearity
from fracdelay.utils.fd_logger import FracDelayLogger

log = FracDelayLogger()

GRID_N = 33
RANDOM_SAMPLES = 10_000
RANDOM_BLOCK = 1_000
ROW_BATCH = 128


@dataclass(frozen=True)
class LipschitzModulus:
    """Estimated l_f on increasing radii; ell_values is nondecreasing."""

    rho_grid: Tuple[float, ...]
    ell_values: Tuple[float, ...]
    grid_n: int
    samples: int
    seed: int

    def at(self, rho: float) -> float:
        """Estimate at the smallest tabulated radius >= rho."""
        for radius, value in zip(self.rho_grid, self.ell_values):
            if radius >= rho:
                return value
        raise ValueError(f"rho = {rho} exceeds the tabulated radii.")


def _quotients(values_i, points_i, values_j, points_j):
    distance = np.maximum(
        np.abs(points_i[:, None, 0] - points_j[None, :, 0]),
        np.abs(points_i[:, None, 1] - points_j[None, :, 1]),
    )
    change = np.abs(values_i[:, None] - values_j[None, :])
    with np.errstate(divide="ignore", invalid="ignore"):
        quotient = np.where(distance > 0, change / distance, 0.0)
    return np.nan_to_num(quotient, nan=0.0, posinf=np.finfo(float).max)


def _grid_search(f: Nonlinearity, rho: float, grid_n: int, max_workers: Optional[int]):
    axis = np.linspace(-rho, rho, grid_n)
    xs, ys = np.meshgrid(axis, axis, indexing="ij")
    points = np.column_stack([xs.ravel(), ys.ravel()])
    values = np.asarray(f(points[:, 0], points[:, 1]), dtype=float) * np.ones(len(points))

    def batch_max(start):
        stop = min(start + ROW_BATCH, len(points))
        quotient = _quotients(values[start:stop], points[start:stop], values, points)
        flat = int(np.argmax(quotient))
        row, col = divmod(flat, quotient.shape[1])
        return float(quotient[row, col]), start + row, col

    with ThreadPoolExecutor(max_workers=max_workers) as executor:
        results = list(executor.map(batch_max, range(0, len(points), ROW_BATCH)))

    # first batch wins ties, so the maximiser does not depend on thread timing
    best, i, j = max(results, key=lambda item: item[0])
    return best, np.concatenate([points[i], points[j]])


def _random_refinement(f, rho, best, pair, samples, seed, scale):
    rng = np.random.default_rng(seed)
    remaining = samples
    while remaining > 0:
        block = rng.normal(size=(RANDOM_BLOCK, 4)) * scale + pair
        block = np.clip(block, -rho, rho)[:remaining]
        remaining -= RANDOM_BLOCK

        first = np.asarray(f(block[:, 0], block[:, 1]), dtype=float) * np.ones(len(block))
        second = np.asarray(f(block[:, 2], block[:, 3]), dtype=float) * np.ones(len(block))
        distance = np.maximum(np.abs(block[:, 0] - block[:, 2]), np.abs(block[:, 1] - block[:, 3]))
        with np.errstate(divide="ignore", invalid="ignore"):
            quotient = np.where(distance > 0, np.abs(first - second) / distance, 0.0)
        quotient = np.nan_to_num(quotient, nan=0.0)
        index = int(np.argmax(quotient))
        if quotient[index] > best:
            best, pair = float(quotient[index]), block[index].copy()
    return best


def estimate_lipschitz_modulus(
    f: Nonlinearity,
    rho: float,
    samples: int = RANDOM_SAMPLES,
    seed: int = 0,
    grid_n: int = GRID_N,
    max_workers: Optional[int] = None,
) -> float:
    """
    Max difference quotient over all pairs of a grid_n x grid_n grid of the
    square, then over seeded Gaussian perturbations of the best pair. Random
    draws come in fixed blocks, so with a fixed seed more samples never lower
    the estimate.
    """
    if not rho > 0:
        raise ValueError(f"rho = {rho} must be positive.")
    f.check_h1()
    if f.is_zero:
        return 0.0

    best, pair = _grid_search(f, rho, grid_n, max_workers)
    if samples > 0:
        best = _random_refinement(f, rho, best, pair, samples, seed, rho / (grid_n - 1))
    log.trace(f"l_f({rho:.6g}) >= {best:.6g}", "lipschitz")
    return best


def lipschitz_profile(
    f: Nonlinearity,
    rho_grid: Sequence[float],
    samples: int = RANDOM_SAMPLES,
    seed: int = 0,
    grid_n: int = GRID_N,
) -> LipschitzModulus:
    """Estimates on increasing radii, made nondecreasing by a running max."""
    radii = tuple(sorted(float(rho) for rho in rho_grid))
    running, values = 0.0, []
    for rho in radii:
        running = max(running, estimate_lipschitz_modulus(f, rho, samples, seed, grid_n))
        values.append(running)
    return LipschitzModulus(radii, tuple(values), grid_n, samples, seed)
