"""
fracdelay | core | history.py

Initial functions on [-tau, 0] and their zero extension to t > 0.
"""

from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence, Tuple

import numpy as np

from fracdelay.error import ConfigError, DomainError

GRID_TOL = 1e-12


def grid_ratio(length: float, step: float) -> int:
    """
    Integer n with length = n * step, or ConfigError when step does not divide length.
    """
    if step <= 0:
        raise ConfigError(f"step {step} must be positive.", field="h")
    ratio = length / step
    n = int(round(ratio))
    if n < 1 or abs(ratio - n) > GRID_TOL * max(1.0, ratio):
        raise ConfigError(
            f"step {step} does not divide {length} (ratio {ratio}).", field="h"
        )
    return n


@dataclass(frozen=True)
class HistoryFunction:
    """
    phi on [-tau, 0], given either as a closure or as a piecewise-linear table
    on nodes -tau + k*h_phi, k = 0..n.
    """

    tau: float
    func: Optional[Callable] = field(default=None, compare=False)
    table: Optional[Tuple[float, ...]] = None
    name: str = "custom"

    def __post_init__(self):
        if self.tau <= 0:
            raise DomainError(f"tau must be positive, got {self.tau}.")
        if (self.func is None) == (self.table is None):
            raise ValueError("Provide exactly one of func or table.")
        if self.table is not None:
            if len(self.table) < 2:
                raise ValueError("A history table needs at least two nodes.")
            if not np.all(np.isfinite(self.table)):
                raise DomainError("History table values must be finite.")

    # ------------------------------ Constructors ------------------------------ #
    @classmethod
    def constant(cls, value: float, tau: float) -> "HistoryFunction":
        """phi(t) = value."""
        value = float(value)
        return cls(tau=tau, func=lambda t: np.full_like(t, value, dtype=float),
                   name=f"const {value:g}")

    @classmethod
    def affine(cls, slope: float, intercept: float, tau: float) -> "HistoryFunction":
        """phi(t) = slope * t + intercept."""
        slope, intercept = float(slope), float(intercept)
        return cls(tau=tau, func=lambda t: slope * t + intercept,
                   name=f"affine {slope:g}t{intercept:+g}")

    @classmethod
    def from_table(cls, values: Sequence[float], tau: float) -> "HistoryFunction":
        """Piecewise-linear history through equally spaced values on [-tau, 0]."""
        return cls(tau=tau, table=tuple(float(v) for v in values), name="table")

    # -------------------------------- Queries --------------------------------- #
    @property
    def spacing(self) -> Optional[float]:
        """Node spacing of a table history, None for closures."""
        if self.table is None:
            return None
        return self.tau / (len(self.table) - 1)

    def __call__(self, t):
        t_arr = np.asarray(t, dtype=float)
        if np.any(t_arr < -self.tau * (1 + GRID_TOL)) or np.any(t_arr > self.tau * GRID_TOL):
            raise DomainError(f"History queried outside [-{self.tau}, 0].")

        if self.table is not None:
            nodes = np.linspace(-self.tau, 0.0, len(self.table))
            result = np.interp(t_arr, nodes, np.asarray(self.table))
        else:
            result = np.asarray(self.func(t_arr), dtype=float)
            if result.shape != t_arr.shape:
                result = np.vectorize(lambda s: float(self.func(s)), otypes=[float])(t_arr)

        if not np.all(np.isfinite(result)):
            raise DomainError(f"History {self.name} is not finite on [-{self.tau}, 0].")
        return result if result.ndim else float(result)

    def sample(self, h: float) -> np.ndarray:
        """Values at the solver nodes -tau, -tau + h, ..., 0."""
        m = grid_ratio(self.tau, h)
        if self.table is not None:
            grid_ratio(self.spacing, h)
        nodes = (np.arange(m + 1) - m) * h
        nodes[0] = -self.tau
        return np.asarray(self(nodes), dtype=float)

    def sup_norm(self, resolution: int = 4097) -> float:
        """max |phi| on [-tau, 0] (exact for tables and affine closures)."""
        if self.table is not None:
            return float(np.max(np.abs(self.table)))
        nodes = np.linspace(-self.tau, 0.0, resolution)
        return float(np.max(np.abs(self(nodes))))

    def scaled(self, factor: float) -> "HistoryFunction":
        """factor * phi."""
        factor = float(factor)
        if self.table is not None:
            return HistoryFunction.from_table([factor * v for v in self.table], self.tau)
        func = self.func
        return HistoryFunction(tau=self.tau, func=lambda t: factor * np.asarray(func(t)),
                               name=f"{factor:g}*({self.name})")


def extend_history(phi: HistoryFunction, t: float) -> float:
    """
    Zero extension of phi: phi(t) on [-tau, 0], 0 for t > 0.
    """
    if t < -phi.tau:
        raise DomainError(f"t = {t} lies before the history interval [-{phi.tau}, 0].")
    if t > 0:
        return 0.0
    return float(phi(t))
