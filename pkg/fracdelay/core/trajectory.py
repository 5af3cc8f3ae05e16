"""
fracdelay | core | trajectory.py
"""

from dataclasses import dataclass
from enum import Enum
from typing import Optional

import numpy as np


class Scheme(Enum):
    """Which method produced a trajectory."""

    ABM = "ABM"
    PICARD = "Picard"
    VARCONST = "VarConst"


@dataclass(frozen=True)
class Trajectory:
    """
    Samples x_k = x(t_k) on the uniform grid t_k = (k - m) h, k = 0..m + N,
    so the first m + 1 samples are the history on [-tau, 0].
    """

    h: float
    m: int
    times: np.ndarray
    values: np.ndarray
    scheme: Scheme
    iterations: Optional[int] = None

    def __post_init__(self):
        times = np.array(self.times, dtype=float)
        values = np.array(self.values, dtype=float)
        if times.shape != values.shape or times.ndim != 1:
            raise ValueError("times and values must be 1-D arrays of equal length.")
        times.setflags(write=False)
        values.setflags(write=False)
        object.__setattr__(self, "times", times)
        object.__setattr__(self, "values", values)

    @property
    def t0(self) -> float:
        """First grid node, -tau."""
        return float(self.times[0])

    @property
    def t_end(self) -> float:
        """Last grid node."""
        return float(self.times[-1])

    @property
    def history_values(self) -> np.ndarray:
        """Samples on [-tau, 0]."""
        return self.values[: self.m + 1]

    def at(self, t):
        """Piecewise-linear evaluation inside the sampled range."""
        return np.interp(t, self.times, self.values)

    def tail_sup(self, t_from: float) -> float:
        """sup |x(t)| over grid nodes with t >= t_from."""
        mask = self.times >= t_from - 1e-12 * max(1.0, abs(t_from))
        if not np.any(mask):
            return float("nan")
        return float(np.max(np.abs(self.values[mask])))

    def window(self, t_from: float, t_to: float) -> np.ndarray:
        """Boolean mask of nodes in [t_from, t_to]."""
        slack = 1e-12 * max(1.0, abs(t_to))
        return (self.times >= t_from - slack) & (self.times <= t_to + slack)

    def rows(self):
        """CSV rows (t, x, scheme, h) in increasing t."""
        return [
            (float(t), float(x), self.scheme.value, float(self.h))
            for t, x in zip(self.times, self.values)
        ]
