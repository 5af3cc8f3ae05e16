"""
fracdelay | solver | config.py
"""

import math
from dataclasses import asdict, dataclass

from fracdelay.core import grid_ratio
from fracdelay.error import ConfigError


@dataclass(frozen=True)
class SolveConfig:
    """Step size, horizon and iteration controls shared by both solvers."""

    h: float
    t_end: float
    corrector_iters: int = 1
    picard_tol: float = 1e-10
    picard_max_iters: int = 100
    overflow_guard: float = 1e12

    def __post_init__(self):
        if not (math.isfinite(self.h) and self.h > 0):
            raise ConfigError(f"h = {self.h} must be positive.", field="h")
        if not (math.isfinite(self.t_end) and self.t_end > 0):
            raise ConfigError(f"t_end = {self.t_end} must be positive.", field="t_end")
        if self.corrector_iters < 1:
            raise ConfigError("corrector_iters must be at least 1.", field="corrector_iters")
        if not self.picard_tol > 0:
            raise ConfigError("picard_tol must be positive.", field="picard_tol")
        if self.picard_max_iters < 1:
            raise ConfigError("picard_max_iters must be at least 1.", field="picard_max_iters")
        if not self.overflow_guard > 0:
            raise ConfigError("overflow_guard must be positive.", field="overflow_guard")

    def grid_steps(self, tau: float) -> int:
        """m with tau = m h; ConfigError when h does not divide tau."""
        return grid_ratio(tau, self.h)

    @property
    def n_steps(self) -> int:
        """Steps N after t = 0, so the last node N h is the first at or beyond t_end."""
        return max(1, int(math.ceil(self.t_end / self.h - 1e-12)))

    def as_dict(self):
        return asdict(self)
