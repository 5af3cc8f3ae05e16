"""
fracdelay | core | example51.py

The reference problem D^0.5 x = -5 x(t) + 0.5 x(t - 1) + x(t)^2 + x(t - 1)^3
and its four initial functions.
"""

from typing import List

from .history import HistoryFunction
from .nonlinearity import Nonlinearity
from .params import ProblemParams


def example51_problem() -> ProblemParams:
    """alpha = 0.5, a = -5, b = 0.5, tau = 1."""
    return ProblemParams(alpha=0.5, a=-5.0, b=0.5, tau=1.0)


def example51_nonlinearity() -> Nonlinearity:
    """f(x, y) = x^2 + y^3."""
    return Nonlinearity.example51()


def example51_histories(tau: float = 1.0) -> List[HistoryFunction]:
    """phi_1 = 0.6, phi_2 = -0.05t + 0.2, phi_3 = 0.05t + 0.25, phi_4 = 0.1t - 0.15."""
    return [
        HistoryFunction.constant(0.6, tau),
        HistoryFunction.affine(-0.05, 0.2, tau),
        HistoryFunction.affine(0.05, 0.25, tau),
        HistoryFunction.affine(0.1, -0.15, tau),
    ]
