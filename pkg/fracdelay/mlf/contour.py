"""
fracdelay | mlf | contour.py

The Hankel-type contour: rays at angle +-theta joined by the arc of radius mu.
"""

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Tuple

import numpy as np

from fracdelay.error import ParameterError


@dataclass(frozen=True)
class ContourSpec:
    """
    Quadrature contour. mu=None picks the arc radius per delay step from the
    saddle scale of the integrand; ray_truncation=None cuts each ray where the
    integrand has fallen below truncation_tol times its running maximum.
    """

    mu: Optional[float] = None
    theta: float = math.pi / 2 + 0.3
    ray_truncation: Optional[float] = None
    n_ray: int = 32
    n_arc: int = 64
    truncation_tol: float = 1e-16
    contour_margin: float = 1e-12
    max_doublings: int = 60

    def __post_init__(self):
        if not math.pi / 2 < self.theta < math.pi:
            raise ParameterError(f"theta = {self.theta} must lie in (pi/2, pi).")
        if self.mu is not None and not (math.isfinite(self.mu) and self.mu > 0):
            raise ParameterError(f"mu = {self.mu} must be positive.")
        if self.ray_truncation is not None and not self.ray_truncation > 0:
            raise ParameterError(f"ray_truncation = {self.ray_truncation} must be positive.")
        if self.n_ray < 2 or self.n_arc < 2:
            raise ParameterError("n_ray and n_arc must be at least 2.")

    @property
    def ray_doublings(self) -> int:
        """
        Panels [2^j, 2^(j+1)] (in units of the arc radius) needed before
        exp(rho cos theta) drops below the truncation tolerance.
        """
        decay = -math.cos(self.theta)
        reach = (math.log(1.0 / self.truncation_tol) + 10.0) / decay
        return min(self.max_doublings, max(1, math.ceil(math.log2(reach)) + 1))


@lru_cache(maxsize=32)
def gauss_legendre(n: int) -> Tuple[np.ndarray, np.ndarray]:
    """Nodes and weights on [-1, 1]."""
    nodes, weights = np.polynomial.legendre.leggauss(n)
    nodes.flags.writeable = False
    weights.flags.writeable = False
    return nodes, weights


def arc_nodes(spec: ContourSpec) -> Tuple[np.ndarray, np.ndarray]:
    """
    Unit-radius arc exp(i phi), phi in [0, theta], with weights of ds / mu.
    """
    x, w = gauss_legendre(spec.n_arc)
    half = spec.theta / 2
    phi = half * (x + 1.0)
    z = np.exp(1j * phi)
    return z, 1j * z * (half * w)


def ray_nodes(spec: ContourSpec, ends: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """
    Ray nodes rho exp(i theta), rho in [1, end_k], per row k, with weights of
    ds / mu. Panels are geometric doublings clipped at end_k; shape (rows, panels, n_ray).
    """
    x, w = gauss_legendre(spec.n_ray)
    panels = max(1, min(spec.max_doublings, int(math.ceil(math.log2(float(np.max(ends)))))))
    edges = 2.0 ** np.arange(panels + 1)
    lo = np.minimum(edges[None, :-1], ends[:, None])
    hi = np.minimum(edges[None, 1:], ends[:, None])
    width = 0.5 * (hi - lo)
    rho = lo[..., None] + width[..., None] * (x + 1.0)
    direction = np.exp(1j * spec.theta)
    return rho * direction, direction * width[..., None] * w
