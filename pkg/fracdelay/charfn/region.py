"""
fracdelay | charfn | region.py
"""

import math
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from fracdelay.core import ProblemParams
from fracdelay.error import RegionError

from .characteristic import imaginary_bound


@dataclass(frozen=True)
class CharfnConfig:
    """Tolerances of the root counter and locator."""

    root_residual_tol: float = 1e-10
    boundary_margin: float = 1e-8
    nodes_per_side: int = 512
    refine_depth: int = 30
    max_depth: int = 40
    newton_max_iter: int = 60
    multiplicity_tol: float = 1e-6
    real_axis_offset: float = 1e-6
    real_scan_points: int = 4097


@dataclass(frozen=True)
class ComplexRegion:
    """
    Closed rectangle [re_lo, re_hi] x [im_lo, im_hi]. kind records whether it was
    built as a truncated right half-plane.
    """

    re_lo: float
    re_hi: float
    im_lo: float
    im_hi: float
    kind: str = "rectangle"

    def __post_init__(self):
        bounds = (self.re_lo, self.re_hi, self.im_lo, self.im_hi)
        if not all(math.isfinite(bound) for bound in bounds):
            raise RegionError(f"Region bounds must be finite, got {bounds}.")
        if not (self.re_lo < self.re_hi and self.im_lo < self.im_hi):
            raise RegionError(f"Region bounds must satisfy lo < hi, got {bounds}.")
        if self.re_lo < 0 and self.im_lo <= 0 <= self.im_hi:
            raise RegionError(
                f"Region {bounds} crosses the branch cut of s^alpha on the negative real axis."
            )

    @classmethod
    def rectangle(cls, re_lo, re_hi, im_lo, im_hi) -> "ComplexRegion":
        """[re_lo, re_hi] x [im_lo, im_hi]."""
        return cls(float(re_lo), float(re_hi), float(im_lo), float(im_hi))

    @classmethod
    def right_half_plane(
        cls, re_hi: float, im_bound: Optional[float] = None, p: Optional[ProblemParams] = None
    ) -> "ComplexRegion":
        """
        [0, re_hi] x [-im_bound, im_bound]. Without im_bound the height is the
        zero-free bound for p, so the rectangle holds every zero with Re s in [0, re_hi].
        """
        if im_bound is None:
            if p is None:
                raise RegionError("right_half_plane needs im_bound or problem parameters.")
            im_bound = imaginary_bound(p, 0.0)
        return cls(0.0, float(re_hi), -float(im_bound), float(im_bound),
                   kind="right_half_plane")

    @property
    def corners(self) -> Tuple[complex, complex, complex, complex]:
        """Counterclockwise from the lower-left corner."""
        return (
            complex(self.re_lo, self.im_lo),
            complex(self.re_hi, self.im_lo),
            complex(self.re_hi, self.im_hi),
            complex(self.re_lo, self.im_hi),
        )

    @property
    def center(self) -> complex:
        return complex(0.5 * (self.re_lo + self.re_hi), 0.5 * (self.im_lo + self.im_hi))

    @property
    def diameter(self) -> float:
        return math.hypot(self.re_hi - self.re_lo, self.im_hi - self.im_lo)

    def contains(self, s: complex, slack: float = 0.0) -> bool:
        """Closed membership with an absolute slack."""
        return (
            self.re_lo - slack <= s.real <= self.re_hi + slack
            and self.im_lo - slack <= s.imag <= self.im_hi + slack
        )

    def boundary_nodes(self, nodes_per_side: int) -> np.ndarray:
        """Positively oriented boundary samples, closed (last node = first)."""
        corners = self.corners
        sides = [
            np.linspace(corners[k], corners[(k + 1) % 4], nodes_per_side, endpoint=False)
            for k in range(4)
        ]
        return np.concatenate(sides + [np.array([corners[0]])])

    def split(self, fraction: float = 0.5) -> Tuple["ComplexRegion", "ComplexRegion"]:
        """Cut across the longer side at the given fraction."""
        if self.re_hi - self.re_lo >= self.im_hi - self.im_lo:
            cut = self.re_lo + fraction * (self.re_hi - self.re_lo)
            return (
                ComplexRegion(self.re_lo, cut, self.im_lo, self.im_hi),
                ComplexRegion(cut, self.re_hi, self.im_lo, self.im_hi),
            )
        cut = self.im_lo + fraction * (self.im_hi - self.im_lo)
        return (
            ComplexRegion(self.re_lo, self.re_hi, self.im_lo, cut),
            ComplexRegion(self.re_lo, self.re_hi, cut, self.im_hi),
        )

    def describe(self) -> str:
        return f"[{self.re_lo:g}, {self.re_hi:g}] x [{self.im_lo:g}, {self.im_hi:g}]"
