"""
fracdelay | charfn | locating.py

Root locating by recursive subdivision on argument-principle counts, Newton
polishing, and conjugate mirroring of the upper half.
"""

from dataclasses import dataclass, field
from typing import List, Optional, Tuple

import numpy as np
from scipy import optimize

from fracdelay.core import ProblemParams
from fracdelay.error import BoundaryDegenerate
from fracdelay.utils.fd_csv import write_csv
from fracdelay.utils.fd_logger import FracDelayLogger

from .characteristic import eval_Q, eval_Q_derivative
from .counting import DEFAULT_CONFIG, count_roots
from .region import CharfnConfig, ComplexRegion

log = FracDelayLogger()

ROOT_CSV_HEADER = ("re", "im", "residual", "multiplicity")
SPLIT_FRACTIONS = (0.5, 0.4871, 0.5383, 0.4417)


@dataclass(frozen=True)
class Root:
    """A polished zero of Q."""

    value: complex
    residual: float
    multiplicity: int = 1


@dataclass(frozen=True)
class RootReport:
    """Zeros of Q in a region, backed by the winding count."""

    region: ComplexRegion
    winding_count: int
    roots: Tuple[Root, ...] = ()
    partial: bool = False
    unresolved: Tuple[ComplexRegion, ...] = field(default=())

    @property
    def located_count(self) -> int:
        """Located zeros counted with multiplicity."""
        return sum(root.multiplicity for root in self.roots)

    def rows(self):
        """CSV rows ordered by (re, im)."""
        ordered = sorted(self.roots, key=lambda root: (root.value.real, root.value.imag))
        return [
            (root.value.real, root.value.imag, root.residual, root.multiplicity)
            for root in ordered
        ]

    def write_csv(self, path: str) -> str:
        """Write columns re, im, residual, multiplicity."""
        return write_csv(path, ROOT_CSV_HEADER, self.rows())


# ---------------------------------------------------------------------------- #
#                                   Polishing                                  #
# ---------------------------------------------------------------------------- #
def estimate_multiplicity(p: ProblemParams, s: complex, config: CharfnConfig) -> int:
    """
    Order of the first non-vanishing derivative of Q at s. Q, Q', Q'', Q'''
    cannot vanish together away from 0, so estimates above 3 are reported.
    """
    if s == 0:
        return 1
    scale = max(1.0, abs(s) ** p.alpha, abs(p.a), abs(p.b * np.exp(-s * p.tau)))
    for order in (1, 2, 3):
        if abs(eval_Q_derivative(p, s, order)) > config.multiplicity_tol * scale:
            return order
    log.warn(f"multiplicity estimate above 3 at s = {s:.6g}; Q, Q', Q'', Q''' all "
             "vanish numerically, which cannot happen away from 0", "roots")
    return 4


def newton_polish(
    p: ProblemParams, start: complex, config: CharfnConfig, multiplicity: int = 1
) -> Optional[complex]:
    """Newton iteration (scaled by the multiplicity); None when it does not converge."""
    s = complex(start)
    for _ in range(config.newton_max_iter):
        if s == 0:
            return None
        q_value = eval_Q(p, s)
        if abs(q_value) <= 0.01 * config.root_residual_tol:
            return s
        derivative = eval_Q_derivative(p, s, 1)
        if derivative == 0 or not np.isfinite(derivative):
            return None
        step = multiplicity * q_value / derivative
        s -= step
        if abs(step) <= 1e-15 * max(1.0, abs(s)):
            break
    if np.isfinite(s) and abs(eval_Q(p, s)) <= config.root_residual_tol:
        return s
    return None


def _real_roots(p: ProblemParams, lo: float, hi: float, config: CharfnConfig) -> List[Root]:
    """Sign changes of the real-valued Q on [lo, hi] within the nonnegative axis."""
    if hi <= lo:
        return []
    grid = np.linspace(lo, hi, config.real_scan_points)
    values = eval_Q(p, grid.astype(complex)).real

    def q_real(r):
        return eval_Q(p, complex(r)).real

    found = []
    for index in range(len(grid)):
        if values[index] == 0:
            found.append(float(grid[index]))
        elif index + 1 < len(grid) and values[index] * values[index + 1] < 0:
            found.append(optimize.brentq(q_real, grid[index], grid[index + 1],
                                         xtol=1e-15, maxiter=200))

    roots = []
    for value in found:
        s = complex(value, 0.0)
        roots.append(Root(s, abs(eval_Q(p, s)), estimate_multiplicity(p, s, config)))
    return roots


# ---------------------------------------------------------------------------- #
#                                  Subdivision                                 #
# ---------------------------------------------------------------------------- #
def _count_with_retries(p, region, config) -> Optional[int]:
    try:
        return count_roots(p, region, config.nodes_per_side, config)
    except BoundaryDegenerate as err:
        log.debug(f"count failed on {region.describe()}: {err}", "roots")
        return None


def _subdivide(p, region, config, depth, found, unresolved, known=None):
    count = known if known is not None else _count_with_retries(p, region, config)
    if count is None:
        unresolved.append(region)
        return
    if count == 0:
        return

    if count == 1 or region.diameter < 1e-7:
        root = newton_polish(p, region.center, config, multiplicity=count)
        if root is not None and region.contains(root, slack=1e-9 * max(1.0, abs(root))):
            multiplicity = count if count > 1 else estimate_multiplicity(p, root, config)
            found.append(Root(root, abs(eval_Q(p, root)), multiplicity))
            return

    if depth >= config.max_depth:
        unresolved.append(region)
        return

    # A split line through a zero is degenerate; move the cut and try again.
    for fraction in SPLIT_FRACTIONS:
        children = region.split(fraction)
        counts = [_count_with_retries(p, child, config) for child in children]
        if all(child_count is not None for child_count in counts):
            break
    for child, child_count in zip(children, counts):
        _subdivide(p, child, config, depth + 1, found, unresolved, known=child_count)


def locate_roots(
    p: ProblemParams, region: ComplexRegion, config: CharfnConfig = DEFAULT_CONFIG
) -> RootReport:
    """
    Zeros of Q in region. Real zeros come from a sign scan of Q on the
    nonnegative axis; the part of the region above the axis is searched and its
    zeros are mirrored, since Q(conj s) = conj Q(s).
    """
    total = count_roots(p, region, config.nodes_per_side, config)
    if total == 0:
        return RootReport(region=region, winding_count=0)

    roots: List[Root] = []
    if region.im_lo <= 0 <= region.im_hi:
        roots.extend(_real_roots(p, max(region.re_lo, 0.0), region.re_hi, config))

    upper_found: List[Root] = []
    unresolved: List[ComplexRegion] = []
    top = max(region.im_hi, -region.im_lo)
    offset = config.real_axis_offset * max(1.0, top)
    if region.im_lo >= offset:
        bottom = region.im_lo
    elif region.im_hi <= -offset:
        bottom, top = -region.im_hi, -region.im_lo
    else:
        bottom = offset
    if top > bottom:
        upper = ComplexRegion.rectangle(region.re_lo, region.re_hi, bottom, top)
        _subdivide(p, upper, config, 0, upper_found, unresolved)

    for root in upper_found:
        for candidate in (root.value, root.value.conjugate()):
            if region.contains(candidate):
                roots.append(Root(candidate, root.residual, root.multiplicity))

    report = RootReport(
        region=region,
        winding_count=total,
        roots=tuple(roots),
        partial=bool(unresolved),
        unresolved=tuple(unresolved),
    )
    if report.located_count != total:
        log.warn(
            f"located {report.located_count} of {total} zeros in {region.describe()}",
            "roots",
        )
        report = RootReport(region, total, tuple(roots), True, tuple(unresolved))
    return report
