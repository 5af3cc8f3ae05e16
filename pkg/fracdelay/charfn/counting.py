"""
fracdelay | charfn | counting.py

Zeros of Q inside a rectangle by the argument principle.
"""

from typing import Optional

import numpy as np

from fracdelay.core import ProblemParams
from fracdelay.error import BoundaryDegenerate

from .characteristic import eval_Q
from .region import CharfnConfig, ComplexRegion

DEFAULT_CONFIG = CharfnConfig()
MAX_SEGMENT_PHASE = np.pi / 2


def _check_margin(values, nodes, margin: float) -> None:
    moduli = np.abs(values)
    index = int(np.argmin(moduli))
    if moduli[index] < margin:
        raise BoundaryDegenerate(
            f"|Q| = {moduli[index]:.3g} < {margin:g} at s = {complex(nodes[index]):.6g} "
            "on the region boundary; perturb the region.",
            min_modulus=float(moduli[index]),
            location=complex(nodes[index]),
        )


def _segment_phase(p, z0, z1, q0, q1, depth, config) -> float:
    """Argument change of Q from z0 to z1, bisecting until each piece turns by <= pi/2."""
    increment = float(np.angle(q1 / q0))
    if abs(increment) <= MAX_SEGMENT_PHASE:
        return increment
    if depth == 0:
        raise BoundaryDegenerate(
            f"argument of Q unresolved between {z0:.6g} and {z1:.6g}; a zero is "
            "close to the boundary.",
            min_modulus=float(min(abs(q0), abs(q1))),
            location=complex(0.5 * (z0 + z1)),
        )
    midpoint = 0.5 * (z0 + z1)
    q_mid = eval_Q(p, midpoint)
    if abs(q_mid) < config.boundary_margin:
        raise BoundaryDegenerate(
            f"|Q| = {abs(q_mid):.3g} at s = {midpoint:.6g} on the region boundary.",
            min_modulus=abs(q_mid),
            location=midpoint,
        )
    return _segment_phase(p, z0, midpoint, q0, q_mid, depth - 1, config) + _segment_phase(
        p, midpoint, z1, q_mid, q1, depth - 1, config
    )


def winding_phase(
    p: ProblemParams, region: ComplexRegion, nodes_per_side: int, config: CharfnConfig
) -> float:
    """Total argument change of Q along the positively oriented boundary."""
    nodes = region.boundary_nodes(nodes_per_side)
    values = eval_Q(p, nodes)
    _check_margin(values, nodes, config.boundary_margin)

    increments = np.angle(values[1:] / values[:-1])
    for index in np.nonzero(np.abs(increments) > MAX_SEGMENT_PHASE)[0]:
        increments[index] = _segment_phase(
            p,
            complex(nodes[index]),
            complex(nodes[index + 1]),
            complex(values[index]),
            complex(values[index + 1]),
            config.refine_depth,
            config,
        )
    return float(np.sum(increments))


def count_roots(
    p: ProblemParams,
    region: ComplexRegion,
    nodes_per_side: Optional[int] = None,
    config: CharfnConfig = DEFAULT_CONFIG,
) -> int:
    """
    Number of zeros of Q inside region, counted with multiplicity.

    Raises BoundaryDegenerate when |Q| drops below the boundary margin on the
    boundary or the accumulated phase is not close to a multiple of 2 pi.
    """
    if nodes_per_side is None:
        nodes_per_side = config.nodes_per_side

    phase = winding_phase(p, region, nodes_per_side, config)
    winding = phase / (2 * np.pi)
    count = int(round(winding))
    if abs(winding - count) > 0.1 or count < 0:
        raise BoundaryDegenerate(
            f"winding number {winding:.4f} over {region.describe()} is not a "
            "nonnegative integer; refine the boundary or perturb the region."
        )
    return count
