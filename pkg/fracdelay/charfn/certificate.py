"""
fracdelay | charfn | certificate.py

Algebraic witness that Q has no zero with nonnegative real part when
a <= b < -a: the disk {|s - a| <= |b|} holding a + b exp(-s tau) for Re s >= 0
misses the sector {|arg s| <= alpha pi / 2} holding s^alpha.
"""

import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from fracdelay.core import ProblemParams


class CertificateStatus(str, Enum):
    SATISFIED = "Satisfied"
    NOT_APPLICABLE = "NotApplicable"


@dataclass(frozen=True)
class Certificate:
    """
    Witness geometry. separation is the distance between the disk and the
    sector; it is 0 on the boundary case a = b, where they touch at the origin.
    """

    status: CertificateStatus
    disk_center: float
    disk_radius: float
    sector_half_angle: float
    separation: Optional[float] = None

    @property
    def satisfied(self) -> bool:
        return self.status is CertificateStatus.SATISFIED

    @property
    def touching(self) -> bool:
        return self.satisfied and self.separation == 0.0

    def describe(self) -> str:
        if not self.satisfied:
            return "NotApplicable: a <= b < -a does not hold"
        if self.touching:
            return (
                f"Satisfied: disk |s - ({self.disk_center:g})| <= {self.disk_radius:g} "
                "touches the sector only at the origin"
            )
        return (
            f"Satisfied: disk |s - ({self.disk_center:g})| <= {self.disk_radius:g}, "
            f"sector |arg s| <= {self.sector_half_angle:.6g}, "
            f"separation {self.separation:.6g}"
        )


def stability_certificate(p: ProblemParams) -> Certificate:
    """Satisfied with the witness when a <= b < -a, NotApplicable otherwise."""
    half_angle = p.alpha * math.pi / 2
    if not p.criterion_holds:
        return Certificate(CertificateStatus.NOT_APPLICABLE, p.a, abs(p.b), half_angle)

    # a < 0 here. The sector lies in Re s >= 0 and contains the origin, the
    # closest point to the disk since the disk sits in Re s <= a + |b| <= 0.
    separation = max(abs(p.a) - abs(p.b), 0.0)
    return Certificate(
        CertificateStatus.SATISFIED,
        disk_center=p.a,
        disk_radius=abs(p.b),
        sector_half_angle=half_angle,
        separation=separation,
    )
