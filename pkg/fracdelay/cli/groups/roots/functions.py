"""
fracdelay | cli | groups | roots | functions.py
"""

from typing import Optional

from prettytable import PrettyTable

from fracdelay.charfn import ComplexRegion, RootReport, count_roots, locate_roots
from fracdelay.core import ProblemParams
from fracdelay.error import ConfigError, RegionError

from ...utils import RunContext

ROOTS_CSV = "roots.csv"


def build_region(re_lo: float, re_hi: float, im_lo: float, im_hi: float) -> ComplexRegion:
    try:
        region = ComplexRegion.rectangle(re_lo, re_hi, im_lo, im_hi)
    except RegionError as err:
        raise ConfigError(str(err), field="region") from err
    if re_lo == 0.0 and im_lo == -im_hi:
        region = ComplexRegion.right_half_plane(re_hi, im_hi)
    return region


def right_half_plane_count(p: ProblemParams, region: ComplexRegion, report: RootReport) -> Optional[int]:
    """Zeros with Re s >= 0 inside the region, None when it has no such part."""
    if region.re_lo >= 0:
        return report.winding_count
    if region.re_hi <= 0:
        return None
    return count_roots(p, ComplexRegion.rectangle(0.0, region.re_hi, region.im_lo, region.im_hi))


def find_roots(run: RunContext, region: ComplexRegion) -> RootReport:
    with run.stage("locate roots"):
        report = locate_roots(run.problem(), region)
    report.write_csv(run.path(ROOTS_CSV))
    return report


def roots_table(report: RootReport) -> PrettyTable:
    table = PrettyTable(["Re s", "Im s", "|Q(s)|", "Multiplicity"])
    for re, im, residual, multiplicity in report.rows():
        table.add_row((f"{re:.12g}", f"{im:.12g}", f"{residual:.2e}", multiplicity))
    table.title = f"zeros of Q in {report.region.describe()}"
    return table
