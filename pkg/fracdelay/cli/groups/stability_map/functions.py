"""
fracdelay | cli | groups | stability_map | functions.py

Algebraic classification of the (a, b) plane, with an optional root-count
cross-check on a sample of criterion cells.
"""

import sys
from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional, Sequence, Tuple

import numpy as np
from tqdm_loggable.auto import tqdm

from fracdelay.charfn import ComplexRegion, count_roots
from fracdelay.core import Classification, ProblemParams
from fracdelay.error import BoundaryDegenerate
from fracdelay.utils.fd_csv import write_csv
from fracdelay.utils.fd_logger import FracDelayLogger
from fracdelay.utils.fd_svg import HeatMap

from ...utils import RunContext

log = FracDelayLogger()

MAP_CSV = "stability_map.csv"
MAP_SVG = "stability_map.svg"
VERIFY_CSV = "stability_verify.csv"
MAP_CSV_HEADER = ("a", "b", "class")
VERIFY_CSV_HEADER = ("a", "b", "rhp_count", "agrees")
VERIFY_RE_HI = 10.0
CLASS_COLORS = {
    Classification.STABLE_CRITERION.value: "#2ca02c",
    Classification.NONNEGATIVE_SUM.value: "#d62728",
    Classification.INCONCLUSIVE.value: "#bbbbbb",
}

Cell = Tuple[float, float, Classification]


def classify_grid(
    base: ProblemParams, a_values: Sequence[float], b_values: Sequence[float]
) -> List[List[Cell]]:
    """cells[i][j] classifies (a_values[i], b_values[j]); rows run concurrently."""

    def classify_row(a):
        return [
            (float(a), float(b), ProblemParams(base.alpha, float(a), float(b), base.tau).classify())
            for b in b_values
        ]

    with ThreadPoolExecutor() as executor:
        return list(executor.map(classify_row, a_values))


def write_map(run: RunContext, a_values, b_values, cells: List[List[Cell]]) -> Tuple[str, str]:
    rows = [(a, b, cls.value) for row in cells for a, b, cls in row]
    csv_path = write_csv(run.path(MAP_CSV), MAP_CSV_HEADER, rows)

    heat_map = HeatMap("Classification of (a, b)", "a", "b", CLASS_COLORS)
    classes = [[cls.value for _, _, cls in row] for row in cells]
    svg_path = heat_map.write(run.path(MAP_SVG), a_values, b_values, classes)
    return csv_path, svg_path


def _rhp_count(base: ProblemParams, a: float, b: float) -> Optional[int]:
    p = ProblemParams(base.alpha, a, b, base.tau)
    try:
        return count_roots(p, ComplexRegion.right_half_plane(VERIFY_RE_HI, p=p))
    except BoundaryDegenerate as err:
        log.warn(f"count at (a, b) = ({a:g}, {b:g}) failed: {err}", "stability-map")
        return None


def verify_cells(
    run: RunContext, base: ProblemParams, cells: List[List[Cell]], samples: int
) -> List[Tuple[float, float, Optional[int], bool]]:
    """
    count_roots over the truncated right half-plane on up to `samples`
    criterion cells drawn with the run seed. A cell agrees when the count is 0.
    """
    candidates = [
        (a, b) for row in cells for a, b, cls in row if cls is Classification.STABLE_CRITERION
    ]
    if not candidates:
        return []
    rng = np.random.default_rng(run.seed)
    picks = sorted(rng.choice(len(candidates), size=min(samples, len(candidates)), replace=False))
    chosen = [candidates[index] for index in picks]

    with ThreadPoolExecutor() as executor:
        counts = executor.map(lambda cell: _rhp_count(base, *cell), chosen)
        results = []
        for (a, b), count in zip(chosen, tqdm(counts, total=len(chosen), desc="verify",
                                               disable=not sys.stdout.isatty())):
            results.append((a, b, count, count == 0))

    rows = [(a, b, "" if count is None else count, agrees) for a, b, count, agrees in results]
    write_csv(run.path(VERIFY_CSV), VERIFY_CSV_HEADER, rows)
    return results
