"""
fracdelay | stability | attractivity.py

Empirical attractivity: solve from each history and look at the tail of the
trajectory.
"""

import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np
from tqdm_loggable.auto import tqdm

from fracdelay.core import HistoryFunction, Nonlinearity, ProblemParams
from fracdelay.error import SolutionBlowup
from fracdelay.solver import SolveConfig, solve_abm
from fracdelay.utils.fd_csv import write_csv
from fracdelay.utils.fd_logger import FracDelayLogger

log = FracDelayLogger()

ATTRACTIVITY_TOL = 0.02
TAIL_FRACTION = 0.75
ATTRACTIVITY_CSV_HEADER = ("index", "history", "history_sup", "tail_limsup", "decayed", "error")


@dataclass(frozen=True)
class AttractivityEntry:
    index: int
    history: str
    history_sup: float
    tail_limsup: float
    decayed: bool
    error: str = ""


@dataclass(frozen=True)
class AttractivityReport:
    """
    One entry per history; history_sup is sup |phi| on [-tau, 0] and
    tail_limsup is sup |x(t)| over t >= t_tail.
    """

    t_tail: float
    tol: float
    entries: Tuple[AttractivityEntry, ...]

    @property
    def all_decayed(self) -> bool:
        return all(entry.decayed for entry in self.entries)

    def rows(self):
        return [
            (entry.index, entry.history, entry.history_sup, entry.tail_limsup, entry.decayed,
             entry.error)
            for entry in self.entries
        ]

    def write_csv(self, path: str) -> str:
        return write_csv(path, ATTRACTIVITY_CSV_HEADER, self.rows())


def random_histories(delta: float, tau: float, count: int, seed: int = 0) -> List[HistoryFunction]:
    """
    Affine histories with sup norm <= delta: endpoint values phi(-tau), phi(0)
    drawn uniformly from [-delta, delta].
    """
    rng = np.random.default_rng(seed)
    ends = rng.uniform(-delta, delta, size=(count, 2))
    histories = []
    for start, stop in ends:
        slope = (stop - start) / tau
        histories.append(HistoryFunction.affine(slope, stop, tau))
    return histories


def empirical_attractivity(
    p: ProblemParams,
    f: Nonlinearity,
    phis: Sequence[HistoryFunction],
    cfg: SolveConfig,
    tol: float = ATTRACTIVITY_TOL,
    tail_fraction: float = TAIL_FRACTION,
    max_workers: Optional[int] = None,
) -> AttractivityReport:
    """
    Solve (ABM) from every history concurrently; a history has decayed when
    sup_{t >= tail_fraction t_end} |x(t)| < tol. Blow-ups are recorded, not raised.
    """
    t_tail = tail_fraction * cfg.t_end

    def run(indexed):
        index, phi = indexed
        norm = phi.sup_norm()
        try:
            trajectory = solve_abm(p, f, phi, cfg)
        except SolutionBlowup as err:
            log.warn(f"history {index} ({phi.name}) blew up: {err}", "attractivity")
            return AttractivityEntry(index, phi.name, norm, float("inf"), False, str(err))
        limsup = trajectory.tail_sup(t_tail)
        return AttractivityEntry(index, phi.name, norm, limsup, bool(limsup < tol))

    entries = []
    with ThreadPoolExecutor(max_workers=max_workers) as executor:
        results = executor.map(run, enumerate(phis))
        for entry in tqdm(results, total=len(phis), desc="attractivity",
                          disable=not sys.stdout.isatty()):
            entries.append(entry)

    return AttractivityReport(t_tail=t_tail, tol=tol, entries=tuple(entries))
