"""
fracdelay | stability | certify.py

Certification of asymptotic stability of the trivial solution: the linear part
must satisfy a <= b < -a, l_f must vanish at 0, and some tested radius eps must
give q = l_f(eps) C < 1. The verdict is one-directional; failure is Inconclusive.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from fracdelay.charfn import ComplexRegion, count_roots
from fracdelay.core import Nonlinearity, ProblemParams
from fracdelay.error import BoundaryDegenerate
from fracdelay.mlf import ContourSpec
from fracdelay.utils.fd_csv import format_value
from fracdelay.utils.fd_logger import FracDelayLogger

from .constants import Constants, compute_constants
from .lipschitz import GRID_N, RANDOM_SAMPLES, estimate_lipschitz_modulus

log = FracDelayLogger()

CERTIFIED_NOTE = "certified modulo numerical constant estimation"


class Verdict(Enum):
    CERTIFIED = "CertifiedAsymptoticallyStable"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class CertifyConfig:
    """Search grid eps = eps0 2^-k, k = 0..eps_steps, and sampling controls."""

    eps0: float = 1.0
    eps_steps: int = 20
    lipschitz_samples: int = RANDOM_SAMPLES
    grid_n: int = GRID_N
    seed: int = 0
    h2_rho: float = 2.0**-20
    h2_tol: float = 1e-3
    rhp_re_hi: float = 10.0
    check_roots: bool = True
    contour: Optional[ContourSpec] = None


@dataclass(frozen=True)
class StabilityVerdict:
    """Outcome of certify; the numeric fields are None when not reached."""

    linear_ok: bool
    h2_ok: bool
    epsilon_star: Optional[float]
    q: Optional[float]
    C_empirical: Optional[float]
    delta: Optional[float]
    verdict: Verdict
    sup_E1: Optional[float] = None
    l1_Ealpha: Optional[float] = None
    rhp_roots: Optional[int] = None

    @property
    def certified(self) -> bool:
        return self.verdict is Verdict.CERTIFIED

    def record(self) -> str:
        """Flat key=value text, one field per line."""
        fields = [
            ("linear_ok", self.linear_ok),
            ("h2_ok", self.h2_ok),
            ("epsilon_star", self.epsilon_star),
            ("q", self.q),
            ("C_empirical", self.C_empirical),
            ("delta", self.delta),
            ("verdict", self.verdict.value),
            ("sup_E1", self.sup_E1),
            ("l1_Ealpha", self.l1_Ealpha),
            ("rhp_roots", self.rhp_roots),
        ]
        if self.certified:
            fields.append(("note", CERTIFIED_NOTE))
        lines = [
            f"{key}={'none' if value is None else format_value(value)}" for key, value in fields
        ]
        return "\n".join(lines) + "\n"

    def write(self, path: str) -> str:
        with open(path, "w", encoding="utf-8", newline="\n") as record_file:
            record_file.write(self.record())
        return path


def _rhp_root_count(p: ProblemParams, re_hi: float) -> Optional[int]:
    try:
        return count_roots(p, ComplexRegion.right_half_plane(re_hi, p=p))
    except BoundaryDegenerate as err:
        log.warn(f"right half-plane cross-check skipped: {err}", "certify")
        return None


def certify(
    p: ProblemParams, f: Nonlinearity, config: Optional[CertifyConfig] = None
) -> StabilityVerdict:
    """
    CertifiedAsymptoticallyStable when a <= b < -a, l_f(h2_rho) <= h2_tol and
    q = l_f(eps) C_empirical < 1 at some eps = eps0 2^-k; the largest such eps is
    eps*, and delta = (1 - q) eps* / (sup_E1 + |b| l1 + 1).
    """
    config = config or CertifyConfig()
    f.check_h1()

    def ell(rho):
        return estimate_lipschitz_modulus(
            f, rho, config.lipschitz_samples, config.seed, config.grid_n
        )

    linear_ok = p.criterion_holds
    h2_ok = ell(config.h2_rho) <= config.h2_tol
    if not linear_ok:
        log.info(f"a = {p.a:g}, b = {p.b:g} violate a <= b < -a", "certify")
        return StabilityVerdict(linear_ok, h2_ok, None, None, None, None, Verdict.INCONCLUSIVE)

    with ThreadPoolExecutor(max_workers=2) as executor:
        constants_future = executor.submit(compute_constants, p, config.contour)
        roots_future = (
            executor.submit(_rhp_root_count, p, config.rhp_re_hi) if config.check_roots else None
        )
        constants: Constants = constants_future.result()
        rhp_roots = roots_future.result() if roots_future is not None else None

    if rhp_roots:
        log.warn(f"{rhp_roots} zeros of Q counted in the right half-plane despite "
                 "a <= b < -a; the constants below are suspect", "certify")

    epsilon_star, q = None, None
    for k in range(config.eps_steps + 1):
        eps = config.eps0 * 2.0**-k
        q_eps = ell(eps) * constants.C_empirical
        if q_eps < 1:
            epsilon_star, q = eps, q_eps
            break

    delta = None
    if epsilon_star is not None:
        denominator = constants.sup_E1 + abs(p.b) * constants.l1_Ealpha + 1.0
        delta = (1.0 - q) * epsilon_star / denominator

    certified = h2_ok and delta is not None and delta > 0
    verdict = Verdict.CERTIFIED if certified else Verdict.INCONCLUSIVE
    log.info(f"verdict {verdict.value}: eps* = {epsilon_star}, q = {q}, delta = {delta}",
             "certify")
    return StabilityVerdict(
        linear_ok=linear_ok,
        h2_ok=h2_ok,
        epsilon_star=epsilon_star,
        q=q,
        C_empirical=constants.C_empirical,
        delta=delta,
        verdict=verdict,
        sup_E1=constants.sup_E1,
        l1_Ealpha=constants.l1_Ealpha,
        rhp_roots=rhp_roots,
    )
