"""
fracdelay | cli | groups | certify | functions.py
"""

from fracdelay.stability import (
    AttractivityReport,
    CertifyConfig,
    StabilityVerdict,
    certify,
    empirical_attractivity,
    random_histories,
)

from ...utils import RunContext

VERDICT_TXT = "verdict.txt"
ATTRACTIVITY_CSV = "attractivity.csv"


def run_certify(run: RunContext, samples: int) -> StabilityVerdict:
    """Certify with the run's problem and nonlinearity; writes verdict.txt."""
    config = CertifyConfig(lipschitz_samples=samples, seed=run.seed, contour=run.contour())
    with run.stage("certify"):
        verdict = certify(run.problem(), run.nonlinearity(), config)
    verdict.write(run.path(VERDICT_TXT))
    return verdict


def run_attractivity(run: RunContext, delta: float, count: int) -> AttractivityReport:
    """Solve from `count` random histories inside the delta-ball."""
    p = run.problem()
    phis = random_histories(delta, p.tau, count, run.seed)
    with run.stage("attractivity"):
        report = empirical_attractivity(p, run.nonlinearity(), phis, run.solve_config())
    report.write_csv(run.path(ATTRACTIVITY_CSV))
    return report
