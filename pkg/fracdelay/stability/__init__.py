""" Certification of asymptotic stability and empirical attractivity checks. """

from .attractivity import (
    AttractivityEntry,
    AttractivityReport,
    empirical_attractivity,
    random_histories,
)
from .certify import CERTIFIED_NOTE, CertifyConfig, StabilityVerdict, Verdict, certify
from .constants import Constants, compute_constants, sup_kernel_one
from .lipschitz import (
    RANDOM_SAMPLES,
    LipschitzModulus,
    estimate_lipschitz_modulus,
    lipschitz_profile,
)
