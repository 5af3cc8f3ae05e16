""" The characteristic function Q(s) = s^alpha - a - b exp(-s tau) and its zeros. """

from .certificate import Certificate, CertificateStatus, stability_certificate
from .characteristic import (
    ROOT_RESIDUAL_TOL,
    default_search_hi,
    eval_Q,
    eval_Q_derivative,
    find_nonnegative_real_root,
    imaginary_bound,
    principal_power,
)
from .counting import DEFAULT_CONFIG, count_roots, winding_phase
from .locating import Root, RootReport, estimate_multiplicity, locate_roots, newton_polish
from .region import CharfnConfig, ComplexRegion
