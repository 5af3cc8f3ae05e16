""" Delayed Mittag-Leffler kernels, the classical two-parameter function, and decay estimates. """

from .classical import SERIES_SWITCH, eval_classical_ml
from .contour import ContourSpec
from .decay import DecayProfile, L1Norm, decay_profile, decay_rate, kernel_l1_norm, tail_bound
from .kernel import (
    DEFAULT_CONTOUR,
    KernelQuery,
    contour_integral,
    eval_kernel,
    eval_kernel_batch,
    integrated_kernel_grid,
    kernel_value,
)
