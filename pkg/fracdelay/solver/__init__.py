""" Predictor-corrector and Picard solvers for the delay equation, and the representation formula. """

from .abm import solve_abm
from .config import SolveConfig
from .picard import KernelCache, build_kernel_cache, max_deviation, solve_picard
from .varconst import eval_varconst
