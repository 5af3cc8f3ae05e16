""" Domain types shared by every fracdelay module. """

from .example51 import example51_histories, example51_nonlinearity, example51_problem
from .history import HistoryFunction, extend_history, grid_ratio
from .nonlinearity import Nonlinearity
from .params import Beta, Classification, ProblemParams
from .trajectory import Scheme, Trajectory
from .validation import ValidationReport, validate_params
