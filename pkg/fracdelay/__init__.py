""" Allows fracdelay to be imported as a module. """

from . import charfn, core, mlf, solver, stability
from .error import FracDelayError
from .utils.fd_logger import FracDelayLogger
from .version import __version__

log = FracDelayLogger()
