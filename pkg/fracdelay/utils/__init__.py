""" Utilities shared across fracdelay: logging, validation, timing, CSV and SVG output. """

from .fd_csv import format_value, read_csv, write_csv
from .fd_logger import FracDelayLogger
from .fd_validator import validate
