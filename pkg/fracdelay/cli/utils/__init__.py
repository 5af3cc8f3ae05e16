""" Collection of utility functions for the CLI """

from .fd_config import RUN_SCHEMA, SECTIONS, load_config_file, problem_from, resolve_config
from .fd_exit import handle_errors
from .fd_record import RUN_RECORD, write_run_record
from .fd_run import RunContext, prepare_run, shared_options
