"""
fracdelay | cli | utils | fd_exit.py

Maps library errors to the CLI exit codes: 2 for configuration problems,
1 for numerical failures.
"""

import functools
import sys

import click

from fracdelay.cli import EXIT_NUMERICAL
from fracdelay.error import ConfigError, FracDelayError
from fracdelay.utils.fd_debugger import Checkpoints
from fracdelay.utils.fd_logger import FracDelayLogger

log = FracDelayLogger()


def handle_errors(func):
    """
    Wrap a command body so fracdelay errors become exit codes. Stage recording
    ends with the command, however it exits.
    """

    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except ConfigError as err:
            message = str(err)
            if err.field and err.field not in message:
                message = f"{err.field}: {message}"
            raise click.UsageError(message) from err
        except FracDelayError as err:
            log.debug(f"{type(err).__name__}: {err}", "cli")
            click.echo(f"Error: {err}", err=True)
            sys.exit(EXIT_NUMERICAL)
        finally:
            Checkpoints().set_recording(False)

    return wrapper
