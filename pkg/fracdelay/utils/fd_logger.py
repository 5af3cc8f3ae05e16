"""
fracdelay | utils | fd_logger.py

Levels, lowest first:

NOTSET  silences every message.
TRACE   per-evaluation detail (single kernel values, varconst points).
DEBUG   solver summaries: step counts, Picard iterations, quadrature splits.
INFO    progress of a command.
WARN    numerical results that deserve a second look (default).
ERROR   a command could not produce its result.

Records go to stderr so that tables and values on stdout stay parseable.
FRACDELAY_LOG_FORMAT=json switches to one JSON object per line.
"""

import json
import os
import sys
from typing import Optional, Union

MAX_MESSAGE_LENGTH = 4096
LOG_LEVELS = ["NOTSET", "TRACE", "DEBUG", "INFO", "WARN", "ERROR"]
_RANK = {name: rank for rank, name in enumerate(LOG_LEVELS)}


def _validate_log_level(log_level: Union[str, int]) -> str:
    """Level name for a level given by name (any case) or by rank."""
    if isinstance(log_level, str) and log_level.upper() in _RANK:
        return log_level.upper()
    if isinstance(log_level, int) and not isinstance(log_level, bool):
        if 0 <= log_level < len(LOG_LEVELS):
            return LOG_LEVELS[log_level]
    raise ValueError(f"Invalid log level: {log_level}")


def _shorten(message: str) -> str:
    """Keeps the head and tail of messages longer than MAX_MESSAGE_LENGTH."""
    excess = len(message) - MAX_MESSAGE_LENGTH
    if excess <= 0:
        return message
    keep = MAX_MESSAGE_LENGTH // 2
    return f"{message[:keep]}\n...TRUNCATED {excess} CHARACTERS...\n{message[-keep:]}"


class FracDelayLogger:
    """Process-wide logger; every module shares the one instance."""

    __instance = None
    level = _validate_log_level(os.environ.get("FRACDELAY_LOG_LEVEL", "WARN"))

    def __new__(cls):
        if FracDelayLogger.__instance is None:
            FracDelayLogger.__instance = object.__new__(cls)
        return FracDelayLogger.__instance

    def set_level(self, new_level: Union[str, int]) -> None:
        self.level = _validate_log_level(new_level)
        self.debug(f"Log level set to {self.level}")

    def enabled(self, message_level: str) -> bool:
        return self.level != "NOTSET" and _RANK[message_level] >= _RANK[self.level]

    def log(self, message, message_level: str = "INFO", context: Optional[str] = None):
        """Writes one record; context names the emitting stage (e.g. "picard")."""
        if not self.enabled(message_level):
            return

        message = _shorten(str(message))

        if os.environ.get("FRACDELAY_LOG_FORMAT", "").lower() == "json":
            record = {"context": context, "message": message, "level": message_level}
            print(json.dumps(record), file=sys.stderr, flush=True)
            return

        prefix = f"{context} | " if context else ""
        print(f"{message_level.ljust(7)}| {prefix}{message}", file=sys.stderr, flush=True)

    def trace(self, message, context: Optional[str] = None):
        self.log(message, "TRACE", context)

    def debug(self, message, context: Optional[str] = None):
        self.log(message, "DEBUG", context)

    def info(self, message, context: Optional[str] = None):
        self.log(message, "INFO", context)

    def warn(self, message, context: Optional[str] = None):
        self.log(message, "WARN", context)

    def error(self, message, context: Optional[str] = None):
        self.log(message, "ERROR", context)
