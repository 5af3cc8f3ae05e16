"""
fracdelay | utils | fd_debugger.py

Stage timing for long numerical runs (kernel caches, sweeps, certification).
Stages may be opened from worker threads; the registry is shared and locked.
Nothing is recorded until recording is switched on (the CLI does so for --timings),
so library loops that open stages leave the registry untouched.
"""

import datetime
import platform
import threading
import time
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Dict, List, Optional

import cpuinfo
from prettytable import PrettyTable

HOST = f"{platform.system()} {platform.release()}"
PYTHON_VERSION = platform.python_version()


@lru_cache(maxsize=1)
def _processor():
    try:
        return cpuinfo.get_cpu_info()["brand_raw"]
    except KeyError:
        return "Unable to get processor info."


def _utc_now():
    return datetime.datetime.now(datetime.timezone.utc).isoformat()


@dataclass
class Stage:
    """One timed stage; `began`/`ended` are perf_counter readings."""

    name: str
    began: Optional[float] = None
    ended: Optional[float] = None
    start_utc: Optional[str] = None
    stop_utc: Optional[str] = None

    @property
    def finished(self) -> bool:
        return self.began is not None and self.ended is not None

    def as_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "start_utc": self.start_utc,
            "stop_utc": self.stop_utc,
            "duration_ms": (self.ended - self.began) * 1000.0,
        }


class Checkpoints:
    """
    Process-wide registry of stages, in the order they were added.
    Repeated names get a " #n" suffix so every stage stays addressable.
    """

    __instance = None
    checkpoints: List[Stage] = []
    recording: bool = False

    def __new__(cls):
        if Checkpoints.__instance is None:
            instance = object.__new__(cls)
            instance.checkpoints = []
            instance._by_name = {}
            instance._uses = {}
            instance._lock = threading.Lock()
            Checkpoints.__instance = instance
        return Checkpoints.__instance

    def add(self, name: str) -> str:
        """Register a stage and return its unique name."""
        with self._lock:
            count = self._uses.get(name, 0) + 1
            unique = name if count == 1 else f"{name} #{count}"
            while unique in self._by_name:
                count += 1
                unique = f"{name} #{count}"
            self._uses[name] = count
            stage = Stage(unique)
            self.checkpoints.append(stage)
            self._by_name[unique] = stage
            return unique

    def _lookup(self, name: str) -> Stage:
        try:
            return self._by_name[name]
        except KeyError:
            raise KeyError(f"Checkpoint name '{name}' does not exist.") from None

    def start(self, name: str) -> None:
        stage = self._lookup(name)
        stage.start_utc = _utc_now()
        stage.began = time.perf_counter()

    def stop(self, name: str) -> None:
        stage = self._lookup(name)
        if stage.began is None:
            raise KeyError(f"Checkpoint '{name}' has not been started.")
        stage.ended = time.perf_counter()
        stage.stop_utc = _utc_now()

    def get_checkpoints(self) -> List[Dict[str, Any]]:
        """Finished stages only."""
        with self._lock:
            return [stage.as_dict() for stage in self.checkpoints if stage.finished]

    def set_recording(self, recording: bool) -> None:
        self.recording = bool(recording)

    def clear(self) -> None:
        with self._lock:
            self.checkpoints = []
            self._by_name = {}
            self._uses = {}


class LineTimer:
    """Context manager timing its body as one stage; inert while not recording."""

    def __init__(self, name: str):
        self.checkpoints = Checkpoints()
        self.name = self.checkpoints.add(name) if self.checkpoints.recording else None

    def __enter__(self):
        if self.name is not None:
            self.checkpoints.start(self.name)
        return self

    def __exit__(self, *args):
        if self.name is not None:
            self.checkpoints.stop(self.name)


def get_debugger_output() -> Dict[str, Any]:
    """
    Finished stages plus host information. Reading the output resets the
    registry, so each command reports only its own stages.
    """
    from fracdelay import __version__  # pylint: disable=import-outside-toplevel, cyclic-import

    checkpoints = Checkpoints()
    stages = checkpoints.get_checkpoints()
    checkpoints.clear()

    return {
        "system_info": {
            "os": HOST,
            "processor": _processor(),
            "python_version": PYTHON_VERSION,
            "fracdelay": __version__,
        },
        "timestamps": stages,
    }


def timing_table(debugger_output: Dict[str, Any]) -> PrettyTable:
    """Stage durations with each stage's share of the total."""
    stamps = debugger_output["timestamps"]
    total = sum(stamp["duration_ms"] for stamp in stamps)

    table = PrettyTable(["Stage", "Duration (ms)", "Share"])
    table.align["Stage"] = "l"
    for stamp in stamps:
        share = stamp["duration_ms"] / total if total > 0 else 0.0
        table.add_row((stamp["name"], f"{stamp['duration_ms']:.1f}", f"{share:.0%}"))

    info = debugger_output["system_info"]
    table.title = f"{info['processor']} | {info['os']} | Python {info['python_version']}"
    return table


def clear_debugger_output() -> None:
    Checkpoints().clear()
