"""
fracdelay | cli | utils | fd_config.py

Run configuration: built-in defaults, an optional TOML file and command-line
flags, merged in that order and checked against RUN_SCHEMA.
"""

import math
from typing import Any, Dict, Optional

import tomli as toml

from fracdelay.core import ProblemParams, validate_params
from fracdelay.core.nonlinearity import BUILTIN_NAMES
from fracdelay.error import ConfigError
from fracdelay.utils.fd_validator import validate

HISTORY_KINDS = ("const", "affine")
SCHEMES = ("abm", "picard")


def _positive(value) -> bool:
    return value > 0


RUN_SCHEMA = {
    # problem
    "alpha": {"type": float, "required": False, "default": 0.5},
    "a": {"type": float, "required": False, "default": -5.0},
    "b": {"type": float, "required": False, "default": 0.5},
    "tau": {"type": float, "required": False, "default": 1.0},
    # nonlinearity
    "f": {
        "type": str,
        "required": False,
        "default": "example51",
        "constraints": lambda name: name in BUILTIN_NAMES,
        "message": f"f must be one of {', '.join(BUILTIN_NAMES)}.",
    },
    "terms": {
        "type": list,
        "required": False,
        "default": [],
        "constraints": lambda terms: all(
            isinstance(term, (list, tuple)) and len(term) == 3 for term in terms
        ),
        "message": "terms must be a list of [c, i, j] triples.",
    },
    # history
    "history": {
        "type": str,
        "required": False,
        "default": "const",
        "constraints": lambda kind: kind in HISTORY_KINDS,
        "message": "history must be 'const' or 'affine'.",
    },
    "c": {"type": float, "required": False, "default": 0.6},
    "slope": {"type": float, "required": False, "default": 0.0},
    "intercept": {"type": float, "required": False, "default": 0.0},
    # solver
    "h": {
        "type": float,
        "required": False,
        "default": 1.0 / 64,
        "constraints": _positive,
        "message": "h must be positive.",
    },
    "t_end": {
        "type": float,
        "required": False,
        "default": 20.0,
        "constraints": _positive,
        "message": "t_end must be positive.",
    },
    "corrector_iters": {
        "type": int,
        "required": False,
        "default": 1,
        "constraints": lambda count: count >= 1,
        "message": "corrector_iters must be at least 1.",
    },
    "picard_tol": {
        "type": float,
        "required": False,
        "default": 1e-10,
        "constraints": _positive,
        "message": "picard_tol must be positive.",
    },
    "picard_max_iters": {
        "type": int,
        "required": False,
        "default": 100,
        "constraints": lambda count: count >= 1,
        "message": "picard_max_iters must be at least 1.",
    },
    "scheme": {
        "type": str,
        "required": False,
        "default": "abm",
        "constraints": lambda scheme: scheme in SCHEMES,
        "message": "scheme must be 'abm' or 'picard'.",
    },
    # contour
    "mu": {
        "type": float,
        "required": False,
        "default": None,
        "constraints": _positive,
        "message": "mu must be positive.",
    },
    "theta": {
        "type": float,
        "required": False,
        "default": math.pi / 2 + 0.3,
        "constraints": lambda theta: math.pi / 2 < theta < math.pi,
        "message": "theta must lie in the open interval (pi/2, pi).",
    },
    "ray_truncation": {
        "type": float,
        "required": False,
        "default": None,
        "constraints": _positive,
        "message": "ray_truncation must be positive.",
    },
    "n_ray": {
        "type": int,
        "required": False,
        "default": 32,
        "constraints": lambda count: count >= 2,
        "message": "n_ray must be at least 2.",
    },
    "n_arc": {
        "type": int,
        "required": False,
        "default": 64,
        "constraints": lambda count: count >= 2,
        "message": "n_arc must be at least 2.",
    },
    # output
    "out_dir": {"type": str, "required": False, "default": "."},
    "seed": {
        "type": int,
        "required": False,
        "default": 0,
        "constraints": lambda seed: seed >= 0,
        "message": "seed must be nonnegative.",
    },
}

SECTIONS = {
    "problem": ("alpha", "a", "b", "tau"),
    "nonlinearity": ("f", "terms"),
    "history": ("history", "c", "slope", "intercept"),
    "solver": ("h", "t_end", "corrector_iters", "picard_tol", "picard_max_iters", "scheme"),
    "contour": ("mu", "theta", "ray_truncation", "n_ray", "n_arc"),
    "output": ("out_dir", "seed"),
}


def load_config_file(path: str) -> Dict[str, Any]:
    """
    Flat key/value pairs from a TOML file. Keys may sit at the top level or in
    their section table; anything else is a ConfigError.
    """
    try:
        with open(path, "rb") as config_file:
            document = toml.load(config_file)
    except toml.TOMLDecodeError as err:
        raise ConfigError(f"{path} is not valid TOML: {err}", field="config") from err
    except OSError as err:
        raise ConfigError(f"Could not read {path}: {err}", field="config") from err

    values: Dict[str, Any] = {}
    for key, value in document.items():
        if isinstance(value, dict):
            if key not in SECTIONS:
                raise ConfigError(f"Unknown configuration section [{key}].", field=key)
            for inner_key, inner_value in value.items():
                if inner_key not in SECTIONS[key]:
                    raise ConfigError(
                        f"Unknown configuration key {inner_key!r} in [{key}].", field=inner_key
                    )
                values[inner_key] = inner_value
        elif key in RUN_SCHEMA:
            values[key] = value
        else:
            raise ConfigError(f"Unknown configuration key {key!r}.", field=key)
    return values


def resolve_config(
    flags: Dict[str, Any], config_path: Optional[str] = None
) -> Dict[str, Any]:
    """
    Merge defaults < file < flags, validate, and check the problem parameters.
    Flags set to None (or empty for repeatable ones) count as not given.
    """
    merged: Dict[str, Any] = {}
    if config_path:
        merged.update(load_config_file(config_path))
    for key, value in flags.items():
        if key not in RUN_SCHEMA or value is None or value == ():
            continue
        merged[key] = [list(term) for term in value] if key == "terms" else value

    result = validate(merged, RUN_SCHEMA)
    if "errors" in result:
        raise ConfigError(" ".join(result["errors"]), field=_first_field(result["errors"]))
    resolved = result["validated_input"]

    report = validate_params(problem_from(resolved))
    if not report.valid:
        raise ConfigError(" ".join(report.errors), field=_first_field(report.errors))
    return resolved


def _first_field(errors) -> Optional[str]:
    for key in RUN_SCHEMA:
        if any(message.startswith(key + " ") for message in errors):
            return key
    return None


def problem_from(resolved: Dict[str, Any]) -> ProblemParams:
    """ProblemParams from a resolved configuration."""
    return ProblemParams(
        alpha=resolved["alpha"], a=resolved["a"], b=resolved["b"], tau=resolved["tau"]
    )
