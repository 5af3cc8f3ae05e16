"""
fracdelay | utils | fd_validator.py
Validates flat dictionaries (problem parameters, run configurations) against a schema.

A schema maps each key to a rule dictionary:
    type         expected Python type; float keys also accept ints
    required     missing keys are errors when True (default False)
    default      value used for a missing optional key (default None)
    constraints  predicate on the typed value
    message      error text used when the predicate fails
"""

import math
from typing import Any, Dict, List, Union

UNEXPECTED_INPUT_ERROR = "Unexpected input. {} is not a valid input option."
MISSING_REQUIRED_ERROR = "{} is a required input."
INVALID_TYPE_ERROR = "{} should be {} type, not {}."
CONSTRAINTS_ERROR = "{} does not meet the constraints."
NOT_FINITE_ERROR = "{} must be finite."


def _coerce(key: str, value: Any, expected: type):
    """
    Returns (value, error). Ints widen to float; bools never count as numbers.
    """
    if isinstance(value, bool) and expected in (int, float):
        return value, INVALID_TYPE_ERROR.format(key, expected.__name__, "bool")
    if expected is float and isinstance(value, int):
        value = float(value)
    if not isinstance(value, expected):
        return value, INVALID_TYPE_ERROR.format(key, expected.__name__, type(value).__name__)
    if isinstance(value, float) and not math.isfinite(value):
        return value, NOT_FINITE_ERROR.format(key)
    return value, None


def _check_key(key: str, rules: Dict[str, Any], raw_input: Dict[str, Any]):
    """
    Returns (value, error) for one schema entry.
    """
    if key not in raw_input:
        if rules.get("required", False):
            return None, MISSING_REQUIRED_ERROR.format(key)
        return rules.get("default"), None

    value = raw_input[key]
    if value is None:
        return None, None

    if "type" in rules:
        value, error = _coerce(key, value, rules["type"])
        if error:
            return value, error

    predicate = rules.get("constraints")
    if predicate is not None and not predicate(value):
        return value, rules.get("message", CONSTRAINTS_ERROR.format(key))
    return value, None


def validate(
    raw_input: Dict[str, Any], schema: Dict[str, Dict[str, Any]]
) -> Dict[str, Union[Dict[str, Any], List[str]]]:
    """
    Checks raw_input against schema and fills in defaults.

    Returns {"errors": [...]} when anything is wrong, otherwise
    {"validated_input": {...}} holding exactly the schema's keys.
    """
    errors: List[str] = [
        UNEXPECTED_INPUT_ERROR.format(key) for key in raw_input if key not in schema
    ]
    validated: Dict[str, Any] = {}

    for key, rules in schema.items():
        value, error = _check_key(key, rules, raw_input)
        if error:
            errors.append(error)
        validated[key] = value

    if errors:
        return {"errors": errors}
    return {"validated_input": validated}

