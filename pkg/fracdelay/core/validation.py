"""
fracdelay | core | validation.py

Report-style checks of ProblemParams, built on the schema validator.
"""

import math
from dataclasses import dataclass, field
from typing import List, Optional

from fracdelay.utils.fd_validator import validate

from .params import Classification, ProblemParams

PARAMS_SCHEMA = {
    "alpha": {
        "type": float,
        "required": True,
        "constraints": lambda alpha: 0 < alpha < 1,
        "message": "alpha must lie in the open interval (0, 1).",
    },
    "a": {"type": float, "required": True},
    "b": {"type": float, "required": True},
    "tau": {
        "type": float,
        "required": True,
        "constraints": lambda tau: tau > 0,
        "message": "tau must be positive.",
    },
}


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of validate_params."""

    valid: bool
    errors: List[str] = field(default_factory=list)
    classification: Optional[Classification] = None


def validate_params(p: ProblemParams) -> ValidationReport:
    """
    Report every invariant violation of p and classify (a, b).
    The classification is given whenever a and b are finite.
    """
    result = validate(p.as_dict(), PARAMS_SCHEMA)
    errors = result.get("errors", [])

    classification = None
    if all(
        isinstance(value, (int, float)) and math.isfinite(value) for value in (p.a, p.b)
    ):
        classification = p.classify()

    return ValidationReport(valid=not errors, errors=list(errors),
                            classification=classification)
