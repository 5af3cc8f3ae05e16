"""
fracdelay | core | params.py

Coefficients of the scalar Caputo delay equation

    D^alpha x(t) = a x(t) + b x(t - tau) + f(x(t), x(t - tau)).
"""

from dataclasses import dataclass
from enum import Enum


class Classification(Enum):
    """Three-valued classification of the coefficient pair (a, b)."""

    STABLE_CRITERION = "StableCriterion"  # a <= b < -a
    NONNEGATIVE_SUM = "NonnegativeSum"  # a + b >= 0, a nonnegative real root exists
    INCONCLUSIVE = "Inconclusive"


class Beta(Enum):
    """Second Mittag-Leffler index of the delayed kernels."""

    ONE = "one"
    ALPHA = "alpha"

    def value_for(self, alpha: float) -> float:
        """Numeric beta for the given order."""
        return 1.0 if self is Beta.ONE else alpha


@dataclass(frozen=True)
class ProblemParams:
    """Order alpha, coefficients a and b, and delay tau."""

    alpha: float
    a: float
    b: float
    tau: float

    @property
    def criterion_holds(self) -> bool:
        """True when a <= b < -a."""
        return self.a <= self.b < -self.a

    def classify(self) -> Classification:
        """Classify (a, b); the two named regimes are disjoint."""
        if self.criterion_holds:
            return Classification.STABLE_CRITERION
        if self.a + self.b >= 0:
            return Classification.NONNEGATIVE_SUM
        return Classification.INCONCLUSIVE

    def as_dict(self):
        """Plain dict, in field order."""
        return {"alpha": self.alpha, "a": self.a, "b": self.b, "tau": self.tau}
