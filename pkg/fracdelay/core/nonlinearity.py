"""
fracdelay | core | nonlinearity.py

The nonlinear term f(x(t), x(t - tau)). Callables must accept numpy arrays.
"""

from dataclasses import dataclass, field
from typing import Callable, Iterable, Tuple

import numpy as np

from fracdelay.error import ConfigError, HypothesisH1Violated

BUILTIN_NAMES = ("zero", "example51", "polynomial")


@dataclass(frozen=True)
class Nonlinearity:
    """f(x, y) with x = x(t) and y = x(t - tau)."""

    func: Callable = field(compare=False)
    name: str = "custom"
    is_zero: bool = False
    terms: Tuple[Tuple[float, int, int], ...] = ()

    def __call__(self, x, y):
        if self.is_zero:
            shape = np.broadcast(np.asarray(x), np.asarray(y)).shape
            return np.zeros(shape) if shape else 0.0
        return self.func(x, y)

    def check_h1(self, tol: float = 0.0) -> None:
        """Raise HypothesisH1Violated unless f(0, 0) = 0."""
        value = float(self(0.0, 0.0))
        if not np.isfinite(value) or abs(value) > tol:
            raise HypothesisH1Violated(
                f"f(0, 0) = {value} for nonlinearity {self.name}; the trivial "
                "solution must be an equilibrium.",
                value=value,
            )

    # ------------------------------ Builtins ---------------------------------- #
    @classmethod
    def zero(cls) -> "Nonlinearity":
        """f = 0, the linear equation."""
        return cls(func=lambda x, y: 0.0 * x, name="zero", is_zero=True)

    @classmethod
    def polynomial(cls, terms: Iterable[Tuple[float, int, int]]) -> "Nonlinearity":
        """f(x, y) = sum of c * x**i * y**j over the (c, i, j) terms."""
        parsed = []
        for term in terms:
            if len(term) != 3:
                raise ConfigError(f"Polynomial term {term} is not a (c, i, j) triple.",
                                  field="term")
            coefficient, x_power, y_power = term
            if int(x_power) != x_power or int(y_power) != y_power \
                    or x_power < 0 or y_power < 0:
                raise ConfigError(
                    f"Polynomial term {term} needs nonnegative integer powers.",
                    field="term",
                )
            parsed.append((float(coefficient), int(x_power), int(y_power)))
        parsed = tuple(parsed)

        if not parsed:
            return cls.zero()

        def func(x, y):
            x = np.asarray(x, dtype=float)
            y = np.asarray(y, dtype=float)
            total = np.zeros(np.broadcast(x, y).shape)
            for coefficient, x_power, y_power in parsed:
                total = total + coefficient * x**x_power * y**y_power
            return total if total.ndim else float(total)

        label = " + ".join(f"{c:g}*x^{i}*y^{j}" for c, i, j in parsed)
        return cls(func=func, name=f"polynomial({label})", terms=parsed)

    @classmethod
    def example51(cls) -> "Nonlinearity":
        """f(x, y) = x^2 + y^3."""
        poly = cls.polynomial([(1.0, 2, 0), (1.0, 0, 3)])
        return cls(func=poly.func, name="example51", terms=poly.terms)

    @classmethod
    def from_name(cls, name: str, terms=()) -> "Nonlinearity":
        """Resolve a builtin by its CLI name."""
        if name == "zero":
            return cls.zero()
        if name == "example51":
            return cls.example51()
        if name == "polynomial":
            return cls.polynomial(terms)
        raise ConfigError(
            f"Unknown nonlinearity {name!r}; choose one of {', '.join(BUILTIN_NAMES)}.",
            field="f",
        )
