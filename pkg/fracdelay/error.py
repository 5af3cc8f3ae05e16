"""
fracdelay | error.py

This file contains the error classes for the fracdelay package.
"""

from typing import Optional


class FracDelayError(Exception):
    """
    Base class for all fracdelay errors
    """

    def __init__(self, message: Optional[str] = None):
        super().__init__(message)
        self.message = message

    def __str__(self):
        if self.message:
            return self.message
        return super().__str__()


class ParameterError(FracDelayError):
    """
    Raised when problem parameters are unusable for the requested operation
    """


class DomainError(FracDelayError):
    """
    Raised when an argument lies outside the domain of a function (t <= 0, t < -tau, ...)
    """


class ConfigError(FracDelayError):
    """
    Raised when a run configuration fails validation
    """

    def __init__(self, message: Optional[str] = None, field: Optional[str] = None):
        super().__init__(message)
        self.field = field


class BracketingFailed(FracDelayError):
    """
    Raised when Q does not change sign on [0, search_hi]
    """

    def __init__(
        self,
        message: Optional[str] = None,
        search_hi: Optional[float] = None,
        q_hi: Optional[float] = None,
    ):
        super().__init__(message)
        self.search_hi = search_hi
        self.q_hi = q_hi


class BoundaryDegenerate(FracDelayError):
    """
    Raised when a region boundary passes too close to a zero of Q
    """

    def __init__(
        self,
        message: Optional[str] = None,
        min_modulus: Optional[float] = None,
        location: Optional[complex] = None,
    ):
        super().__init__(message)
        self.min_modulus = min_modulus
        self.location = location


class RegionError(FracDelayError):
    """
    Raised when a complex region is malformed or crosses the branch cut
    """


class ContourDegenerate(FracDelayError):
    """
    Raised when a pole of the kernel integrand sits on or to the right of the contour
    """

    def __init__(self, message: Optional[str] = None, min_modulus: Optional[float] = None):
        super().__init__(message)
        self.min_modulus = min_modulus


class TailEstimateFailed(FracDelayError):
    """
    Raised when the power-law tail model of an L1 norm does not settle
    """


class SolutionBlowup(FracDelayError):
    """
    Raised when a trajectory exceeds the overflow guard
    """

    def __init__(
        self,
        message: Optional[str] = None,
        t: Optional[float] = None,
        value: Optional[float] = None,
    ):
        super().__init__(message)
        self.t = t
        self.value = value


class PicardDiverged(FracDelayError):
    """
    Raised when the Lyapunov-Perron iteration does not settle
    """

    def __init__(
        self,
        message: Optional[str] = None,
        iterations: Optional[int] = None,
        last_change: Optional[float] = None,
    ):
        super().__init__(message)
        self.iterations = iterations
        self.last_change = last_change


class HypothesisH1Violated(FracDelayError):
    """
    Raised when the nonlinearity does not vanish at the origin
    """

    def __init__(self, message: Optional[str] = None, value: Optional[float] = None):
        super().__init__(message)
        self.value = value
