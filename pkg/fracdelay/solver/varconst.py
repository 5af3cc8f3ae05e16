"""
fracdelay | solver | varconst.py

The variation-of-constants representation

    x(t) = phi(0) E_{alpha,1}(t)
         + b int_{-tau}^{t-tau} E_{alpha,alpha}(t - tau - s) phi~(s) ds
         + int_0^t E_{alpha,alpha}(t - s) f(x(s), x(s - tau)) ds,

evaluated pointwise with adaptive quadrature. phi~ vanishes on (0, inf), so the
history integral stops at min(t - tau, 0).
"""

import math
from typing import Optional

import numpy as np
from scipy import integrate

from fracdelay.core import Beta, HistoryFunction, Nonlinearity, ProblemParams, Trajectory
from fracdelay.error import ConfigError, DomainError
from fracdelay.mlf import DEFAULT_CONTOUR, ContourSpec, KernelQuery, eval_kernel, kernel_value
from fracdelay.utils.fd_logger import FracDelayLogger

log = FracDelayLogger()

QUAD_OPTIONS = {"epsabs": 1e-12, "epsrel": 1e-10, "limit": 200}


def _weighted_kernel(p: ProblemParams, v: float, contour) -> float:
    """E_{alpha,alpha}(v) v^(1 - alpha), continued to 1 / Gamma(alpha) at v = 0."""
    if v <= 0:
        return 1.0 / math.gamma(p.alpha)
    return kernel_value(p, p.alpha, v, contour) * v ** (1.0 - p.alpha)


def _history_term(p: ProblemParams, phi: HistoryFunction, t: float, contour) -> float:
    upper = min(t - p.tau, 0.0)
    if upper <= -p.tau:
        return 0.0
    shift = t - p.tau

    if shift <= 0:
        # E_{alpha,alpha}(v) ~ v^(alpha-1) at the upper end: integrate against the
        # algebraic weight (upper - s)^(alpha - 1).
        def smooth(s):
            return _weighted_kernel(p, shift - s, contour) * float(phi(s))

        value, _ = integrate.quad(smooth, -p.tau, upper, weight="alg",
                                  wvar=(0.0, p.alpha - 1.0), **QUAD_OPTIONS)
        return value

    # kernel breakpoints v = k tau and table nodes of phi
    breaks = [shift - k * p.tau for k in range(1, int(math.ceil(shift / p.tau)) + 2)]
    if phi.table is not None:
        breaks.extend(np.linspace(-p.tau, 0.0, len(phi.table))[1:-1])
    points = sorted(point for point in breaks if -p.tau < point < 0.0)

    def integrand(s):
        return kernel_value(p, p.alpha, shift - s, contour) * float(phi(s))

    value, _ = integrate.quad(integrand, -p.tau, 0.0, points=points or None, **QUAD_OPTIONS)
    return value


def _forcing_term(
    p: ProblemParams, f: Nonlinearity, samples: Trajectory, t: float, contour
) -> float:
    """Convolution with f along the trajectory, f interpolated linearly between nodes."""
    if samples.t_end < t - 1e-12 * max(1.0, t):
        raise DomainError(f"trajectory ends at {samples.t_end:g} before t = {t:g}.")
    m = samples.m
    current = samples.values[m:]
    delayed = samples.values[: current.size]
    forcing = np.asarray(f(current, delayed), dtype=float) * np.ones(current.size)
    nodes = samples.times[m:]

    def forcing_at(s):
        return float(np.interp(s, nodes, forcing))

    # the last delay interval carries the (t - s)^(alpha - 1) singularity
    split = max(0.0, t - min(p.tau, t))
    head = 0.0
    if split > 0:
        points = [t - k * p.tau for k in range(2, int(math.ceil(t / p.tau)) + 1)]
        points = [point for point in points if 0.0 < point < split]
        head, _ = integrate.quad(
            lambda s: kernel_value(p, p.alpha, t - s, contour) * forcing_at(s),
            0.0, split, points=points or None, **QUAD_OPTIONS,
        )

    def smooth(s):
        return _weighted_kernel(p, t - s, contour) * forcing_at(s)

    tail, _ = integrate.quad(smooth, split, t, weight="alg",
                             wvar=(0.0, p.alpha - 1.0), **QUAD_OPTIONS)
    return head + tail


def eval_varconst(
    p: ProblemParams,
    phi: HistoryFunction,
    fsamples: Optional[Trajectory],
    t: float,
    f: Optional[Nonlinearity] = None,
    c: Optional[ContourSpec] = None,
) -> float:
    """
    x(t) from the representation formula. With fsamples None the forcing term is
    dropped (f = 0); otherwise f is required and is evaluated along fsamples.
    """
    if not (math.isfinite(t) and t > 0):
        raise DomainError(f"t = {t} must be positive.")
    contour = c or DEFAULT_CONTOUR

    value = float(phi(0.0)) * eval_kernel(KernelQuery(p, Beta.ONE, t), contour)
    if p.b != 0:
        value += p.b * _history_term(p, phi, t, contour)
    if fsamples is not None:
        if f is None:
            raise ConfigError("eval_varconst needs f together with fsamples.", field="f")
        if not f.is_zero:
            value += _forcing_term(p, f, fsamples, t, contour)
    if log.enabled("TRACE"):
        log.trace(f"x({t:g}) = {value:.12g}", "varconst")
    return value
