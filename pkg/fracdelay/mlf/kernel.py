"""
fracdelay | mlf | kernel.py

Delayed Mittag-Leffler kernels

    E^{a,b,tau}_{alpha,beta}(t) = L^-1[ s^(alpha - beta) / (s^alpha - a - b exp(-s tau)) ](t).

Expanding 1 / Q in powers of b exp(-s tau) / (s^alpha - a) gives, for t > 0, the
finite sum over delay steps

    sum_{0 <= k < t / tau} b^k g_k(t - k tau),
    g_k(u) = L^-1[ s^(alpha - beta) / (s^alpha - a)^(k + 1) ](u),

and each g_k is a contour integral whose only singularities are the branch cut
and the real pole a^(1/alpha) (a > 0). The arc radius of step k is scaled to
u = t - k tau, so exp(u s) stays bounded on the arc for every t.
"""

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from fracdelay.core import Beta, ProblemParams
from fracdelay.error import ContourDegenerate, DomainError
from fracdelay.utils.fd_logger import FracDelayLogger

from .contour import ContourSpec, arc_nodes, ray_nodes

log = FracDelayLogger()

DEFAULT_CONTOUR = ContourSpec()
PRECISION_LIMIT = 20.0  # u a^(1/alpha) beyond which exp(u mu) swamps the result


@dataclass(frozen=True)
class KernelQuery:
    """One kernel value: E^{a,b,tau}_{alpha,beta}(t), beta in {1, alpha}."""

    p: ProblemParams
    beta: Beta
    t: float

    def __post_init__(self):
        if not isinstance(self.beta, Beta):
            raise DomainError(f"beta must be Beta.ONE or Beta.ALPHA, got {self.beta!r}.")
        if not (math.isfinite(self.t) and self.t > 0):
            raise DomainError(f"Kernel time t = {self.t} must be positive.")


def _steps(p: ProblemParams, t: float):
    """Delay steps k with u = t - k tau > 0."""
    count = 1 if p.b == 0 else int(math.ceil(t / p.tau))
    ks = np.arange(count)
    u = t - ks * p.tau
    keep = u > 0
    return ks[keep], u[keep]


def _arc_radius(p: ProblemParams, beta_value: float, ks, u, contour: ContourSpec):
    pole = p.a ** (1.0 / p.alpha) if p.a > 0 else None
    if contour.mu is not None:
        mu = np.full(u.shape, float(contour.mu))
        if pole is not None and pole >= contour.mu:
            raise ContourDegenerate(
                f"pole a^(1/alpha) = {pole:.6g} is not inside the arc of radius {contour.mu:g}.",
                min_modulus=0.0,
            )
        return mu

    mu = np.maximum(1.0, p.alpha * ks + beta_value) / u
    if pole is not None:
        mu = np.maximum(mu, 2.0 * pole)
        if float(np.max(u)) * pole > PRECISION_LIMIT:
            log.debug(f"t a^(1/alpha) = {float(np.max(u)) * pole:.3g}; kernel value "
                      "carries cancellation from exp(t mu)", "kernel")
    return mu


def _step_integrals(
    p: ProblemParams, beta_value: float, t: float, contour: ContourSpec, lower: bool = False
) -> np.ndarray:
    """
    b^k times the integral of s^(alpha-beta) exp(u s) / (s^alpha - a)^(k+1) ds
    over the upper half of the contour, one entry per delay step. With
    lower=True the mirrored lower half is integrated instead.
    """
    ks, u = _steps(p, t)
    if ks.size == 0:
        return np.zeros(0, dtype=complex)
    mu = _arc_radius(p, beta_value, ks, u, contour)

    z_arc, w_arc = arc_nodes(contour)
    if contour.ray_truncation is None:
        ends = np.full(mu.shape, 2.0 ** contour.ray_doublings)
    else:
        ends = 1.0 + contour.ray_truncation / mu
    z_ray, w_ray = ray_nodes(contour, ends)

    rows = ks.size
    s_arc = mu[:, None] * z_arc[None, :]
    ds_arc = mu[:, None] * w_arc[None, :]
    s_ray = mu[:, None, None] * z_ray
    ds_ray = mu[:, None, None] * w_ray
    if lower:
        s_arc, ds_arc = np.conj(s_arc), -np.conj(ds_arc)
        s_ray, ds_ray = np.conj(s_ray), -np.conj(ds_ray)

    if p.b == 0:
        log_b, sign = np.zeros(rows), np.ones(rows)
    else:
        log_b = ks * math.log(abs(p.b))
        sign = np.where((p.b < 0) & (ks % 2 == 1), -1.0, 1.0)

    def integrand(s, extra_dims):
        shape = (rows,) + (1,) * extra_dims
        log_s = np.log(s)
        gap = np.exp(p.alpha * log_s) - p.a
        min_gap = float(np.min(np.abs(gap)))
        if min_gap < contour.contour_margin:
            raise ContourDegenerate(
                f"|s^alpha - a| = {min_gap:.3g} on the contour; a pole sits on it.",
                min_modulus=min_gap,
            )
        exponent = (
            (p.alpha - beta_value) * log_s
            + u.reshape(shape) * s
            - (ks.reshape(shape) + 1) * np.log(gap)
            + log_b.reshape(shape)
        )
        return np.exp(exponent)

    f_arc = integrand(s_arc, 1)
    f_ray = integrand(s_ray, 2)

    # Relative truncation per row: drop ray panels after the first one whose
    # integrand stays below truncation_tol times everything seen before it.
    panel_max = np.max(np.abs(f_ray), axis=2)
    running = np.maximum.accumulate(
        np.concatenate([np.max(np.abs(f_arc), axis=1)[:, None], panel_max], axis=1), axis=1
    )[:, :-1]
    negligible = panel_max < contour.truncation_tol * running
    keep = (np.cumsum(negligible, axis=1) - negligible) == 0
    if contour.ray_truncation is None and np.any(keep[:, -1] & ~negligible[:, -1]):
        log.debug("ray panels exhausted before the truncation tolerance", "kernel")

    total = np.sum(f_arc * ds_arc, axis=1) + np.sum(
        np.where(keep[..., None], f_ray * ds_ray, 0.0), axis=(1, 2)
    )
    if not np.all(np.isfinite(total)):
        raise ContourDegenerate("non-finite contour quadrature; the kernel overflows.")
    return sign * total


def kernel_value(
    p: ProblemParams, beta_value: float, t: float, contour: ContourSpec = DEFAULT_CONTOUR
) -> float:
    """
    Inverse Laplace transform of s^(alpha - beta) / Q(s) at t for any real beta;
    0 for t <= 0. beta = alpha + 1 and alpha + 2 give the first and second
    integrals of the beta = alpha kernel.
    """
    if t <= 0:
        return 0.0
    upper = _step_integrals(p, beta_value, t, contour)
    return float(np.sum(upper.imag) / math.pi)


def contour_integral(
    p: ProblemParams, beta: Beta, t: float, contour: ContourSpec = DEFAULT_CONTOUR
) -> complex:
    """
    The raw quadrature (1 / 2 pi i) times the integral over both halves of the
    contour, without using conjugate symmetry. Its imaginary part measures
    the asymmetry of the quadrature.
    """
    query = KernelQuery(p, beta, t)
    beta_value = query.beta.value_for(p.alpha)
    upper = _step_integrals(p, beta_value, query.t, contour)
    lower = _step_integrals(p, beta_value, query.t, contour, lower=True)
    return complex(np.sum(upper + lower) / (2j * math.pi))


def _warn_precision(p: ProblemParams, t_max: float) -> None:
    if p.a > 0 and t_max * p.a ** (1.0 / p.alpha) > PRECISION_LIMIT:
        log.warn(
            f"t a^(1/alpha) = {t_max * p.a ** (1.0 / p.alpha):.3g} > {PRECISION_LIMIT:g}; "
            "kernel values lose relative precision to the growing exponential.",
            "kernel",
        )


def eval_kernel(q: KernelQuery, c: Optional[ContourSpec] = None) -> float:
    """E^{a,b,tau}_{alpha,beta}(t) for beta in {1, alpha}."""
    contour = c or DEFAULT_CONTOUR
    _warn_precision(q.p, q.t)
    return kernel_value(q.p, q.beta.value_for(q.p.alpha), q.t, contour)


def eval_kernel_batch(
    p: ProblemParams,
    beta: Beta,
    t_grid: Sequence[float],
    c: Optional[ContourSpec] = None,
    max_workers: Optional[int] = None,
) -> np.ndarray:
    """
    Kernel values on a grid, evaluated concurrently; results keep the input order.
    """
    contour = c or DEFAULT_CONTOUR
    queries = [KernelQuery(p, beta, float(t)) for t in t_grid]
    if not queries:
        return np.zeros(0)
    _warn_precision(p, max(query.t for query in queries))
    beta_value = beta.value_for(p.alpha)

    with ThreadPoolExecutor(max_workers=max_workers) as executor:
        values = list(executor.map(
            lambda query: kernel_value(p, beta_value, query.t, contour), queries
        ))
    return np.array(values, dtype=float)


def integrated_kernel_grid(
    p: ProblemParams,
    order: int,
    t_grid: Sequence[float],
    c: Optional[ContourSpec] = None,
    max_workers: Optional[int] = None,
) -> np.ndarray:
    """
    order-fold integral from 0 of E^{a,b,tau}_{alpha,alpha} on a grid (order 1 or 2);
    values at t <= 0 are 0.
    """
    if order not in (1, 2):
        raise ValueError(f"integration order {order} is not supported.")
    contour = c or DEFAULT_CONTOUR
    beta_value = p.alpha + order
    with ThreadPoolExecutor(max_workers=max_workers) as executor:
        values = list(executor.map(
            lambda t: kernel_value(p, beta_value, float(t), contour), t_grid
        ))
    return np.array(values, dtype=float)
