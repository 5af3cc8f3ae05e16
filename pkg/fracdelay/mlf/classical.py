"""
fracdelay | mlf | classical.py

The two-parameter Mittag-Leffler function E_{alpha,beta}(z) for real z. With
b = 0 the delayed kernels reduce to t^(beta-1) E_{alpha,beta}(a t^alpha).
"""

import math

import numpy as np
from scipy import integrate, special

from fracdelay.error import DomainError

SERIES_SWITCH = 1.0
SERIES_MAX_TERMS = 1000
QUAD_RTOL = 1e-12


def _series(alpha: float, beta: float, z: float) -> float:
    total = 0.0
    power = 1.0
    for k in range(SERIES_MAX_TERMS):
        term = power * special.rgamma(alpha * k + beta)
        total += term
        if k > 2 and abs(term) <= 1e-17 * max(abs(total), 1e-300):
            break
        power *= z
        if power == 0.0:
            break
    return float(total)


def _integral_kernel(alpha: float, beta: float, z: float):
    """
    Integrand on (0, inf) of the real integral representation, valid for
    0 < alpha < 1, beta < 1 + alpha and z != 0.
    """
    cos_pa = math.cos(math.pi * alpha)
    sin_1 = math.sin(math.pi * (1.0 - beta))
    sin_2 = math.sin(math.pi * (1.0 - beta + alpha))
    exponent = (1.0 - beta) / alpha

    def kernel(chi):
        numerator = chi * sin_1 - z * sin_2
        denominator = chi * chi - 2.0 * chi * z * cos_pa + z * z
        return (
            chi**exponent * math.exp(-(chi ** (1.0 / alpha))) * numerator / denominator
        ) / (alpha * math.pi)

    return kernel


def _integral(alpha: float, beta: float, z: float) -> float:
    kernel = _integral_kernel(alpha, beta, z)
    split = abs(z)
    head, _ = integrate.quad(kernel, 0.0, split, epsabs=0.0, epsrel=QUAD_RTOL, limit=200)
    tail, _ = integrate.quad(kernel, split, np.inf, epsabs=0.0, epsrel=QUAD_RTOL, limit=200)
    value = head + tail
    if z > 0:
        value += z ** ((1.0 - beta) / alpha) * math.exp(z ** (1.0 / alpha)) / alpha
    return value


def eval_classical_ml(
    alpha: float, beta: float, z: float, series_switch: float = SERIES_SWITCH
) -> float:
    """
    E_{alpha,beta}(z) = sum_k z^k / Gamma(alpha k + beta).

    Power series for |z| <= series_switch; otherwise the real integral
    representation (plus the exponential term for z > 0), after lowering beta
    below 1 + alpha with E_{a,b}(z) = (E_{a,b-a}(z) - 1/Gamma(b-a)) / z.
    alpha = 1 is accepted on the series range only.
    """
    if not 0 < alpha <= 1:
        raise DomainError(f"alpha = {alpha} must lie in (0, 1].")
    if not math.isfinite(z):
        raise DomainError(f"z = {z} must be finite.")

    if abs(z) <= series_switch:
        return _series(alpha, beta, z)
    if alpha == 1:
        raise DomainError("alpha = 1 is supported for |z| <= series_switch only.")
    if beta <= 0:
        raise DomainError(f"beta = {beta} must be positive outside the series range.")

    if beta >= 1 + alpha:
        lowered = eval_classical_ml(alpha, beta - alpha, z, series_switch)
        return (lowered - float(special.rgamma(beta - alpha))) / z
    return _integral(alpha, beta, z)
