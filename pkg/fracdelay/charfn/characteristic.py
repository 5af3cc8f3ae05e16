"""
fracdelay | charfn | characteristic.py

Q(s) = s^alpha - a - b exp(-s tau) on the principal branch, its derivatives, and
the nonnegative real root that exists whenever a + b >= 0.
"""

from typing import Optional

import numpy as np
from scipy import optimize

from fracdelay.core import ProblemParams
from fracdelay.error import BracketingFailed, DomainError
from fracdelay.utils.fd_logger import FracDelayLogger

log = FracDelayLogger()

ROOT_RESIDUAL_TOL = 1e-10


def principal_power(s, exponent: float):
    """
    s**exponent with arg s in (-pi, pi]; 0**exponent := 0 for exponent > 0.
    """
    scalar = np.ndim(s) == 0
    # adding 0j turns a -0.0 imaginary part into +0.0, keeping the negative axis at +pi
    s_arr = np.atleast_1d(np.asarray(s, dtype=complex)) + 0j
    out = np.zeros_like(s_arr)
    nonzero = s_arr != 0
    out[nonzero] = np.exp(exponent * np.log(s_arr[nonzero]))
    if exponent <= 0 and np.any(~nonzero):
        raise DomainError(f"0 raised to the power {exponent} is undefined.")
    return complex(out[0]) if scalar else out


def eval_Q(p: ProblemParams, s):
    """Q(s) for scalar or array s."""
    s_arr = np.asarray(s, dtype=complex)
    value = principal_power(s_arr, p.alpha) - p.a - p.b * np.exp(-s_arr * p.tau)
    return complex(value) if np.ndim(value) == 0 else value


def eval_Q_derivative(p: ProblemParams, s, order: int):
    """
    d^n Q / ds^n for n = 1, 2, 3 (s != 0):
    (alpha)_n s^(alpha - n) - b (-tau)^n exp(-s tau), (alpha)_n the falling factorial.
    """
    if order not in (1, 2, 3):
        raise ValueError(f"Derivative order {order} is not supported.")
    falling = float(np.prod([p.alpha - k for k in range(order)]))
    s_arr = np.asarray(s, dtype=complex)
    value = (
        falling * principal_power(s_arr, p.alpha - order)
        - p.b * (-p.tau) ** order * np.exp(-s_arr * p.tau)
    )
    return complex(value) if np.ndim(value) == 0 else value


def _q_real(p: ProblemParams, r: float) -> float:
    return r**p.alpha - p.a - p.b * np.exp(-r * p.tau)


def default_search_hi(p: ProblemParams) -> float:
    """An upper bracket with Q > 0: r^alpha >= |a| + |b| + 1 there."""
    return (abs(p.a) + abs(p.b) + 1.0) ** (1.0 / p.alpha) + 1.0


def find_nonnegative_real_root(
    p: ProblemParams,
    search_hi: Optional[float] = None,
    tol: float = ROOT_RESIDUAL_TOL,
    scan_points: int = 2049,
) -> Optional[float]:
    """
    A root r >= 0 of Q by bracketing on [0, search_hi] and bisection.

    With a + b >= 0, Q(0) = -(a + b) <= 0 and Q(r) -> +inf, so a root is
    bracketed once Q(search_hi) > 0; otherwise BracketingFailed. With a + b < 0
    the interval is scanned for a sign change and None is returned when there is none.
    """
    if search_hi is None:
        search_hi = default_search_hi(p)
    if search_hi <= 0:
        raise BracketingFailed(f"search_hi = {search_hi} must be positive.",
                               search_hi=search_hi)

    if p.b == 0 and p.a > 0:
        return float(p.a ** (1.0 / p.alpha))

    q_zero = -(p.a + p.b)
    if abs(q_zero) <= tol:
        return 0.0

    if q_zero < 0:
        q_hi = _q_real(p, search_hi)
        if q_hi <= 0:
            raise BracketingFailed(
                f"Q({search_hi}) = {q_hi:.6g} <= 0; enlarge search_hi to bracket the root.",
                search_hi=search_hi,
                q_hi=q_hi,
            )
        lo, hi = 0.0, search_hi
    else:
        grid = np.linspace(0.0, search_hi, scan_points)
        values = np.array([_q_real(p, r) for r in grid])
        changes = np.nonzero(np.sign(values[:-1]) * np.sign(values[1:]) <= 0)[0]
        if changes.size == 0:
            log.debug(f"no sign change of Q on [0, {search_hi}] with a + b < 0", "charfn")
            return None
        lo, hi = grid[changes[0]], grid[changes[0] + 1]

    root = optimize.bisect(lambda r: _q_real(p, r), lo, hi, xtol=1e-15, maxiter=400)
    residual = abs(_q_real(p, root))
    if residual > tol:
        log.warn(f"real root {root:.15g} has residual {residual:.3g} > {tol:g}", "charfn")
    return float(root)


def imaginary_bound(p: ProblemParams, re_lo: float = 0.0) -> float:
    """
    T0 such that Q has no zero with Re s >= re_lo and |Im s| >= T0:
    there |s^alpha| >= T0^alpha > |a| + |b| exp(-re_lo tau) >= |a + b exp(-s tau)|.
    """
    reach = abs(p.a) + abs(p.b) * np.exp(-re_lo * p.tau)
    return float((reach * 1.01 + 1e-8) ** (1.0 / p.alpha))
