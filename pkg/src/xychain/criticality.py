"""Critical fields and temperatures of the thermal XY chain.

Root finding is done in beta, where the defining functions are smooth, with
every test function normalised by its dominant exponential so the sign is
reliable for beta*J far beyond the overflow threshold.
"""
from dataclasses import dataclass
import math
from typing import Optional

import numpy as np

from .entanglement import concurrence_margin
from .spinmodel import ModelParams

T_LO = 1e-3
T_HI = 10.0
T_HI_MAX = 1e6
T_LO_MIN = 1e-8
REL_TOL = 1e-10
SCAN_POINTS = 1024


class CriticalityError(RuntimeError):
    """Raised when a defining function changes sign more than once."""


@dataclass(frozen=True)
class CriticalResult:
    value: Optional[float]
    bracket: tuple
    converged: bool
    sign_changes: int = 0


def eta_critical(gamma):
    if abs(gamma) > 1:
        raise ValueError("|gamma| must not exceed 1")
    return math.sqrt(1.0 - gamma * gamma)


def _reduce(gamma, eta, J):
    if J < 0:
        gamma, eta, J = -gamma, -eta, -J
    return gamma, eta, J


def _bisect_beta(f, b_lo, b_hi):
    """Root of f in [b_lo, b_hi] given f(b_lo) <= 0 < f(b_hi)."""
    while b_hi - b_lo > REL_TOL * b_hi:
        mid = 0.5 * (b_lo + b_hi)
        if f(mid) > 0:
            b_hi = mid
        else:
            b_lo = mid
    return 0.5 * (b_lo + b_hi)


def _critical_temperature(f, J, expand_low=False, strict=True):
    """Temperature above which f(beta) <= 0 for good.

    The bracket starts at T in (1e-3 J, 10 J); the upper end doubles while f
    is still positive there, giving up past 1e6 J. With ``expand_low`` the
    lower end is halved down to 1e-8 J while f is non-positive there. A
    1024-point geometric scan then locates the outermost sign change, which
    is refined by bisection in beta. ``strict`` turns more than one sign
    change into a ``CriticalityError``.
    """
    t_lo, t_hi = T_LO * J, T_HI * J
    if expand_low:
        while f(1.0 / t_lo) <= 0 and t_lo > T_LO_MIN * J:
            t_lo *= 0.5
    while f(1.0 / t_hi) > 0:
        t_hi *= 2.0
        if t_hi > T_HI_MAX * J:
            return CriticalResult(None, (t_lo, t_hi), False)

    temps = np.geomspace(t_lo, t_hi, SCAN_POINTS)
    signs = np.array([f(1.0 / t) > 0 for t in temps])
    if not signs.any():
        return CriticalResult(None, (t_lo, t_hi), True)
    flips = np.nonzero(signs[1:] != signs[:-1])[0]
    if strict and len(flips) > 1:
        raise CriticalityError(f"{len(flips)} sign changes found on ({t_lo:g}, {t_hi:g})")

    i = flips[-1]
    beta = _bisect_beta(f, 1.0 / temps[i + 1], 1.0 / temps[i])
    return CriticalResult(1.0 / beta, (t_lo, t_hi), True, len(flips))


def t1_critical(gamma, eta, J=1.0):
    """Temperature beyond which the thermal concurrence vanishes.

    Off the isotropic line the concurrence can vanish at an intermediate
    temperature and revive above it; the outermost zero is returned and
    ``sign_changes`` records how many were seen.
    """
    gamma, eta, J = _reduce(gamma, eta, J)

    def f(beta):
        return concurrence_margin(ModelParams(J=J, gamma=gamma, eta=eta, T=1.0 / beta))

    return _critical_temperature(f, J, strict=False)


def usefulness_margin(gamma, eta, J, beta):
    """Normalised margin of the usefulness inequality at inverse temperature beta.

    Inside the unit circle: sinh(bJ) - cosh(bBc), divided by e^{bJ}/2.
    Outside: (g/r) sinh(bBc) - cosh(bJ), divided by e^{bBc}/2.
    """
    r = math.hypot(eta, gamma)
    bc = J * r
    if r < 1:
        return (-math.expm1(-2 * beta * J) - math.exp(beta * (bc - J))
                - math.exp(-beta * (bc + J)))
    g = abs(gamma) / r
    return (-g * math.expm1(-2 * beta * bc) - math.exp(beta * (J - bc))
            - math.exp(-beta * (J + bc)))


def t2_critical(gamma, eta, J=1.0, tie_tol=1e-12):
    """Temperature at which the fully entangled fraction falls to 1/2."""
    gamma, eta, J = _reduce(gamma, eta, J)
    r = math.hypot(eta, gamma)
    if abs(r - 1.0) <= tie_tol:
        return CriticalResult(0.0, (0.0, 0.0), True)
    if r > 1 and gamma == 0:
        return CriticalResult(None, (T_LO * J, T_HI * J), True)
    return _critical_temperature(lambda b: usefulness_margin(gamma, eta, J, b), J,
                                 expand_low=True)


def t2_asymptote(gamma, eta, J=1.0):
    """Large-field form eta J / (ln eta - ln gamma + ln 2)."""
    if gamma <= 0:
        raise ValueError("asymptote needs gamma > 0")
    return eta * J / (math.log(eta) - math.log(gamma) + math.log(2.0))
