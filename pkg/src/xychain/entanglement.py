"""Concurrence, Bell-basis overlaps and the fully entangled fraction."""
import math

import numpy as np

from . import spinmodel
from .smallmat import PAULI, eig_hermitian, kron, singular_values

_R = 1 / math.sqrt(2)
BELL_BASIS = np.array([
    [_R, 0, 0, _R],
    [0, _R, _R, 0],
    [0, _R, -_R, 0],
    [_R, 0, 0, -_R],
], dtype=complex)
"""Rows are |Psi^0> .. |Psi^3>, with |Psi^i> proportional to (1 x sigma^i)|Psi^0>."""

SPIN_FLIP = kron(PAULI[2], PAULI[2])

_PSD_TOL = 1e-12


def wootters_lambdas(rho):
    """Square roots of the eigenvalues of rho (Y x Y) rho* (Y x Y), descending.

    With rho = W W^H (W = eigenvectors scaled by sqrt of eigenvalues), these
    are the singular values of the symmetric matrix W^T (Y x Y) W.
    """
    rho = np.asarray(rho, dtype=complex)
    dec = eig_hermitian(rho)
    if dec.values[-1] < -_PSD_TOL:
        raise ValueError(f"density matrix has eigenvalue {dec.values[-1]:.3g} < 0")
    w = dec.vectors * np.sqrt(np.clip(dec.values, 0.0, None))
    tau = w.T @ SPIN_FLIP @ w
    return singular_values(tau)


def concurrence(rho):
    lam = wootters_lambdas(rho)
    return max(lam[0] - lam[1] - lam[2] - lam[3], 0.0)


def pure_concurrence(psi):
    """2|ad - bc| for psi = a|00> + b|01> + c|10> + d|11>."""
    a, b, c, d = np.asarray(psi, dtype=complex)
    return 2 * abs(a * d - b * c) / np.vdot(psi, psi).real


def _log_lambdas(p):
    """Log of Z times the closed-form thermal lambdas, unsorted.

    The pair sqrt(1 + 2x^2 +- 2x sqrt(1 + x^2)) is sqrt(1 + x^2) +- x, i.e.
    exp(+-asinh x), which avoids the cancellation in the smaller one.
    """
    k = p.beta * p.J
    sign, lx = spinmodel.log_mixing(p)
    a = sign * spinmodel.asinh_from_log(lx) if lx > -math.inf else 0.0
    return np.array([k, -k, a, -a])


def thermal_lambdas_closed(p):
    if p.T <= 0:
        raise ValueError("closed forms need T > 0")
    ell = np.sort(_log_lambdas(p))[::-1]
    return np.exp(ell - spinmodel.log_partition(p))


def concurrence_margin(p):
    """(l1 - l2 - l3 - l4) / l1 from the closed form; its sign decides entanglement."""
    ell = np.sort(_log_lambdas(p))[::-1]
    return 1.0 - float(np.sum(np.exp(ell[1:] - ell[0])))


def thermal_concurrence_closed(p):
    if p.T <= 0:
        raise ValueError("closed forms need T > 0")
    ell = np.sort(_log_lambdas(p))[::-1]
    margin = 1.0 - float(np.sum(np.exp(ell[1:] - ell[0])))
    if margin <= 0:
        return 0.0
    return math.exp(ell[0] - spinmodel.log_partition(p)) * margin


def isotropic_concurrence(p):
    """gamma = 0 thermal concurrence, (sinh bJ - 1)/(cosh bB + cosh bJ) clipped at 0."""
    b = p.beta
    val = (math.sinh(b * p.J) - 1) / (math.cosh(b * p.field) + math.cosh(b * p.J))
    return max(val, 0.0)


def bell_overlaps(rho):
    rho = np.asarray(rho, dtype=complex)
    probs = np.real(np.einsum("ij,jk,ik->i", BELL_BASIS.conj(), rho, BELL_BASIS))
    return np.clip(probs, 0.0, 1.0)


def fef(rho):
    return float(np.max(bell_overlaps(rho)))


def bell_overlaps_closed(p):
    if p.T <= 0:
        raise ValueError("closed forms need T > 0")
    return np.exp(spinmodel.log_bell_weights(p) - spinmodel.log_partition(p))


def fef_closed(p):
    return float(np.max(bell_overlaps_closed(p)))
