"""Two-qubit anisotropic XY chain in a longitudinal field.

    H = (1+g)J/2 XX + (1-g)J/2 YY + B/2 (ZI + IZ),   B = eta*J

The spectrum is {+Bc, +J, -J, -Bc} with Bc = sqrt(B**2 + g**2 J**2). Every
thermal quantity is a function of the four Boltzmann factors, so this module
also carries the log-domain helpers used by the closed forms, which must stay
finite for beta*J in the hundreds.
"""
from dataclasses import dataclass, replace
import math

import numpy as np

from .smallmat import PAULI, expm, kron

KET00 = np.array([1, 0, 0, 0], dtype=complex)
KET11 = np.array([0, 0, 0, 1], dtype=complex)

_DEGENERATE_FIELD = 1e-12
TIE_TOL = 1e-12


@dataclass(frozen=True)
class ModelParams:
    """Physical configuration. Temperatures are in the same units as ``J`` (k_B = 1)."""

    J: float = 1.0
    gamma: float = 0.0
    eta: float = 0.0
    T: float = 1.0

    def __post_init__(self):
        if self.J == 0:
            raise ValueError("coupling J must be nonzero")
        if self.T < 0:
            raise ValueError("temperature must be non-negative")

    @classmethod
    def from_beta(cls, beta_j, J=1.0, gamma=0.0, eta=0.0):
        """Build from the dimensionless inverse temperature ``beta*|J|``."""
        if beta_j <= 0:
            raise ValueError("beta*J must be positive")
        return cls(J=J, gamma=gamma, eta=eta, T=abs(J) / beta_j)

    @property
    def field(self):
        return self.eta * self.J

    @property
    def bcal(self):
        return abs(self.J) * math.hypot(self.eta, self.gamma)

    @property
    def radius(self):
        """sqrt(eta**2 + gamma**2); compared against 1 to pick the ground state."""
        return math.hypot(self.eta, self.gamma)

    @property
    def beta(self):
        if self.T <= 0:
            raise ValueError("beta is undefined at T = 0")
        return 1.0 / self.T

    @property
    def Z(self):
        b = self.beta
        return 2.0 * math.cosh(b * self.bcal) + 2.0 * math.cosh(b * self.J)

    def with_(self, **changes):
        return replace(self, **changes)

    def flipped(self):
        """The (eta, gamma, J) -> (-eta, -gamma, -J) image."""
        return replace(self, eta=-self.eta, gamma=-self.gamma, J=-self.J)


@dataclass(frozen=True)
class Spectrum:
    energies: np.ndarray
    states: np.ndarray  # columns |Phi^0> .. |Phi^3>

    def projector(self, i):
        v = self.states[:, i]
        return np.outer(v, v.conj())


def hamiltonian(p):
    s0, s1, s2, s3 = PAULI
    J, g, b = p.J, p.gamma, p.field
    return (0.5 * (1 + g) * J * kron(s1, s1)
            + 0.5 * (1 - g) * J * kron(s2, s2)
            + 0.5 * b * (kron(s3, s0) + kron(s0, s3)))


def analytic_spectrum(p):
    J, g, b, bc = p.J, p.gamma, p.field, p.bcal
    gj = g * J
    if bc < _DEGENERATE_FIELD * abs(J):
        phi0, phi3 = KET00.copy(), KET11.copy()
    else:
        # (Bc + B, gJ) and (Bc - B, -gJ), rewritten where Bc -/+ B would cancel
        if b >= 0:
            phi0 = np.array([bc + b, 0, 0, gj], dtype=complex)
            phi3 = np.array([gj, 0, 0, -(bc + b)], dtype=complex)
        else:
            phi0 = np.array([gj, 0, 0, bc - b], dtype=complex)
            phi3 = np.array([bc - b, 0, 0, -gj], dtype=complex)
        phi0 /= np.linalg.norm(phi0)
        phi3 /= np.linalg.norm(phi3)
    r = 1 / math.sqrt(2)
    phi1 = np.array([0, r, r, 0], dtype=complex)
    phi2 = np.array([0, r, -r, 0], dtype=complex)
    return Spectrum(energies=np.array([bc, J, -J, -bc]),
                    states=np.column_stack([phi0, phi1, phi2, phi3]))


def boltzmann_weights(energies, beta):
    shifted = np.asarray(energies, dtype=float) - np.min(energies)
    w = np.exp(-beta * shifted)
    return w / w.sum()


def thermal_state(p):
    if p.T <= 0:
        raise ValueError("thermal_state needs T > 0; use ground_state for T = 0")
    spec = analytic_spectrum(p)
    w = boltzmann_weights(spec.energies, p.beta)
    v = spec.states
    return (v * w) @ v.conj().T


def thermal_state_expm(p):
    """Reference Gibbs state from the numerical exponential of -beta*H."""
    rho = expm(-p.beta * hamiltonian(p))
    return rho / np.trace(rho)


def ground_state(p, tie_tol=TIE_TOL):
    """Zero-temperature limit of the thermal state, with the equal mixture at the level crossing."""
    spec = analytic_spectrum(p)
    # lowest singlet-sector level is Phi^2 (energy -J) for J > 0, Phi^1 for J < 0
    pair = spec.projector(2 if p.J > 0 else 1)
    top = spec.projector(3)
    r = p.radius
    if abs(r - 1.0) <= tie_tol:
        return 0.5 * (pair + top)
    return pair if r < 1.0 else top


def trace_distance(a, b):
    d = np.asarray(a) - np.asarray(b)
    d = 0.5 * (d + d.conj().T)
    return 0.5 * float(np.sum(np.abs(np.linalg.eigvalsh(d))))


def is_density_matrix(rho, tol=1e-12):
    rho = np.asarray(rho)
    if rho.shape not in ((2, 2), (4, 4)):
        return False
    if np.max(np.abs(rho - rho.conj().T)) > tol:
        return False
    if abs(np.trace(rho) - 1) > tol:
        return False
    return bool(np.linalg.eigvalsh(0.5 * (rho + rho.conj().T))[0] >= -tol)


# --- log-domain helpers for the closed forms -------------------------------

def log_sinh(x):
    """log(sinh x) for x > 0."""
    if x > 20:
        return x - math.log(2.0) + math.log1p(-math.exp(-2 * x))
    return math.log(math.sinh(x))


def asinh_from_log(log_x):
    """asinh(exp(log_x)) without forming exp(log_x)."""
    if log_x < 20:
        return math.asinh(math.exp(log_x))
    return log_x + math.log1p(math.sqrt(1.0 + math.exp(-2 * log_x)))


def log_partition(p):
    b = p.beta
    y, k = b * p.bcal, b * p.J
    return float(np.logaddexp.reduce([y, -y, k, -k]))


def field_coupling_ratio(p):
    """gJ/Bc, the |00>-|11> mixing strength; 0 when there is no anisotropy."""
    if p.gamma == 0:
        return 0.0
    return math.copysign(1.0, p.J) * p.gamma / p.radius


def log_mixing(p):
    """Sign and log-magnitude of x = (gJ/Bc) sinh(beta*Bc).

    Below Bc < 1e-8 |J| the ratio is replaced by its series limit
    gJ*beta*(1 + (beta*Bc)**2/6) so nothing divides by a vanishing Bc.
    """
    if p.gamma == 0:
        return 0.0, -math.inf
    b = p.beta
    y = b * p.bcal
    sign = math.copysign(1.0, p.gamma * p.J)
    if p.bcal < 1e-8 * abs(p.J) and y < 1e-4:
        return sign, (math.log(abs(p.gamma)) + math.log(abs(p.J)) + math.log(b)
                      + math.log1p(y * y / 6))
    return sign, math.log(abs(field_coupling_ratio(p))) + log_sinh(y)


def log_bell_weights(p):
    """Log of the unnormalized Bell overlaps (Z * <Psi^i|chi|Psi^i>), i = 0..3.

    Index 0 and 3 are cosh(beta*Bc) -+ x, index 1 and 2 are exp(-+beta*J).
    """
    b = p.beta
    y, k = b * p.bcal, b * p.J
    g = field_coupling_ratio(p)
    # cosh y + s*g sinh y = ((1 + s g) e^y + (1 - s g) e^-y) / 2
    def cosh_pm(s):
        hi, lo = 1 + s * g, 1 - s * g
        terms = []
        if hi > 0:
            terms.append(y + math.log(hi / 2))
        if lo > 0:
            terms.append(-y + math.log(lo / 2))
        return float(np.logaddexp.reduce(terms))

    if p.bcal < 1e-8 * abs(p.J) and y < 1e-4:
        sign, lx = log_mixing(p)
        x = sign * math.exp(lx) if lx > -math.inf else 0.0
        c = math.cosh(y)
        return np.array([math.log(c - x), -k, k, math.log(c + x)])
    return np.array([cosh_pm(-1), -k, k, cosh_pm(+1)])
