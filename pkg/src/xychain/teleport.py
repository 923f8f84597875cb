"""Teleportation through thermal XY-chain resources.

One-qubit standard teleportation with a mixed resource acts as a Pauli
channel whose weights are the resource's Bell overlaps; the two-qubit
protocol runs two such channels in parallel. Correction labels compose with
the Bell index by addition modulo 4.
"""
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
import math

import numpy as np

from . import spinmodel
from .entanglement import bell_overlaps, bell_overlaps_closed, fef_closed
from .smallmat import PAULI, kron

MC_CHUNK = 4096
_DRAWS_PER_SAMPLE = 6

# sigma^a sigma^k sigma^a = SIGN[a, k] sigma^k
PAULI_CONJ_SIGN = np.array([
    [1, 1, 1, 1],
    [1, 1, -1, -1],
    [1, -1, 1, -1],
    [1, -1, -1, 1],
], dtype=float)


@dataclass(frozen=True)
class BlochPureState:
    theta: float
    phi: float

    @property
    def ket(self):
        return np.array([math.cos(self.theta / 2),
                         np.exp(1j * self.phi) * math.sin(self.theta / 2)])

    @property
    def density(self):
        k = self.ket
        return np.outer(k, k.conj())


@dataclass(frozen=True)
class TwoQubitPureParams:
    """Angles of a general two-qubit pure state: entangling (mu, nu) plus two local frames."""

    mu: float
    nu: float
    theta1: float
    phi1: float
    theta2: float
    phi2: float


def _check_index(m):
    if m not in (0, 1, 2, 3):
        raise ValueError(f"Pauli correction index must be 0..3, got {m!r}")


def shifted_weights(probs, m):
    """Weight carried by each Pauli sigma^k: sum of p_i with (i + m) % 4 == k."""
    _check_index(m)
    return np.roll(np.asarray(probs, dtype=float), m)


def channel_1q(resource, m, psi):
    w = shifted_weights(bell_overlaps(resource), m)
    rho = psi.density if isinstance(psi, BlochPureState) else np.asarray(psi)
    return sum(w[k] * PAULI[k] @ rho @ PAULI[k] for k in range(4))


def _sphere_rule(n_theta=32, n_phi=64):
    x, wx = np.polynomial.legendre.leggauss(n_theta)
    t, wt = np.polynomial.legendre.leggauss(n_phi)
    phi = math.pi * (t + 1)
    wphi = math.pi * wt
    # d(psi) = d(cos theta) d(phi) / (4 pi)
    return np.arccos(x), phi, np.outer(wx, wphi) / (4 * math.pi)


def avg_fidelity_quadrature(resource, m):
    """Bloch-sphere average of <psi|channel(psi)|psi> by tensor Gauss-Legendre quadrature."""
    theta, phi, weights = _sphere_rule()
    w = shifted_weights(bell_overlaps(resource), m)
    th, ph = np.meshgrid(theta, phi, indexing="ij")
    kets = np.stack([np.cos(th / 2), np.exp(1j * ph) * np.sin(th / 2)], axis=-1)
    fid = np.zeros(th.shape)
    for k in range(4):
        moved = kets @ PAULI[k].T
        fid += w[k] * np.abs(np.sum(kets.conj() * moved, axis=-1)) ** 2
    return float(np.sum(weights * fid))


def avg_fidelity_pauli(resource, m):
    """Closed Pauli-channel average: (2 w_0 + 1) / 3 with w_0 the identity weight."""
    w = shifted_weights(bell_overlaps(resource), m)
    return (2 * w[0] + 1) / 3


def max_fidelity_closed(p):
    return (2 * fef_closed(p) + 1) / 3


def useful_for_teleportation(p):
    return fef_closed(p) > 0.5 + 1e-12


def usefulness_inequality(p):
    """Direct evaluation of the region-wise usefulness inequalities.

    Inside the unit disc (eta^2 + gamma^2 < 1) the condition is
    sinh(bJ) > cosh(bBc); outside it is (g/r) sinh(bBc) > cosh(bJ). Stated
    for J > 0; other signs are mapped there first.
    """
    if p.J < 0:
        p = p.flipped()
    b, J, bc, r = p.beta, p.J, p.bcal, p.radius
    if r < 1:
        return math.sinh(b * J) > math.cosh(b * bc)
    if r > 1:
        return abs(p.gamma) / r * math.sinh(b * bc) > math.cosh(b * J)
    return False


# --- two-qubit protocol -----------------------------------------------------

def _frame(theta, phi):
    st, ct, sp, cp = np.sin(theta), np.cos(theta), np.sin(phi), np.cos(phi)
    zero = np.zeros_like(st)
    r = np.stack([st * cp, st * sp, ct], axis=-1)
    k = np.stack([sp, -cp, zero], axis=-1)
    l = np.stack([ct * cp, ct * sp, -st], axis=-1)
    return r, k, l


def pauli_coefficients_2q(mu, nu, theta1, phi1, theta2, phi2):
    """Coefficients c[..., a, b] with rho = (1/4) sum_ab c_ab sigma^a x sigma^b.

    Accepts scalars or equally shaped arrays for batch evaluation.
    """
    mu, nu = np.asarray(mu, dtype=float), np.asarray(nu, dtype=float)
    r1, k1, l1 = _frame(np.asarray(theta1, dtype=float), np.asarray(phi1, dtype=float))
    r2, k2, l2 = _frame(np.asarray(theta2, dtype=float), np.asarray(phi2, dtype=float))
    outer = lambda u, v: u[..., :, None] * v[..., None, :]
    sm, cm = np.sin(mu)[..., None, None], np.cos(mu)[..., None]
    cn, sn = np.cos(nu)[..., None, None], np.sin(nu)[..., None, None]
    c = np.zeros(mu.shape + (4, 4))
    c[..., 0, 0] = 1.0
    c[..., 1:, 0] = cm * r1
    c[..., 0, 1:] = cm * r2
    c[..., 1:, 1:] = (outer(r1, r2)
                      + sm * cn * (outer(k1, k2) - outer(l1, l2))
                      - sm * sn * (outer(k1, l2) + outer(l1, k2)))
    return c


_PAULI_PAIRS = np.array([[kron(PAULI[a], PAULI[b]) for b in range(4)] for a in range(4)])


def input_state_2q(q):
    c = pauli_coefficients_2q(q.mu, q.nu, q.theta1, q.phi1, q.theta2, q.phi2)
    return np.einsum("ab,abij->ij", c, _PAULI_PAIRS) / 4


def partial_input_state(xi):
    """cos(xi)|00> + sin(xi)|11> as a ket."""
    return np.array([math.cos(xi), 0, 0, math.sin(xi)], dtype=complex)


def partial_input_params(xi):
    """Angles reproducing cos(xi)|00> + sin(xi)|11> for xi in [0, pi/2]."""
    return TwoQubitPureParams(mu=2 * xi, nu=math.pi, theta1=0.0, phi1=0.0, theta2=0.0, phi2=0.0)


def channel_2q(resource1, resource2, m, n, rho_in):
    w1 = shifted_weights(bell_overlaps(resource1), m)
    w2 = shifted_weights(bell_overlaps(resource2), n)
    rho_in = np.asarray(rho_in, dtype=complex)
    out = np.zeros((4, 4), dtype=complex)
    for a in range(4):
        for b in range(4):
            wt = w1[a] * w2[b]
            if wt:
                k = _PAULI_PAIRS[a, b]
                out += wt * k @ rho_in @ k
    return out


def overlap_from_coefficients(c, w1, w2):
    """tr[rho_in rho_out] from the Pauli coefficients of a pure input.

    Each Pauli conjugation only flips signs of coefficients, so the overlap
    is (1/4) sum_kl c_kl^2 u_k v_l with u = w1 @ SIGN and v = w2 @ SIGN.
    """
    u = np.asarray(w1) @ PAULI_CONJ_SIGN
    v = np.asarray(w2) @ PAULI_CONJ_SIGN
    return 0.25 * np.einsum("...kl,k,l->...", c * c, u, v)


def sample_angles(gen, size):
    """Inverse-transform draws from cos^2(mu) sin(mu) sin(theta1) sin(theta2) on the 6-box."""
    u = gen.random((size, _DRAWS_PER_SAMPLE))
    mu = np.arccos(np.cbrt(1 - 2 * u[:, 0]))
    nu = 2 * math.pi * u[:, 1]
    theta1 = np.arccos(1 - 2 * u[:, 2])
    phi1 = 2 * math.pi * u[:, 3]
    theta2 = np.arccos(1 - 2 * u[:, 4])
    phi2 = 2 * math.pi * u[:, 5]
    return mu, nu, theta1, phi1, theta2, phi2


def _chunk_generator(seed, chunk):
    # Philox draws four 64-bit words per counter step; sample i owns words
    # 6i .. 6i+5, so each chunk starts at a fixed counter offset.
    bitgen = np.random.Philox(key=seed)
    bitgen.advance(chunk * MC_CHUNK * _DRAWS_PER_SAMPLE // 4)
    return np.random.Generator(bitgen)


def _chunk_moments(seed, chunk, size, w1, w2, integrand):
    gen = _chunk_generator(seed, chunk)
    angles = sample_angles(gen, size)
    if integrand is None:
        vals = overlap_from_coefficients(pauli_coefficients_2q(*angles), w1, w2)
    else:
        vals = np.asarray(integrand(*angles), dtype=float)
    return float(np.sum(vals)), float(np.sum(vals * vals))


def ent_fidelity_mc(p, m, n, samples=1_000_000, seed=42, workers=None, integrand=None):
    """Monte Carlo estimate of the two-qubit teleportation fidelity.

    Returns ``(estimate, stderr)``. Samples are generated from a counter-based
    stream in fixed chunks and reduced in chunk order, so the estimate is
    bit-identical for any ``workers``. ``integrand`` overrides tr[rho_in rho_out]
    with a function of the six angle arrays (used to check the measure).
    """
    if samples < 2:
        raise ValueError("need at least two samples")
    probs = bell_overlaps_closed(p)
    w1 = shifted_weights(probs, m)
    w2 = shifted_weights(probs, n)
    sizes = [MC_CHUNK] * (samples // MC_CHUNK)
    if samples % MC_CHUNK:
        sizes.append(samples % MC_CHUNK)
    jobs = [(seed, i, s, w1, w2, integrand) for i, s in enumerate(sizes)]
    if workers and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            moments = list(pool.map(lambda a: _chunk_moments(*a), jobs))
    else:
        moments = [_chunk_moments(*a) for a in jobs]
    total = sq = 0.0
    for s1, s2 in moments:
        total += s1
        sq += s2
    mean = total / samples
    var = max(sq / samples - mean * mean, 0.0) * samples / (samples - 1)
    return mean, math.sqrt(var / samples)


def max_ent_fidelity_closed(p):
    f = fef_closed(p)
    return (1 + 4 * f * f) / 5


def best_corrections(p):
    """(m, n) used by the closed partial-input fidelity on each side of the unit circle."""
    return (2, 2) if p.radius <= 1 else (1, 1)


def partial_output_fidelity_closed(p, xi):
    """Fidelity of cos(xi)|00> + sin(xi)|11> after the two-chain protocol.

    Uses corrections (2, 2) for eta^2 + gamma^2 <= 1 and (1, 1) beyond,
    evaluated with every Boltzmann factor divided by exp(M) to avoid overflow.
    """
    if p.T <= 0:
        raise ValueError("closed forms need T > 0")
    b = p.beta
    y, k = b * p.bcal, b * p.J
    big = max(abs(y), abs(k))
    s2 = math.sin(2 * xi) ** 2
    e = lambda t: math.exp(t - big)
    z = e(y) + e(-y) + e(k) + e(-k)
    sign, lx = spinmodel.log_mixing(p)
    x = sign * math.exp(lx - big) if lx > -math.inf else 0.0   # (gJ/Bc) sinh y, scaled
    cosh_y = 0.5 * (e(y) + e(-y))
    if p.radius <= 1:
        cosh_k = 0.5 * (e(k) + e(-k))
        sinh_y = 0.5 * (e(y) - e(-y))
        g2 = spinmodel.field_coupling_ratio(p) ** 2
        num = 4 * cosh_k ** 2 + 2 * (1 + g2) * sinh_y ** 2 * s2
    else:
        ek = e(k)
        sinh_2k = 0.5 * (math.exp(2 * k - 2 * big) - math.exp(-2 * k - 2 * big))
        num = ((ek + cosh_y + x) ** 2
               + ((ek + cosh_y - x) ** 2 - 2 * sinh_2k - 4 * ek * cosh_y) * s2)
    return num / (z * z)
