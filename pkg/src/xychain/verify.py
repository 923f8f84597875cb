"""Cross-checks of every closed form against its brute-force counterpart.

Each check returns a :class:`Check` with the worst deviation seen and the
tolerance it was held to; :func:`run_all` is what ``xychain verify`` prints.
"""
from dataclasses import dataclass
import math

import numpy as np

from . import entanglement as ent
from . import spinmodel as sm
from . import teleport as tp


@dataclass(frozen=True)
class Check:
    name: str
    worst: float
    tol: float

    @property
    def passed(self):
        return bool(self.worst < self.tol)

    def line(self):
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.name}: worst {self.worst:.3e} (tol {self.tol:.0e})"


def random_params(rng, n, beta_max=50.0):
    """Points with gamma in [-1, 1], eta in [-3, 3], beta|J| in (0, beta_max], J in {+-1, +-2}."""
    out = []
    for _ in range(n):
        J = float(rng.choice([-2.0, -1.0, 1.0, 2.0]))
        beta_j = beta_max * (1.0 - rng.random())
        out.append(sm.ModelParams.from_beta(beta_j, J=J, gamma=rng.uniform(-1, 1),
                                            eta=rng.uniform(-3, 3)))
    return out


def check_thermal_state(points):
    worst = max(sm.trace_distance(sm.thermal_state(p), sm.thermal_state_expm(p)) for p in points)
    return Check("thermal state vs expm(-beta H)/Z (trace distance)", worst, 1e-10)


def check_concurrence(points):
    worst = max(abs(ent.concurrence(sm.thermal_state_expm(p)) - ent.thermal_concurrence_closed(p))
                for p in points)
    return Check("Wootters concurrence vs closed form", worst, 1e-9)


def check_fef(points):
    worst = max(abs(ent.fef(sm.thermal_state(p)) - ent.fef_closed(p)) for p in points)
    return Check("fully entangled fraction vs closed form", worst, 1e-11)


def check_quadrature(points):
    worst = 0.0
    for p in points:
        chi = sm.thermal_state(p)
        best = max(tp.avg_fidelity_quadrature(chi, m) for m in range(4))
        worst = max(worst, abs(best - tp.max_fidelity_closed(p)))
    return Check("max quadrature fidelity vs (2F+1)/3", worst, 1e-10)


def check_partial_fidelity(points):
    worst = 0.0
    for p in points:
        chi = sm.thermal_state(p)
        m, n = tp.best_corrections(p)
        for xi in np.linspace(0, math.pi / 2, 5):
            psi = tp.partial_input_state(xi)
            out = tp.channel_2q(chi, chi, m, n, np.outer(psi, psi.conj()))
            direct = float(np.real(np.vdot(psi, out @ psi)))
            worst = max(worst, abs(direct - tp.partial_output_fidelity_closed(p, xi)))
    return Check("partial-input output fidelity vs direct channel", worst, 1e-10)


def check_monte_carlo(points, samples, seed):
    """Largest |MC - closed| in units of its standard error."""
    worst = 0.0
    for p in points:
        probs = ent.bell_overlaps_closed(p)
        m = (4 - int(np.argmax(probs))) % 4
        est, err = tp.ent_fidelity_mc(p, m, m, samples=samples, seed=seed)
        worst = max(worst, abs(est - tp.max_ent_fidelity_closed(p)) / max(err, 1e-300))
    return Check("two-qubit MC fidelity vs (1+4F^2)/5 (in stderr)", worst, 3.0)


def run_all(grid=1000, seed=7, mc_samples=1_000_000, mc_points=3):
    rng = np.random.default_rng(seed)
    points = random_params(rng, grid)
    small = points[:min(grid, 100)]
    mc = [sm.ModelParams.from_beta(float(rng.uniform(0.2, 5)), gamma=float(rng.uniform(0, 1)),
                                   eta=float(rng.uniform(0, 2))) for _ in range(mc_points)]
    return [
        check_thermal_state(points),
        check_concurrence(points),
        check_fef(points),
        check_quadrature(small),
        check_partial_fidelity(small),
        check_monte_carlo(mc, mc_samples, seed),
    ]
