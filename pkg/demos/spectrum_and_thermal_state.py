"""The two-qubit XY chain: spectrum, Gibbs state, and the zero-temperature limit.

Run: python3 demos/spectrum_and_thermal_state.py
"""
import numpy as np

from xychain import spinmodel as sm
from xychain.smallmat import eig_hermitian

np.set_printoptions(precision=4, suppress=True)

p = sm.ModelParams(J=1.0, gamma=0.6, eta=0.8, T=0.5)
spec = sm.analytic_spectrum(p)
print("energies (closed form):", spec.energies)
print("energies (Jacobi):     ", eig_hermitian(sm.hamiltonian(p)).values)
print("|Phi0> =", spec.states[:, 0].real)

# The spectral Gibbs state and the one from exponentiating -beta*H agree to rounding.
rho = sm.thermal_state(p)
print("trace distance to expm(-beta H)/Z:", sm.trace_distance(rho, sm.thermal_state_expm(p)))

# Cooling towards the level crossing at eta^2 + gamma^2 = 1.
for bj in (1, 5, 20, 60):
    cold = p.with_(T=1 / bj)
    print(f"beta J = {bj:2d}: distance to ground state mixture",
          f"{sm.trace_distance(sm.thermal_state(cold), sm.ground_state(cold)):.2e}")
