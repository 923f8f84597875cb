"""Critical temperatures against field strength.

T1 is where the concurrence vanishes, T2 where the resource stops beating
classical teleportation; for gamma > 0 T2 touches zero at eta = sqrt(1 - gamma^2).

Run: python3 demos/critical_temperatures.py
"""
import numpy as np

from xychain import criticality as cr

for gamma in (0.0, 0.5):
    print(f"gamma = {gamma}, eta_c = {cr.eta_critical(gamma):.4f}")
    for eta in np.linspace(0, 2, 9):
        t1 = cr.t1_critical(gamma, eta).value
        t2 = cr.t2_critical(gamma, eta).value
        fmt = lambda v: "   absent" if v is None else f"{v:9.5f}"
        print(f"  eta {eta:4.2f}: T1 {fmt(t1)}  T2 {fmt(t2)}")

print("eta = 100, gamma = 0.2: T2", cr.t2_critical(0.2, 100).value, "asymptote", cr.t2_asymptote(0.2, 100))
