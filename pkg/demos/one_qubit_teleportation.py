"""Teleporting one qubit through a thermal resource.

The resource acts as a Pauli channel; averaging over the Bloch sphere with
quadrature reproduces (2F + 1)/3 for the best correction.

Run: python3 demos/one_qubit_teleportation.py
"""
from xychain import teleport as tp
from xychain.spinmodel import ModelParams, thermal_state

for gamma, eta, T in ((0.0, 0.5, 0.5), (0.0, 2.0, 0.5), (1.0, 2.0, 1.0), (0.5, 0.3, 3.0)):
    p = ModelParams(gamma=gamma, eta=eta, T=T)
    chi = thermal_state(p)
    quad = [tp.avg_fidelity_quadrature(chi, m) for m in range(4)]
    print(f"gamma={gamma} eta={eta} T={T}: per-correction", " ".join(f"{f:.4f}" for f in quad),
          f"| closed max {tp.max_fidelity_closed(p):.4f} | useful {tp.useful_for_teleportation(p)}")
