"""Teleporting an entangled pair through two independent chains.

The Monte Carlo average over random pure inputs is compared with (1 + 4F^2)/5,
and the partially entangled input cos(xi)|00> + sin(xi)|11> is followed as
its entanglement grows.

Run: python3 demos/two_qubit_teleportation.py
"""
import math

import numpy as np

from xychain import teleport as tp
from xychain.spinmodel import ModelParams

p = ModelParams.from_beta(1.0)
est, err = tp.ent_fidelity_mc(p, 2, 2, samples=200_000, seed=42)
print(f"MC {est:.5f} +- {err:.5f}   closed {tp.max_ent_fidelity_closed(p):.5f}")

for gamma, eta in ((0.5, 0.3), (1.0, 2.0)):
    q = ModelParams.from_beta(2.0, gamma=gamma, eta=eta)
    fids = [tp.partial_output_fidelity_closed(q, xi) for xi in np.linspace(0, math.pi / 4, 5)]
    print(f"gamma={gamma} eta={eta}, xi from 0 to pi/4:", " ".join(f"{f:.4f}" for f in fids))
