"""Thermal two-qubit Heisenberg XY chain as a teleportation resource."""
from .spinmodel import ModelParams, analytic_spectrum, ground_state, hamiltonian, thermal_state
from .entanglement import bell_overlaps, concurrence, fef, fef_closed, thermal_concurrence_closed
from .teleport import (
    channel_1q,
    channel_2q,
    ent_fidelity_mc,
    max_ent_fidelity_closed,
    max_fidelity_closed,
    partial_output_fidelity_closed,
    useful_for_teleportation,
)
from .criticality import eta_critical, t1_critical, t2_asymptote, t2_critical

__version__ = "0.1.0"
