"""Learning time-dependent local Hamiltonians and single-site Pauli Lindbladians.

Library layout:

- ``pauli``       exact symplectic Pauli-string algebra
- ``lattice``     interaction graphs, balls, effective dimension
- ``schedules``   polynomial coefficient functions, Chebyshev nodes, robust fits
- ``model``       the parametrized time-dependent generator ansatz
- ``simulate``    exact dense propagation, Dyson tails, Lieb-Robinson bounds
- ``shadows``     simulated process-shadow acquisition and overlap estimation
- ``probes``      stable Pauli probe families
- ``inversion``   localized channel inversion (spectral-norm convex solve)
- ``linsys``      per-time linear system assembly and dominant solves
- ``derivatives`` derivative estimation by stable interpolation
- ``pipeline``    end-to-end learning, holdout validation, extrapolation
"""

from .pauli import PauliString, PhasedPauli, commutator_half, multiply
from .lattice import InteractionGraph
from .schedules import PolySchedule
from .model import CoeffIndex, LindbladAnsatz
from .pipeline import LearnConfig, learn, preprocess

__all__ = [
    "PauliString",
    "PhasedPauli",
    "multiply",
    "commutator_half",
    "InteractionGraph",
    "PolySchedule",
    "CoeffIndex",
    "LindbladAnsatz",
    "LearnConfig",
    "learn",
    "preprocess",
]
