"""Dense-matrix ground truth: unitaries, channels, enumeration and twirls."""

from .enumerate import Enumeration, enumerate_group
from .pauli import (
    KrausChannel,
    LiouvilleRep,
    PauliChannel,
    PauliString,
    apply_liouville,
    channel_from_json,
    liouville_of,
    pauli_twirl,
)
from .states import (
    SimulationBudgetError,
    apply_element,
    circuit_unitary,
    element_to_unitary,
    equal_up_to_phase,
    expectation,
    plus_state,
    zero_state,
)
from .twirl import (
    block_values,
    cx_orbit_sizes,
    orbits_by_closure,
    orbits_cx,
    orbits_cz,
    twirl_full,
    twirl_sequential,
    twirl_stages,
)

__all__ = [
    "Enumeration",
    "KrausChannel",
    "LiouvilleRep",
    "PauliChannel",
    "PauliString",
    "SimulationBudgetError",
    "apply_element",
    "apply_liouville",
    "block_values",
    "channel_from_json",
    "circuit_unitary",
    "cx_orbit_sizes",
    "element_to_unitary",
    "enumerate_group",
    "equal_up_to_phase",
    "expectation",
    "liouville_of",
    "orbits_by_closure",
    "orbits_cx",
    "orbits_cz",
    "pauli_twirl",
    "plus_state",
    "twirl_full",
    "twirl_sequential",
    "twirl_stages",
    "zero_state",
]
