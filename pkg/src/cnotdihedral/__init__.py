"""Computation in the n-qubit CNOT-dihedral groups G_{2^k} and randomized benchmarking over them."""

from .circuit import Circuit, Gate, evaluate_circuit, synthesize
from .gf2 import GF2Matrix, GF2Vector, SingularMatrixError
from .group import (
    CNOTDihedralElement,
    GroupParams,
    group_order,
    identity,
    inverse,
    multiply,
    sample_uniform,
)
from .phasepoly import PhasePolynomial

__version__ = "0.1.0"

__all__ = [
    "CNOTDihedralElement",
    "Circuit",
    "GF2Matrix",
    "GF2Vector",
    "Gate",
    "GroupParams",
    "PhasePolynomial",
    "SingularMatrixError",
    "evaluate_circuit",
    "group_order",
    "identity",
    "inverse",
    "multiply",
    "sample_uniform",
    "synthesize",
]
