"""Explicit matrices for group elements and gates, and density-matrix helpers.

Basis index ``b`` has bit ``j`` equal to the value of qubit ``j`` (0-based).
The gate matrices here are built straight from the gate definitions and never
go through triples, so they serve as an independent oracle.
"""

from __future__ import annotations

import numpy as np

from ..gf2 import apply_bits
from ..group import CNOTDihedralElement

MAX_UNITARY_QUBITS = 12


class SimulationBudgetError(RuntimeError):
    """Raised when a brute-force computation would exceed its size limit."""


def _guard(n: int, limit: int = MAX_UNITARY_QUBITS) -> None:
    if n > limit:
        raise SimulationBudgetError(f"n={n} exceeds the dense-matrix limit of {limit} qubits")


def omega(m: int) -> complex:
    return np.exp(2j * np.pi / m)


def element_monomial(g: CNOTDihedralElement) -> tuple[np.ndarray, np.ndarray]:
    """``(rows, exps)`` with ``g|b> = omega^exps[b] |rows[b]>``."""
    _guard(g.n)
    dim = 1 << g.n
    rows = np.fromiter((apply_bits(g.linear, b) ^ g.shift.bits for b in range(dim)), dtype=np.int64, count=dim)
    return rows, g.poly.evaluate_all()


def element_to_unitary(g: CNOTDihedralElement) -> np.ndarray:
    rows, exps = element_monomial(g)
    dim = rows.size
    U = np.zeros((dim, dim), dtype=complex)
    U[rows, np.arange(dim)] = np.exp(2j * np.pi * exps / (1 << g.k))
    return U


def apply_element(rho: np.ndarray, g: CNOTDihedralElement) -> np.ndarray:
    """``U rho U^dagger`` using the permutation-with-phases structure of ``U``."""
    rows, exps = element_monomial(g)
    if rho.shape != (rows.size, rows.size):
        raise ValueError(f"density matrix shape {rho.shape} does not match n={g.n}")
    ph = np.exp(2j * np.pi * exps / (1 << g.k))
    out = np.empty_like(rho, dtype=complex)
    out[np.ix_(rows, rows)] = ph[:, None] * rho * ph.conj()[None, :]
    return out


def apply_unitary(rho: np.ndarray, U: np.ndarray) -> np.ndarray:
    return U @ rho @ U.conj().T


def equal_up_to_phase(U: np.ndarray, V: np.ndarray) -> float:
    """Max-entry deviation between ``U`` and ``V`` after removing a global phase."""
    idx = np.unravel_index(np.argmax(np.abs(V)), V.shape)
    if abs(U[idx]) < 1e-15:
        return float(np.max(np.abs(U - V)) + 1.0)
    ph = U[idx] / V[idx]
    ph /= abs(ph)
    return float(np.max(np.abs(U - ph * V)))


# gate matrices from definitions -----------------------------------------------

def cnot_matrix(n: int, control: int, target: int) -> np.ndarray:
    _guard(n)
    dim = 1 << n
    U = np.zeros((dim, dim))
    for b in range(dim):
        U[b ^ (((b >> control) & 1) << target), b] = 1
    return U


def x_matrix(n: int, target: int) -> np.ndarray:
    _guard(n)
    dim = 1 << n
    U = np.zeros((dim, dim))
    for b in range(dim):
        U[b ^ (1 << target), b] = 1
    return U


def controlled_phase_matrix(n: int, qubits, m: int, a: int = 1) -> np.ndarray:
    """``diag(omega_m^(a * prod(b_j for j in qubits)))``; one qubit gives ``Z_m^a``."""
    _guard(n)
    mask = sum(1 << q for q in set(qubits))
    b = np.arange(1 << n)
    on = (b & mask) == mask
    return np.diag(np.where(on, omega(m) ** a, 1.0 + 0j))


def gate_matrix(gate, n: int, m: int) -> np.ndarray:
    if gate.name == "cx":
        return cnot_matrix(n, *gate.qubits)
    if gate.name == "x":
        return x_matrix(n, gate.qubits[0])
    return controlled_phase_matrix(n, gate.qubits, m, gate.power)


def circuit_unitary(circ) -> np.ndarray:
    """Product of the gate matrices of a circuit (first gate rightmost)."""
    _guard(circ.n)
    U = np.eye(1 << circ.n, dtype=complex)
    for g in circ.gates:
        U = gate_matrix(g, circ.n, 1 << circ.k) @ U
    return U


# states and measurement ------------------------------------------------------

def basis_state(n: int, b: int = 0) -> np.ndarray:
    _guard(n)
    rho = np.zeros((1 << n, 1 << n), dtype=complex)
    rho[b, b] = 1
    return rho


def zero_state(n: int) -> np.ndarray:
    return basis_state(n, 0)


def plus_state(n: int) -> np.ndarray:
    _guard(n)
    dim = 1 << n
    return np.full((dim, dim), 1.0 / dim, dtype=complex)


def maximally_mixed(n: int) -> np.ndarray:
    dim = 1 << n
    return np.eye(dim, dtype=complex) / dim


def validate_density(rho: np.ndarray, atol: float = 1e-12) -> None:
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise ValueError("density matrix must be square")
    if abs(np.trace(rho) - 1) > atol:
        raise ValueError("density matrix must have unit trace")
    if np.max(np.abs(rho - rho.conj().T)) > atol:
        raise ValueError("density matrix must be Hermitian")
    if np.min(np.linalg.eigvalsh((rho + rho.conj().T) / 2)) < -1e-10:
        raise ValueError("density matrix must be positive semidefinite")


def expectation(observable: np.ndarray, rho: np.ndarray) -> float:
    """``Tr(E rho)`` for Hermitian ``E``."""
    if observable.shape != rho.shape:
        raise ValueError(f"shape mismatch: {observable.shape} vs {rho.shape}")
    if np.max(np.abs(observable - observable.conj().T)) > 1e-10:
        raise ValueError("observable must be Hermitian")
    val = np.trace(observable @ rho)
    if abs(val.imag) > 1e-10:
        raise ValueError(f"expectation has imaginary part {val.imag:g}")
    return float(val.real)
