"""Pauli strings, Pauli channels, general channels and Liouville matrices.

Pauli strings are phase-free ``X(x) Z(z)`` labels packed into an index
``(x << n) | z``, so index 0 is the identity and indices ``1 .. 2^n - 1`` are the
Z-type strings. The matrix of a label is the Hermitian Pauli
``i^|x & z| X(x) Z(z)``.

The Liouville matrix of a map ``E`` is ``R[P, Q] = Tr(P E(Q)) / 2^n``; the
identity map has ``R = I``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Mapping, Sequence

import numpy as np

from .states import SimulationBudgetError

MAX_LIOUVILLE_QUBITS = 6
_CHARS = {(0, 0): "I", (1, 0): "X", (1, 1): "Y", (0, 1): "Z"}
_BITS = {v: k for k, v in _CHARS.items()}


def _popcount(arr: np.ndarray) -> np.ndarray:
    arr = np.asarray(arr, dtype=np.int64)
    out = np.zeros_like(arr)
    while np.any(arr):
        out += arr & 1
        arr = arr >> 1
    return out


@dataclass(frozen=True)
class PauliString:
    n: int
    x: int
    z: int

    @property
    def index(self) -> int:
        return (self.x << self.n) | self.z

    @classmethod
    def from_index(cls, n: int, idx: int) -> PauliString:
        return cls(n, idx >> n, idx & ((1 << n) - 1))

    @classmethod
    def from_label(cls, label: str) -> PauliString:
        """``"XIZ"``: first character is qubit 1."""
        x = z = 0
        for j, ch in enumerate(label.upper()):
            if ch not in "IXYZ":
                raise ValueError(f"bad Pauli label {label!r}")
            bx, bz = _BITS[ch]
            x |= bx << j
            z |= bz << j
        return cls(len(label), x, z)

    def label(self) -> str:
        return "".join(_CHARS[((self.x >> j) & 1, (self.z >> j) & 1)] for j in range(self.n))

    def is_z_type(self) -> bool:
        return self.x == 0

    def commutes(self, other: PauliString) -> bool:
        return symplectic(self.x, self.z, other.x, other.z) == 0

    def matrix(self) -> np.ndarray:
        return pauli_matrices(self.n)[self.index]

    def __str__(self):
        return self.label()


def symplectic(x1: int, z1: int, x2: int, z2: int) -> int:
    return ((x1 & z2).bit_count() + (z1 & x2).bit_count()) & 1


def labels(n: int) -> list[str]:
    return [PauliString.from_index(n, i).label() for i in range(4 ** n)]


@lru_cache(maxsize=8)
def pauli_matrices(n: int) -> np.ndarray:
    """Array of shape ``(4^n, 2^n, 2^n)``, indexed like ``PauliString.index``."""
    if n > MAX_LIOUVILLE_QUBITS:
        raise SimulationBudgetError(f"n={n} exceeds the Pauli-basis limit of {MAX_LIOUVILLE_QUBITS}")
    dim = 1 << n
    b = np.arange(dim)
    out = np.zeros((dim * dim, dim, dim), dtype=complex)
    for x in range(dim):
        for z in range(dim):
            ph = 1j ** ((x & z).bit_count()) * (-1.0) ** _popcount(z & b)
            out[(x << n) | z, b ^ x, b] = ph
    out.setflags(write=False)
    return out


@lru_cache(maxsize=8)
def commutation_signs(n: int) -> np.ndarray:
    """``S[P, Q] = (-1)^omega(P, Q)``."""
    idx = np.arange(4 ** n)
    x, z = idx >> n, idx & ((1 << n) - 1)
    w = _popcount(x[:, None] & z[None, :]) + _popcount(z[:, None] & x[None, :])
    out = np.where(w % 2, -1.0, 1.0)
    out.setflags(write=False)
    return out


# channels ------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class PauliChannel:
    """``rho -> sum_Q probs[Q] Q rho Q`` with ``probs`` indexed by Pauli index."""

    n: int
    probs: np.ndarray

    def __post_init__(self):
        probs = np.asarray(self.probs, dtype=float).copy()
        if probs.shape != (4 ** self.n,):
            raise ValueError(f"expected {4 ** self.n} probabilities, got shape {probs.shape}")
        if np.any(probs < -1e-15):
            raise ValueError("Pauli channel probabilities must be non-negative")
        if abs(probs.sum() - 1) > 1e-12:
            raise ValueError(f"Pauli channel probabilities sum to {probs.sum()!r}, not 1")
        probs = np.clip(probs, 0, None)
        probs.setflags(write=False)
        object.__setattr__(self, "probs", probs)

    @classmethod
    def identity(cls, n: int) -> PauliChannel:
        p = np.zeros(4 ** n)
        p[0] = 1
        return cls(n, p)

    @classmethod
    def depolarizing(cls, n: int, alpha: float) -> PauliChannel:
        """``rho -> alpha rho + (1 - alpha) I / 2^n``."""
        d2 = 4 ** n
        if not -1 / (d2 - 1) <= alpha <= 1:
            raise ValueError(f"depolarizing parameter {alpha} gives a non-physical channel")
        p = np.full(d2, (1 - alpha) / d2)
        p[0] += alpha
        return cls(n, p)

    @classmethod
    def from_labels(cls, n: int, probs: Mapping[str, float]) -> PauliChannel:
        p = np.zeros(4 ** n)
        for lab, v in probs.items():
            ps = PauliString.from_label(lab)
            if ps.n != n:
                raise ValueError(f"label {lab!r} is not an {n}-qubit Pauli")
            p[ps.index] += v
        return cls(n, p)

    @classmethod
    def product(cls, factors: Sequence[Mapping[str, float]]) -> PauliChannel:
        """Tensor product of single-qubit Pauli channels; ``factors[0]`` is qubit 1."""
        n = len(factors)
        p = np.zeros(4 ** n)
        singles = [PauliChannel.from_labels(1, f).probs for f in factors]
        for idx in range(4 ** n):
            ps = PauliString.from_index(n, idx)
            val = 1.0
            for j, s in enumerate(singles):
                val *= s[(((ps.x >> j) & 1) << 1) | ((ps.z >> j) & 1)]
            p[idx] = val
        return cls(n, p)

    @classmethod
    def z_dephasing(cls, n: int, p: float) -> PauliChannel:
        """Independent Z flips with probability ``p`` on every qubit."""
        return cls.product([{"I": 1 - p, "Z": p}] * n)

    @classmethod
    def random(cls, n: int, rng: np.random.Generator) -> PauliChannel:
        return cls(n, rng.dirichlet(np.ones(4 ** n)))

    def as_dict(self) -> dict[str, float]:
        return {lab: float(v) for lab, v in zip(labels(self.n), self.probs) if v}

    def eigenvalues(self) -> np.ndarray:
        """Diagonal of the Liouville matrix."""
        return commutation_signs(self.n) @ self.probs

    def liouville(self) -> np.ndarray:
        return np.diag(self.eigenvalues())

    def apply(self, rho: np.ndarray) -> np.ndarray:
        dim = 1 << self.n
        if rho.shape != (dim, dim):
            raise ValueError(f"density matrix shape {rho.shape} does not match n={self.n}")
        b = np.arange(dim)
        out = np.zeros_like(rho, dtype=complex)
        for idx in np.flatnonzero(self.probs):
            x, z = idx >> self.n, idx & (dim - 1)
            s = (-1.0) ** _popcount(z & b)
            out[np.ix_(b ^ x, b ^ x)] += self.probs[idx] * (s[:, None] * rho * s[None, :])
        return out

    def to_json(self) -> dict:
        return {"schema": "cnotdihedral.channel/1", "type": "pauli", "n": self.n, "probs": self.as_dict()}


@dataclass(frozen=True, eq=False)
class KrausChannel:
    n: int
    ops: tuple[np.ndarray, ...]

    def __post_init__(self):
        dim = 1 << self.n
        ops = tuple(np.asarray(a, dtype=complex) for a in self.ops)
        if not ops or any(a.shape != (dim, dim) for a in ops):
            raise ValueError(f"Kraus operators must be {dim}x{dim}")
        total = sum(a.conj().T @ a for a in ops)
        if np.max(np.abs(total - np.eye(dim))) > 1e-10:
            raise ValueError("Kraus operators are not trace preserving")
        object.__setattr__(self, "ops", ops)

    @classmethod
    def unitary(cls, U: np.ndarray) -> KrausChannel:
        return cls(int(np.log2(U.shape[0])), (U,))

    @classmethod
    def random(cls, n: int, rng: np.random.Generator, rank: int = 4) -> KrausChannel:
        """Random CPTP map from a Haar-like isometry into ``rank`` environment levels."""
        dim = 1 << n
        G = rng.normal(size=(rank * dim, dim)) + 1j * rng.normal(size=(rank * dim, dim))
        Q, R = np.linalg.qr(G)
        Q = Q * (np.diag(R) / np.abs(np.diag(R)))[None, :]
        return cls(n, tuple(Q[i * dim:(i + 1) * dim] for i in range(rank)))

    def apply(self, rho: np.ndarray) -> np.ndarray:
        return sum(a @ rho @ a.conj().T for a in self.ops)

    def to_json(self) -> dict:
        return {
            "schema": "cnotdihedral.channel/1",
            "type": "kraus",
            "n": self.n,
            "kraus": [{"real": a.real.tolist(), "imag": a.imag.tolist()} for a in self.ops],
        }


def channel_from_json(data: Mapping):
    kind = data.get("type")
    n = int(data["n"])
    if kind == "pauli":
        return PauliChannel.from_labels(n, data["probs"])
    if kind == "depolarizing":
        return PauliChannel.depolarizing(n, float(data["alpha"]))
    if kind == "z_dephasing":
        return PauliChannel.z_dephasing(n, float(data["p"]))
    if kind == "identity":
        return PauliChannel.identity(n)
    if kind == "kraus":
        ops = tuple(np.array(a["real"]) + 1j * np.array(a.get("imag", np.zeros_like(a["real"]))) for a in data["kraus"])
        return KrausChannel(n, ops)
    raise ValueError(f"unknown channel type {kind!r}")


# Liouville representation -----------------------------------------------------

def liouville_of(obj) -> np.ndarray:
    """Liouville matrix of a PauliChannel, KrausChannel, group element or unitary matrix."""
    from ..group import CNOTDihedralElement
    from .states import element_to_unitary

    if isinstance(obj, PauliChannel):
        return obj.liouville()
    if isinstance(obj, CNOTDihedralElement):
        obj = element_to_unitary(obj)
    ops = obj.ops if isinstance(obj, KrausChannel) else (np.asarray(obj),)
    n = int(round(np.log2(ops[0].shape[0])))
    if n > MAX_LIOUVILLE_QUBITS:
        raise SimulationBudgetError(f"n={n} exceeds the Liouville limit of {MAX_LIOUVILLE_QUBITS}")
    P = pauli_matrices(n)
    R = np.zeros((4 ** n, 4 ** n))
    for a in ops:
        # images[q] = a Q a^dagger
        images = np.einsum("ij,qjk,lk->qil", a, P, a.conj())
        R += np.einsum("pij,qji->pq", P, images).real
    return R / (1 << n)


def unitary_liouvilles(unitaries: np.ndarray) -> np.ndarray:
    """Batched Liouville matrices of unitaries with shape ``(N, d, d)``."""
    n = int(round(np.log2(unitaries.shape[1])))
    P = pauli_matrices(n)
    images = np.einsum("nij,qjk,nlk->nqil", unitaries, P, unitaries.conj())
    return np.einsum("pij,nqji->npq", P, images).real / (1 << n)


def apply_liouville(R: np.ndarray, rho: np.ndarray) -> np.ndarray:
    n = int(round(np.log2(rho.shape[0])))
    P = pauli_matrices(n)
    coords = np.einsum("pij,ji->p", P, rho).real / (1 << n)
    return np.einsum("p,pij->ij", R @ coords, P)


def pauli_twirl(obj) -> PauliChannel:
    """Pauli channel obtained by twirling over the Pauli group.

    For Kraus input the probabilities are ``sum_k |gamma_Q^(k)|^2`` with
    ``A_k = sum_Q gamma_Q^(k) Q``; a Liouville matrix input is converted
    through its diagonal.
    """
    if isinstance(obj, PauliChannel):
        return obj
    if isinstance(obj, np.ndarray) and obj.ndim == 2 and obj.shape[0] == obj.shape[1] and _is_pow4(obj.shape[0]):
        n = int(round(np.log(obj.shape[0]) / np.log(4)))
        probs = commutation_signs(n) @ np.diag(obj) / 4 ** n
        return PauliChannel(n, probs)
    from ..group import CNOTDihedralElement
    from .states import element_to_unitary

    if isinstance(obj, CNOTDihedralElement):
        obj = element_to_unitary(obj)
    ops = obj.ops if isinstance(obj, KrausChannel) else (np.asarray(obj),)
    n = int(round(np.log2(ops[0].shape[0])))
    P = pauli_matrices(n)
    probs = np.zeros(4 ** n)
    for a in ops:
        gamma = np.einsum("qij,ji->q", P, a) / (1 << n)
        probs += np.abs(gamma) ** 2
    return PauliChannel(n, probs)


def _is_pow4(d: int) -> bool:
    return d > 0 and d & (d - 1) == 0 and (d.bit_length() - 1) % 2 == 0


@dataclass(frozen=True, eq=False)
class LiouvilleRep:
    n: int
    matrix: np.ndarray

    def to_json(self) -> dict:
        return {
            "schema": "cnotdihedral.liouville/1",
            "n": self.n,
            "labels": labels(self.n),
            "matrix": np.asarray(self.matrix).tolist(),
        }

    @classmethod
    def from_json(cls, data: Mapping) -> LiouvilleRep:
        return cls(int(data["n"]), np.array(data["matrix"], dtype=float))
