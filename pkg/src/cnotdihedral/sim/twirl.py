"""Twirls over G_{2^k}: brute-force group average and the sequential orbit route.

``twirl_full`` averages ``R(U)^T R(E) R(U)`` over every element of the group
(enumerated as triples). ``twirl_sequential`` reaches the same result for a Pauli
channel by orbit-averaging its probabilities over the CNOT group, the CZ group
and the cosets of ``<Z_{2^k}(j)>`` modulo the Pauli Z group.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from ..group import GroupParams, all_elements, group_order
from .pauli import PauliChannel, liouville_of, unitary_liouvilles
from .states import SimulationBudgetError, element_monomial

DEFAULT_MAX_ELEMENTS = 10 ** 4
CHUNK = 256


def _element_unitaries(elements, k: int, dim: int) -> np.ndarray:
    U = np.zeros((len(elements), dim, dim), dtype=complex)
    cols = np.arange(dim)
    for i, g in enumerate(elements):
        rows, exps = element_monomial(g)
        U[i, rows, cols] = np.exp(2j * np.pi * exps / (1 << k))
    return U


def _chunk_sum(elements, R_E: np.ndarray, k: int, dim: int) -> np.ndarray:
    R = unitary_liouvilles(_element_unitaries(elements, k, dim))
    return np.einsum("npq,pr,nrs->qs", R, R_E, R)


def twirl_full(channel, params: GroupParams, threads: int = 1,
               max_elements: int = DEFAULT_MAX_ELEMENTS) -> np.ndarray:
    """Liouville matrix of the G_{2^k} twirl of ``channel``.

    The sum runs over fixed chunks of the enumeration combined in a fixed
    order, so the result does not depend on ``threads``.
    """
    order = group_order(params.n, params.m)
    if order > max_elements:
        raise SimulationBudgetError(f"|G| = {order} exceeds the twirl budget of {max_elements} elements")
    R_E = channel if isinstance(channel, np.ndarray) else liouville_of(channel)
    dim = 1 << params.n
    elements = list(all_elements(params))
    chunks = [elements[i:i + CHUNK] for i in range(0, len(elements), CHUNK)]
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(lambda c: _chunk_sum(c, R_E, params.k, dim), chunks))
    else:
        parts = [_chunk_sum(c, R_E, params.k, dim) for c in chunks]
    total = np.zeros_like(R_E, dtype=float)
    for part in parts:
        total += part
    return total / len(elements)


# orbits ----------------------------------------------------------------------

def _index(n: int, x: int, z: int) -> int:
    return (x << n) | z


def orbits_cx(n: int) -> list[list[int]]:
    """Orbits of Pauli indices under CNOT conjugation, from their set description.

    Classes: identity, nonidentity X-type, nonidentity Z-type, odd ``|x & z|``,
    and even ``|x & z|`` with both ``x`` and ``z`` nonzero. Empty classes
    (at ``n = 1``) are dropped; at ``n = 1`` no CNOTs exist, and the nonempty
    classes are already singletons.
    """
    full = 1 << n
    classes = {"I": [], "X": [], "Z": [], "Y": [], "YY": []}
    for x in range(full):
        for z in range(full):
            if x == 0:
                classes["I" if z == 0 else "Z"].append(_index(n, x, z))
            elif z == 0:
                classes["X"].append(_index(n, x, z))
            elif (x & z).bit_count() % 2:
                classes["Y"].append(_index(n, x, z))
            else:
                classes["YY"].append(_index(n, x, z))
    return [sorted(v) for v in classes.values() if v]


def cx_orbit_sizes(n: int) -> dict[str, int]:
    """Closed-form sizes of the CNOT orbits of I, X(1), Z(1), Y(1), Y(1)Y(2)."""
    return {
        "I": 1,
        "X": 2 ** n - 1,
        "Z": 2 ** n - 1,
        "Y": 2 ** (n - 1) * (2 ** n - 1),
        "YY": 4 ** n // 2 - 3 * 2 ** (n - 1) + 1,
    }


def orbits_cz(n: int) -> list[list[int]]:
    """Orbits of Pauli indices under CZ conjugation, from their set description.

    Z-type strings are fixed. For ``x != 0`` with support ``J`` the orbit is
    fixed by ``x`` and the parity of ``z`` on ``J``; ``z`` outside ``J`` is free.
    """
    full = 1 << n
    classes: dict[tuple, list[int]] = {}
    for x in range(full):
        for z in range(full):
            key = ("z", z) if x == 0 else ("x", x, (x & z).bit_count() % 2)
            classes.setdefault(key, []).append(_index(n, x, z))
    return [sorted(v) for _, v in sorted(classes.items())]


def _conj_cx(x: int, z: int, c: int, t: int) -> tuple[int, int]:
    x ^= ((x >> c) & 1) << t
    z ^= ((z >> t) & 1) << c
    return x, z


def _conj_cz(x: int, z: int, i: int, j: int) -> tuple[int, int]:
    z ^= (((x >> j) & 1) << i) | (((x >> i) & 1) << j)
    return x, z


def cx_generators(n: int):
    return [lambda x, z, c=c, t=t: _conj_cx(x, z, c, t) for c in range(n) for t in range(n) if c != t]


def cz_generators(n: int):
    return [lambda x, z, i=i, j=j: _conj_cz(x, z, i, j) for i in range(n) for j in range(i + 1, n)]


def orbits_by_closure(n: int, gens) -> list[list[int]]:
    """Orbits of phase-free Pauli strings under conjugation by ``gens``."""
    full = 1 << n
    seen: set[int] = set()
    out = []
    for start in range(4 ** n):
        if start in seen:
            continue
        orbit = {start}
        frontier = [start]
        while frontier:
            idx = frontier.pop()
            x, z = idx >> n, idx & (full - 1)
            for g in gens:
                nx, nz = g(x, z)
                j = _index(n, nx, nz)
                if j not in orbit:
                    orbit.add(j)
                    frontier.append(j)
        seen |= orbit
        out.append(sorted(orbit))
    return sorted(out)


def wbar_classes(n: int) -> list[list[int]]:
    """Classes merged by the ``<Z_{2^k}(j)>`` / Z twirl for ``k >= 2``.

    ``X(J) Z(v)`` is averaged with every ``X(J) Z(w[J] + v)``: same X support,
    same Z part outside the support.
    """
    full = 1 << n
    classes: dict[tuple, list[int]] = {}
    for x in range(full):
        for z in range(full):
            classes.setdefault((x, z & ~x), []).append(_index(n, x, z))
    return [sorted(v) for _, v in sorted(classes.items())]


def orbit_average(probs: np.ndarray, classes: list[list[int]]) -> np.ndarray:
    out = np.array(probs, dtype=float)
    for cls in classes:
        out[cls] = np.mean(out[cls])
    return out


@dataclass(frozen=True, eq=False)
class TwirlStage:
    name: str
    probs: np.ndarray

    def distinct(self, atol: float = 1e-12) -> int:
        vals = np.sort(self.probs)
        return int(1 + np.sum(np.diff(vals) > atol)) if vals.size else 0


def twirl_stages(channel: PauliChannel, params: GroupParams) -> list[TwirlStage]:
    """Pauli-channel probabilities after each stage of the sequential twirl.

    For ``k = 1`` the group contains no CZ or S gates and only the Pauli and CNOT
    stages apply.
    """
    if channel.n != params.n:
        raise ValueError("channel and group parameters disagree on n")
    n = params.n
    probs = np.array(channel.probs, dtype=float)
    stages = [TwirlStage("pauli", probs)]
    probs = orbit_average(probs, orbits_cx(n))
    stages.append(TwirlStage("cx", probs))
    if params.k >= 2:
        probs = orbit_average(probs, orbits_cz(n))
        stages.append(TwirlStage("cz", probs))
        probs = orbit_average(probs, wbar_classes(n))
        stages.append(TwirlStage("wbar/z", probs))
    return stages


def twirl_sequential(channel, params: GroupParams) -> np.ndarray:
    """Liouville matrix of the G_{2^k} twirl computed through orbit averages.

    Non-Pauli input is Pauli-twirled first. The last stage, diagonal elements
    outside CZ, leaves the resulting channel unchanged.
    """
    from .pauli import pauli_twirl

    pc = pauli_twirl(channel)
    final = twirl_stages(pc, params)[-1].probs
    return PauliChannel(pc.n, final).liouville()


def block_values(R: np.ndarray, n: int) -> dict:
    """Read ``alpha_Z``, ``alpha_R`` and derived quantities off a twirled Liouville matrix."""
    dim = 1 << n
    diag = np.diag(R)
    off = R - np.diag(diag)
    z_block = diag[1:dim]
    r_block = diag[dim:]
    alpha_z = float(np.mean(z_block))
    alpha_r = float(np.mean(r_block))
    alpha = (alpha_z + dim * alpha_r) / (dim + 1)
    return {
        "alpha_Z": alpha_z,
        "alpha_R": alpha_r,
        "alpha": alpha,
        "r": (dim - 1) * (1 - alpha) / dim,
        "identity_entry": float(diag[0]),
        "offdiag_max": float(np.max(np.abs(off))) if off.size else 0.0,
        "z_block_spread": float(np.ptp(z_block)),
        "r_block_spread": float(np.ptp(r_block)),
        "z_block_size": int(z_block.size),
        "r_block_size": int(r_block.size),
    }
