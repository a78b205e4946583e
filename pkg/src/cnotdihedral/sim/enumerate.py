"""Brute-force construction of G_m by breadth-first closure over generators.

Every element of G_m is a permutation matrix with entries that are powers of
omega_m. An element is stored exactly as ``(rows, exps)``: column ``b`` holds
``omega_m^exps[b]`` in row ``rows[b]``. Dividing out the global phase so that
the column-0 entry is ``+1`` picks one representative per coset of
``<omega_m>``; no floating-point rounding is involved.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..group import CNOTDihedralElement, group_order
from .states import SimulationBudgetError, element_monomial

DEFAULT_BUDGET = 10 ** 7


@dataclass(frozen=True, eq=False)
class Enumeration:
    n: int
    m: int
    keys: np.ndarray  # sorted canonical keys

    @property
    def count(self) -> int:
        return int(self.keys.size)

    def contains(self, rows: np.ndarray, exps: np.ndarray) -> bool:
        key = _encode(rows[None, :], exps[None, :], self.n, self.m)[0]
        i = np.searchsorted(self.keys, key)
        return bool(i < self.keys.size and self.keys[i] == key)

    def contains_element(self, g: CNOTDihedralElement) -> bool:
        if 1 << g.k != self.m or g.n != self.n:
            raise ValueError("element parameters do not match the enumeration")
        rows, exps = element_monomial(g)
        return self.contains(rows, exps)


def _exp_bits(m: int) -> int:
    return max(1, (m - 1).bit_length())


def _encode(rows: np.ndarray, exps: np.ndarray, n: int, m: int) -> np.ndarray:
    dim = 1 << n
    eb = _exp_bits(m)
    key = np.zeros(rows.shape[0], dtype=np.int64)
    for b in range(dim):
        key = (key << n) | rows[:, b]
    for b in range(1, dim):  # exps[:, 0] is always 0 after canonicalization
        key = (key << eb) | exps[:, b]
    return key


def _fits(n: int, m: int) -> bool:
    dim = 1 << n
    return dim * n + (dim - 1) * _exp_bits(m) <= 63


def generators(n: int, m: int) -> list[tuple[np.ndarray, np.ndarray]]:
    """Generators as ``(sigma, d)`` with ``g|r> = omega^d[r] |sigma[r]>``."""
    r = np.arange(1 << n)
    zero = np.zeros_like(r)
    gens = []
    for i in range(n):
        for j in range(n):
            if i != j:
                gens.append((r ^ (((r >> i) & 1) << j), zero))
    for j in range(n):
        gens.append((r ^ (1 << j), zero))
    if m > 1:
        for j in range(n):
            gens.append((r.copy(), (r >> j) & 1))
    return gens


def enumerate_group(n: int, m: int, budget: int = DEFAULT_BUDGET) -> Enumeration:
    """All elements of G_m on ``n`` qubits, modulo global phase.

    Raises:
        SimulationBudgetError: if the predicted order exceeds ``budget`` or the
            canonical keys would not fit in 63 bits.
    """
    predicted = group_order(n, m)
    if predicted > budget:
        raise SimulationBudgetError(f"|G_{m}| at n={n} is {predicted}, above the budget {budget}")
    if not _fits(n, m):
        raise SimulationBudgetError(f"n={n}, m={m} is too large for packed enumeration keys")
    dim = 1 << n
    gens = generators(n, m)
    rows = np.arange(dim, dtype=np.int64)[None, :]
    exps = np.zeros((1, dim), dtype=np.int64)
    visited = _encode(rows, exps, n, m)
    while rows.shape[0]:
        cand_rows, cand_exps = [], []
        for sigma, d in gens:
            new_exps = (exps + d[rows]) % m
            new_exps = (new_exps - new_exps[:, :1]) % m
            cand_rows.append(sigma[rows])
            cand_exps.append(new_exps)
        cand_rows = np.concatenate(cand_rows)
        cand_exps = np.concatenate(cand_exps)
        keys, first = np.unique(_encode(cand_rows, cand_exps, n, m), return_index=True)
        fresh = ~np.isin(keys, visited, assume_unique=True)
        rows, exps = cand_rows[first[fresh]], cand_exps[first[fresh]]
        visited = np.union1d(visited, keys[fresh])
        if visited.size > budget:
            raise SimulationBudgetError(f"enumeration exceeded the budget of {budget} elements")
    return Enumeration(n, m, visited)
