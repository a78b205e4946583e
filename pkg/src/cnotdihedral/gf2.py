"""Bit-packed linear algebra over GF(2).

A matrix is stored as one Python int per row, bit ``l`` of row ``j`` holding
entry ``(j, l)``. Vectors are single ints with bit ``j`` holding entry ``j``.
Matrices act on column vectors, so ``mat_vec(A, v)[j] = parity(A[j] & v)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np


class SingularMatrixError(ValueError):
    """Raised when an operation needs an invertible matrix."""


def _parity(x: int) -> int:
    return bin(x).count("1") & 1


@dataclass(frozen=True)
class GF2Vector:
    n: int
    bits: int

    def __post_init__(self):
        if self.n < 0 or self.bits < 0 or self.bits >> self.n:
            raise ValueError(f"bits {self.bits:#x} do not fit in length {self.n}")

    @classmethod
    def zeros(cls, n: int) -> GF2Vector:
        return cls(n, 0)

    @classmethod
    def from_list(cls, values: Sequence[int]) -> GF2Vector:
        bits = 0
        for j, v in enumerate(values):
            if v not in (0, 1):
                raise ValueError(f"entry {j} is {v!r}, expected 0 or 1")
            bits |= v << j
        return cls(len(values), bits)

    def to_list(self) -> list[int]:
        return [(self.bits >> j) & 1 for j in range(self.n)]

    def __getitem__(self, j: int) -> int:
        if not 0 <= j < self.n:
            raise IndexError(j)
        return (self.bits >> j) & 1

    def __xor__(self, other: GF2Vector) -> GF2Vector:
        _check_dims(self.n, other.n)
        return GF2Vector(self.n, self.bits ^ other.bits)

    def __repr__(self):
        return f"GF2Vector({''.join(map(str, self.to_list()))})"


@dataclass(frozen=True)
class GF2Matrix:
    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if len(self.rows) != self.n:
            raise ValueError(f"expected {self.n} rows, got {len(self.rows)}")
        for j, r in enumerate(self.rows):
            if r < 0 or r >> self.n:
                raise ValueError(f"row {j} does not fit in width {self.n}")

    @classmethod
    def identity(cls, n: int) -> GF2Matrix:
        return cls(n, tuple(1 << j for j in range(n)))

    @classmethod
    def from_list(cls, values: Sequence[Sequence[int]]) -> GF2Matrix:
        n = len(values)
        rows = []
        for row in values:
            if len(row) != n:
                raise ValueError("matrix must be square")
            rows.append(GF2Vector.from_list(row).bits)
        return cls(n, tuple(rows))

    @classmethod
    def from_array(cls, arr) -> GF2Matrix:
        arr = np.asarray(arr, dtype=np.int64) % 2
        return cls.from_list(arr.tolist())

    @classmethod
    def elementary(cls, n: int, src: int, dst: int) -> GF2Matrix:
        """Matrix that adds row ``src`` into row ``dst`` when applied on the left."""
        if src == dst or not (0 <= src < n and 0 <= dst < n):
            raise ValueError(f"invalid row pair ({src}, {dst}) for n={n}")
        rows = [1 << j for j in range(n)]
        rows[dst] |= 1 << src
        return cls(n, tuple(rows))

    def to_list(self) -> list[list[int]]:
        return [GF2Vector(self.n, r).to_list() for r in self.rows]

    def to_array(self) -> np.ndarray:
        return np.array(self.to_list(), dtype=np.uint8).reshape(self.n, self.n)

    def __getitem__(self, idx: tuple[int, int]) -> int:
        j, l = idx
        return (self.rows[j] >> l) & 1

    def __matmul__(self, other):
        if isinstance(other, GF2Matrix):
            return mat_mul(self, other)
        if isinstance(other, GF2Vector):
            return mat_vec(self, other)
        return NotImplemented

    def transpose(self) -> GF2Matrix:
        rows = []
        for l in range(self.n):
            r = 0
            for j in range(self.n):
                r |= ((self.rows[j] >> l) & 1) << j
            rows.append(r)
        return GF2Matrix(self.n, tuple(rows))

    def is_identity(self) -> bool:
        return all(r == 1 << j for j, r in enumerate(self.rows))

    def is_invertible(self) -> bool:
        return rank(self) == self.n

    def __repr__(self):
        body = ",".join("".join(map(str, row)) for row in self.to_list())
        return f"GF2Matrix({body})"


def _check_dims(a: int, b: int) -> None:
    if a != b:
        raise ValueError(f"dimension mismatch: {a} != {b}")


def mat_mul(A: GF2Matrix, B: GF2Matrix) -> GF2Matrix:
    """Product ``A @ B`` over GF(2)."""
    _check_dims(A.n, B.n)
    out = []
    for arow in A.rows:
        acc = 0
        l = 0
        while arow:
            if arow & 1:
                acc ^= B.rows[l]
            arow >>= 1
            l += 1
        out.append(acc)
    return GF2Matrix(A.n, tuple(out))


def mat_vec(A: GF2Matrix, v: GF2Vector) -> GF2Vector:
    _check_dims(A.n, v.n)
    bits = 0
    for j, row in enumerate(A.rows):
        bits |= _parity(row & v.bits) << j
    return GF2Vector(A.n, bits)


def apply_bits(A: GF2Matrix, b: int) -> int:
    """``mat_vec`` on raw ints; used in hot loops."""
    out = 0
    for j, row in enumerate(A.rows):
        out |= _parity(row & b) << j
    return out


def rank(A: GF2Matrix) -> int:
    rows = list(A.rows)
    r = 0
    for col in range(A.n):
        bit = 1 << col
        pivot = next((i for i in range(r, len(rows)) if rows[i] & bit), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i] & bit:
                rows[i] ^= rows[r]
        r += 1
    return r


def _reduce_to_identity(A: GF2Matrix) -> list[tuple[int, int]]:
    """Row additions ``(src, dst)`` that turn ``A`` into the identity, in order."""
    n = A.n
    rows = list(A.rows)
    ops: list[tuple[int, int]] = []

    def add(src, dst):
        rows[dst] ^= rows[src]
        ops.append((src, dst))

    for col in range(n):
        bit = 1 << col
        if not rows[col] & bit:
            pivot = next((i for i in range(col + 1, n) if rows[i] & bit), None)
            if pivot is None:
                raise SingularMatrixError("matrix is singular over GF(2)")
            add(pivot, col)
        for i in range(n):
            if i != col and rows[i] & bit:
                add(col, i)
    return ops


def mat_inverse(A: GF2Matrix) -> GF2Matrix:
    """Inverse over GF(2) by Gauss-Jordan elimination.

    Raises:
        SingularMatrixError: if ``A`` is not invertible.
    """
    ops = _reduce_to_identity(A)
    # Replaying the same additions on I builds E_s ... E_1 = A^{-1}.
    return replay_transcript(A.n, ops)


def row_reduce_transcript(B: GF2Matrix) -> list[tuple[int, int]]:
    """Row additions ``(src, dst)`` which, replayed on the identity, give ``B``.

    Each pair means ``row[dst] ^= row[src]``, i.e. a CNOT with control ``src``
    and target ``dst``. The list has at most ``n**2`` entries.
    """
    # Each elementary addition is its own inverse, so B = E_1 E_2 ... E_s.
    return _reduce_to_identity(B)[::-1]


def replay_transcript(n: int, ops: Iterable[tuple[int, int]]) -> GF2Matrix:
    rows = [1 << j for j in range(n)]
    for src, dst in ops:
        rows[dst] ^= rows[src]
    return GF2Matrix(n, tuple(rows))


def random_vector(n: int, rng: np.random.Generator) -> GF2Vector:
    return GF2Vector.from_list(rng.integers(0, 2, size=n).tolist())


def random_invertible(n: int, rng: np.random.Generator) -> GF2Matrix:
    """Uniformly random element of GL_n(F2) by rejection sampling.

    More than 28.8% of all 0-1 matrices are invertible for every ``n``, so the
    expected number of draws is below four.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    while True:
        A = GF2Matrix.from_list(rng.integers(0, 2, size=(n, n)).tolist())
        if rank(A) == n:
            return A


def all_invertible(n: int) -> list[GF2Matrix]:
    """Every element of GL_n(F2), in increasing order of the packed rows."""
    if n > 4:
        raise ValueError("enumeration of GL_n(F2) is limited to n <= 4")
    out = []
    for code in range(1 << (n * n)):
        rows = tuple((code >> (n * j)) & ((1 << n) - 1) for j in range(n))
        A = GF2Matrix(n, rows)
        if rank(A) == n:
            out.append(A)
    return out


def gl_order(n: int) -> int:
    out = 1
    for l in range(n):
        out *= (1 << n) - (1 << l)
    return out
