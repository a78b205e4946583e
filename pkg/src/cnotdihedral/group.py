"""CNOT-dihedral group elements as triples ``(poly, linear, shift)``.

The element ``g = (p, B, c)`` acts on computational basis states as

    g|b> = omega^p(b) |B b + c>,        omega = exp(2i pi / 2^k),

with ``p`` in W, so ``g|0...0>`` carries unit phase. ``multiply(g2, g1)`` is
the operator product ``g2 g1``: ``g1`` acts first.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterator, Mapping

import numpy as np

from . import gf2
from .gf2 import GF2Matrix, GF2Vector
from .phasepoly import PhasePolynomial, all_w_polynomials, random_w_polynomial, substitute_affine

SCHEMA = "cnotdihedral.element/1"


@dataclass(frozen=True)
class GroupParams:
    n: int
    k: int

    def __post_init__(self):
        if self.n < 1 or self.k < 1:
            raise ValueError(f"need n >= 1 and k >= 1, got n={self.n}, k={self.k}")

    @property
    def m(self) -> int:
        return 1 << self.k


@dataclass(frozen=True)
class CNOTDihedralElement:
    poly: PhasePolynomial
    linear: GF2Matrix
    shift: GF2Vector

    def __post_init__(self):
        n = self.poly.n
        if self.linear.n != n or self.shift.n != n:
            raise ValueError("poly, linear and shift must share n")
        if not self.linear.is_invertible():
            raise gf2.SingularMatrixError("linear part of a group element must be invertible")

    @property
    def n(self) -> int:
        return self.poly.n

    @property
    def k(self) -> int:
        return self.poly.k

    @property
    def params(self) -> GroupParams:
        return GroupParams(self.n, self.k)

    def __matmul__(self, other: CNOTDihedralElement) -> CNOTDihedralElement:
        return multiply(self, other)

    def key(self) -> tuple:
        """Canonical hashable form; equal keys iff equal elements."""
        return (self.n, self.k, self.poly.terms, self.linear.rows, self.shift.bits)

    def is_identity(self) -> bool:
        return self.poly.is_zero() and self.linear.is_identity() and self.shift.bits == 0

    def to_json(self) -> dict:
        return {
            "schema": SCHEMA,
            "n": self.n,
            "k": self.k,
            "poly": [{"mask": m, "coeff": c} for m, c in self.poly.terms],
            "linear": self.linear.to_list(),
            "shift": self.shift.to_list(),
        }

    @classmethod
    def from_json(cls, data: Mapping) -> CNOTDihedralElement:
        n, k = int(data["n"]), int(data["k"])
        terms = tuple((int(t["mask"]), int(t["coeff"])) for t in data["poly"])
        linear = GF2Matrix.from_list(data["linear"])
        shift = GF2Vector.from_list(data["shift"])
        return cls(PhasePolynomial(n, k, terms), linear, shift)

    def __str__(self):
        return f"({self.poly}, {self.linear.to_list()}, {self.shift.to_list()})"


def identity(params: GroupParams) -> CNOTDihedralElement:
    n = params.n
    return CNOTDihedralElement(PhasePolynomial.zero(n, params.k), GF2Matrix.identity(n), GF2Vector.zeros(n))


def diagonal(poly: PhasePolynomial) -> CNOTDihedralElement:
    return CNOTDihedralElement(poly, GF2Matrix.identity(poly.n), GF2Vector.zeros(poly.n))


def permutation(params: GroupParams, linear: GF2Matrix, shift: GF2Vector | None = None) -> CNOTDihedralElement:
    shift = GF2Vector.zeros(params.n) if shift is None else shift
    return CNOTDihedralElement(PhasePolynomial.zero(params.n, params.k), linear, shift)


def _check_params(g2: CNOTDihedralElement, g1: CNOTDihedralElement) -> None:
    if (g2.n, g2.k) != (g1.n, g1.k):
        raise ValueError(f"parameter mismatch: (n={g2.n}, k={g2.k}) vs (n={g1.n}, k={g1.k})")


def multiply(g2: CNOTDihedralElement, g1: CNOTDihedralElement) -> CNOTDihedralElement:
    """The product ``g2 g1`` (apply ``g1`` first)."""
    _check_params(g2, g1)
    poly = g1.poly + substitute_affine(g2.poly, g1.linear, g1.shift)
    linear = g2.linear @ g1.linear
    shift = (g2.linear @ g1.shift) ^ g2.shift
    return CNOTDihedralElement(poly, linear, shift)


def compose(*gates: CNOTDihedralElement) -> CNOTDihedralElement:
    """Product of elements listed in the order they act (leftmost first)."""
    if not gates:
        raise ValueError("compose needs at least one element")
    out = gates[0]
    for g in gates[1:]:
        out = multiply(g, out)
    return out


def inverse(g: CNOTDihedralElement) -> CNOTDihedralElement:
    B_inv = gf2.mat_inverse(g.linear)
    c_inv = B_inv @ g.shift
    poly = substitute_affine(-g.poly, B_inv, c_inv)
    return CNOTDihedralElement(poly, B_inv, c_inv)


def equal(g1: CNOTDihedralElement, g2: CNOTDihedralElement) -> bool:
    _check_params(g1, g2)
    return g1.key() == g2.key()


def sample_uniform(params: GroupParams, rng: np.random.Generator) -> CNOTDihedralElement:
    """Uniform random element: independent uniform draws from W, GL_n(F2) and F2^n."""
    poly = random_w_polynomial(params.n, params.k, rng)
    linear = gf2.random_invertible(params.n, rng)
    shift = gf2.random_vector(params.n, rng)
    return CNOTDihedralElement(poly, linear, shift)


def all_elements(params: GroupParams) -> Iterator[CNOTDihedralElement]:
    """Every group element, by enumerating triples. Only for tiny groups."""
    n = params.n
    mats = gf2.all_invertible(n)
    shifts = [GF2Vector(n, c) for c in range(1 << n)]
    for poly in all_w_polynomials(n, params.k):
        for B, c in itertools.product(mats, shifts):
            yield CNOTDihedralElement(poly, B, c)


def group_order(n: int, m: int) -> int:
    """Exact order of the n-qubit CNOT-dihedral group G_m, for any m >= 1."""
    if n < 1 or m < 1:
        raise ValueError("need n >= 1 and m >= 1")
    perm_part = (1 << n) * gf2.gl_order(n)
    diag_part = 1
    for t in range(1, n + 1):
        a = 1 << (t - 1)
        diag_part *= (math.lcm(a, m) // a) ** math.comb(n, t)
    return perm_part * diag_part
