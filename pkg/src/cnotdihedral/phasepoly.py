"""Phase polynomials: the diagonal part of a CNOT-dihedral element.

A phase polynomial on ``n`` binary variables with coefficients in Z_{2^k} is a
sum of multilinear monomials ``x^alpha`` (``alpha`` an n-bit mask, bit ``j`` for
variable ``x_j``). The polynomials that occur as diagonal group elements form
the additive group W: no constant term, and the coefficient of a degree-t
monomial is a multiple of ``2^(t-1)``. Degree-t coefficients therefore vanish
for ``t > k`` and are never stored.

The diagonal matrix of ``p`` is ``diag(omega^p(b))`` with ``omega = exp(2i pi / 2^k)``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Mapping

import numpy as np

from .gf2 import GF2Matrix, GF2Vector

# Raw polynomials are dicts {mask: coeff}; mask 0 is the constant term and is
# only allowed in intermediate results.
Raw = dict


def _raw_mul(a: Raw, b: Raw, modulus: int, max_degree: int) -> Raw:
    """Product of multilinear polynomials with ``x_j^2 = x_j``.

    Terms of degree above ``max_degree`` are dropped. They can only produce
    higher-degree terms in further products, so the kept part is exact.
    """
    out: Raw = {}
    for ma, ca in a.items():
        for mb, cb in b.items():
            m = ma | mb
            if m.bit_count() > max_degree:
                continue
            out[m] = (out.get(m, 0) + ca * cb) % modulus
    return {m: c for m, c in out.items() if c}


def _basis_raw(J: int, k: int) -> Raw:
    """Raw form of sum over nonempty alpha in J of (-2)^(|alpha|-1) x^alpha."""
    modulus = 1 << k
    out = {}
    sub = J
    while sub:
        t = sub.bit_count()
        if t <= k:
            c = (-2) ** (t - 1) % modulus
            if c:
                out[sub] = c
        sub = (sub - 1) & J
    return out


@dataclass(frozen=True)
class PhasePolynomial:
    """Element of W: ``terms`` is a tuple of ``(mask, coeff)`` sorted by mask."""

    n: int
    k: int
    terms: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.n < 1 or self.k < 1:
            raise ValueError(f"need n >= 1 and k >= 1, got n={self.n}, k={self.k}")
        modulus = 1 << self.k
        last = 0
        for mask, coeff in self.terms:
            if mask <= last:
                raise ValueError("masks must be strictly increasing and nonzero")
            last = mask
            if mask >> self.n:
                raise ValueError(f"mask {mask:#b} uses more than {self.n} variables")
            deg = mask.bit_count()
            if deg > self.k:
                raise ValueError(f"monomial {mask:#b} has degree {deg} > k={self.k}")
            if not 0 < coeff < modulus:
                raise ValueError(f"coefficient {coeff} not a nonzero residue mod {modulus}")
            if coeff % (1 << (deg - 1)):
                raise ValueError(
                    f"coefficient {coeff} of degree-{deg} monomial not divisible by {1 << (deg - 1)}"
                )

    # construction -----------------------------------------------------------

    @classmethod
    def zero(cls, n: int, k: int) -> PhasePolynomial:
        return cls(n, k)

    @classmethod
    def from_dict(cls, n: int, k: int, coeffs: Mapping[int, int]) -> PhasePolynomial:
        """Build from ``{mask: coeff}``; reduces mod 2^k and drops zeros.

        A nonzero constant term or a coefficient outside W raises ``ValueError``.
        """
        modulus = 1 << k
        items = []
        for mask, coeff in coeffs.items():
            c = coeff % modulus
            if not c:
                continue
            if mask == 0:
                raise ValueError("phase polynomials in W have no constant term")
            items.append((mask, c))
        return cls(n, k, tuple(sorted(items)))

    @classmethod
    def monomial(cls, n: int, k: int, variables, coeff: int = 1) -> PhasePolynomial:
        """``coeff * prod(x_j for j in variables)``; variables are 0-based."""
        mask = 0
        for j in variables:
            mask |= 1 << j
        return cls.from_dict(n, k, {mask: coeff})

    @classmethod
    def _from_raw(cls, n: int, k: int, raw: Raw) -> PhasePolynomial:
        modulus = 1 << k
        return cls(n, k, tuple(sorted((m, c % modulus) for m, c in raw.items() if m and c % modulus)))

    # accessors --------------------------------------------------------------

    @property
    def modulus(self) -> int:
        return 1 << self.k

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self.terms)

    def coeff(self, mask: int) -> int:
        return self.coeffs.get(mask, 0)

    def degree(self) -> int:
        return max((m.bit_count() for m, _ in self.terms), default=0)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.terms)

    def __len__(self):
        return len(self.terms)

    # arithmetic -------------------------------------------------------------

    def _check(self, other: PhasePolynomial) -> None:
        if (self.n, self.k) != (other.n, other.k):
            raise ValueError(
                f"parameter mismatch: (n={self.n}, k={self.k}) vs (n={other.n}, k={other.k})"
            )

    def __add__(self, other: PhasePolynomial) -> PhasePolynomial:
        return add(self, other)

    def __neg__(self) -> PhasePolynomial:
        return negate(self)

    def __sub__(self, other: PhasePolynomial) -> PhasePolynomial:
        return add(self, negate(other))

    def scale(self, a: int) -> PhasePolynomial:
        return PhasePolynomial._from_raw(self.n, self.k, {m: a * c for m, c in self.terms})

    def __call__(self, b) -> int:
        return evaluate(self, b)

    def evaluate_all(self) -> np.ndarray:
        """Values ``p(b)`` for every basis index ``b`` in ``range(2**n)``."""
        idx = np.arange(1 << self.n)
        out = np.zeros(1 << self.n, dtype=np.int64)
        for mask, coeff in self.terms:
            out[(idx & mask) == mask] += coeff
        return out % self.modulus

    # serialization ----------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "terms": [{"mask": m, "coeff": c} for m, c in self.terms],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> PhasePolynomial:
        terms = tuple((int(t["mask"]), int(t["coeff"])) for t in data["terms"])
        return cls(int(data["n"]), int(data["k"]), terms)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for mask, coeff in self.terms:
            mono = "*".join(f"x{j + 1}" for j in range(self.n) if mask >> j & 1)
            parts.append(mono if coeff == 1 else f"{coeff}*{mono}")
        return " + ".join(parts)


def add(p: PhasePolynomial, q: PhasePolynomial) -> PhasePolynomial:
    p._check(q)
    raw = dict(p.terms)
    for m, c in q.terms:
        raw[m] = raw.get(m, 0) + c
    return PhasePolynomial._from_raw(p.n, p.k, raw)


def negate(p: PhasePolynomial) -> PhasePolynomial:
    return PhasePolynomial._from_raw(p.n, p.k, {m: -c for m, c in p.terms})


def evaluate(p: PhasePolynomial, b) -> int:
    """``p(b) mod 2^k`` where ``b`` is a GF2Vector or a packed int."""
    if isinstance(b, GF2Vector):
        if b.n != p.n:
            raise ValueError(f"dimension mismatch: {b.n} != {p.n}")
        b = b.bits
    total = 0
    for mask, coeff in p.terms:
        if b & mask == mask:
            total += coeff
    return total % p.modulus


def monomial_basis_poly(J, n: int, k: int) -> PhasePolynomial:
    """The polynomial of ``XOR(x_j for j in J)``, expanded over Z_{2^k}.

    ``J`` is an iterable of 0-based variable indices or a packed mask.
    """
    mask = J if isinstance(J, int) else sum(1 << j for j in set(J))
    if mask == 0:
        raise ValueError("J must be nonempty")
    if mask >> n:
        raise ValueError(f"J uses variables outside range({n})")
    return PhasePolynomial._from_raw(n, k, _basis_raw(mask, k))


def substitute_affine(p: PhasePolynomial, B: GF2Matrix, c: GF2Vector) -> PhasePolynomial:
    """The polynomial ``q(x) = p(Bx + c) - p(c)``.

    Each ``x'_j = (Bx + c)_j`` is expanded as the XOR polynomial of row ``j`` of
    ``B`` (complemented when ``c_j = 1``), monomials of ``p`` are built from
    cached products, and the constant term (a global phase) is dropped once
    at the end.
    """
    if B.n != p.n or c.n != p.n:
        raise ValueError(f"dimension mismatch: poly n={p.n}, B n={B.n}, c n={c.n}")
    if not p.terms:
        return p
    n, k = p.n, p.k
    modulus = 1 << k

    images: list[Raw] = []
    for j in range(n):
        img = _basis_raw(B.rows[j], k)
        if (c.bits >> j) & 1:
            img = {m: -v % modulus for m, v in img.items()}
            img[0] = 1
        images.append(img)

    cache: dict[int, Raw] = {0: {0: 1}}

    def product(mask: int) -> Raw:
        got = cache.get(mask)
        if got is None:
            low = mask & -mask
            got = _raw_mul(product(mask ^ low), images[low.bit_length() - 1], modulus, k)
            cache[mask] = got
        return got

    acc: Raw = {}
    for mask, coeff in p.terms:
        for m, v in product(mask).items():
            acc[m] = (acc.get(m, 0) + coeff * v) % modulus
    acc.pop(0, None)
    return PhasePolynomial._from_raw(n, k, acc)


def quotient(coeff: int, degree: int, k: int) -> int:
    """Smallest ``a >= 0`` with ``a * (-2)^(degree-1) == coeff (mod 2^k)``."""
    if degree < 1 or degree > k:
        raise ValueError(f"degree must be in 1..{k}")
    shift = degree - 1
    if coeff % (1 << shift):
        raise ValueError(f"{coeff} is not divisible by {1 << shift}")
    a = (coeff >> shift) * (-1) ** shift
    return a % (1 << (k - shift))


def monomials(n: int, k: int) -> list[int]:
    """Masks of every monomial with ``1 <= degree <= k``, in increasing order."""
    return [m for m in range(1, 1 << n) if m.bit_count() <= k]


def random_w_polynomial(n: int, k: int, rng: np.random.Generator) -> PhasePolynomial:
    """Uniform sample from W: ``(-2)^(t-1) * u`` with ``u`` uniform in Z_{2^k} per monomial."""
    masks = monomials(n, k)
    modulus = 1 << k
    draws = rng.integers(0, modulus, size=len(masks))
    raw = {m: (-2) ** (m.bit_count() - 1) * int(u) for m, u in zip(masks, draws)}
    return PhasePolynomial._from_raw(n, k, raw)


def w_order(n: int, k: int) -> int:
    """Number of elements of W."""
    order = 1
    for m in monomials(n, k):
        order *= 1 << (k - m.bit_count() + 1)
    return order


def all_w_polynomials(n: int, k: int) -> Iterator[PhasePolynomial]:
    """Iterate over every element of W (small n, k only)."""
    masks = monomials(n, k)
    ranges = [[(1 << (m.bit_count() - 1)) * v for v in range(1 << (k - m.bit_count() + 1))] for m in masks]
    for values in itertools.product(*ranges):
        yield PhasePolynomial(n, k, tuple((m, v) for m, v in zip(masks, values) if v))
