"""Circuits over the generators CNOT, X and Z_{2^k}^a, and synthesis from triples.

Qubits are 0-based in the Python API and 1-based in the text format. Gates in a
circuit are listed in the order they act.

Text format::

    #cnotdihedral n=2 k=3
    cx 1 2        # CNOT, control 1, target 2
    x 2           # bit flip on qubit 2
    zp 3 1        # Z_8^3 on qubit 1

For ``k >= 3`` the parser also accepts ``t``/``tdg``, for ``k >= 2`` ``s``/``sdg``,
and always ``z``; these stand for ``zp`` powers ``2^(k-3)``, ``2^(k-2)`` and
``2^(k-1)`` (and their negatives).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from . import gf2
from .gf2 import GF2Matrix, GF2Vector
from .group import CNOTDihedralElement, GroupParams, identity, multiply
from .phasepoly import PhasePolynomial, _basis_raw, monomials, monomial_basis_poly, quotient

CX, X, ZP = "cx", "x", "zp"


class CircuitParseError(ValueError):
    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        prefix = f"line {lineno}: " if lineno is not None else ""
        super().__init__(prefix + message)


@dataclass(frozen=True)
class Gate:
    name: str
    qubits: tuple[int, ...]
    power: int = 0

    def __repr__(self):
        if self.name == ZP:
            return f"zp({self.power}, {self.qubits[0]})"
        return f"{self.name}{self.qubits}"


def cnot(control: int, target: int) -> Gate:
    return Gate(CX, (control, target))


def xgate(target: int) -> Gate:
    return Gate(X, (target,))


def phase(target: int, power: int) -> Gate:
    return Gate(ZP, (target,), power)


@dataclass(frozen=True)
class Circuit:
    n: int
    k: int
    gates: tuple[Gate, ...] = field(default=())

    def __post_init__(self):
        GroupParams(self.n, self.k)
        object.__setattr__(self, "gates", tuple(self.gates))
        for g in self.gates:
            _validate_gate(g, self.n, self.k)

    @property
    def params(self) -> GroupParams:
        return GroupParams(self.n, self.k)

    def __len__(self):
        return len(self.gates)

    def __iter__(self):
        return iter(self.gates)

    def __add__(self, other: Circuit) -> Circuit:
        if (self.n, self.k) != (other.n, other.k):
            raise ValueError("cannot concatenate circuits with different n, k")
        return Circuit(self.n, self.k, self.gates + other.gates)

    def count(self, name: str) -> int:
        return sum(g.name == name for g in self.gates)


def _validate_gate(g: Gate, n: int, k: int) -> None:
    if g.name == CX:
        if len(g.qubits) != 2 or g.qubits[0] == g.qubits[1]:
            raise ValueError(f"CNOT needs two distinct qubits, got {g.qubits}")
    elif g.name in (X, ZP):
        if len(g.qubits) != 1:
            raise ValueError(f"{g.name} acts on one qubit, got {g.qubits}")
    else:
        raise ValueError(f"unknown gate {g.name!r}")
    for q in g.qubits:
        if not 0 <= q < n:
            raise ValueError(f"qubit index {q} out of range for n={n}")
    if g.name == ZP and not 0 <= g.power < (1 << k):
        raise ValueError(f"phase power {g.power} out of range for k={k}")


def gate_element(g: Gate, params: GroupParams) -> CNOTDihedralElement:
    """The triple of a single generator."""
    n, k = params.n, params.k
    _validate_gate(g, n, k)
    if g.name == CX:
        return CNOTDihedralElement(
            PhasePolynomial.zero(n, k), GF2Matrix.elementary(n, *g.qubits), GF2Vector.zeros(n)
        )
    if g.name == X:
        return CNOTDihedralElement(
            PhasePolynomial.zero(n, k), GF2Matrix.identity(n), GF2Vector(n, 1 << g.qubits[0])
        )
    return CNOTDihedralElement(
        PhasePolynomial.monomial(n, k, g.qubits, g.power), GF2Matrix.identity(n), GF2Vector.zeros(n)
    )


def evaluate_circuit(circ: Circuit) -> CNOTDihedralElement:
    """The group element of a circuit, by streaming updates to the triple.

    A phase gate on qubit ``j`` adds ``a * x'_j`` where ``x'_j`` is the current
    affine image of qubit ``j``, expanded as an XOR polynomial; CNOT and X only
    update the affine part.
    """
    n, k = circ.n, circ.k
    modulus = 1 << k
    rows = [1 << j for j in range(n)]
    shift = 0
    poly: dict[int, int] = {}
    for g in circ.gates:
        if g.name == CX:
            i, j = g.qubits
            rows[j] ^= rows[i]
            shift ^= ((shift >> i) & 1) << j
        elif g.name == X:
            shift ^= 1 << g.qubits[0]
        else:
            j, a = g.qubits[0], g.power
            if not a:
                continue
            sign = -1 if (shift >> j) & 1 else 1
            for m, c in _basis_raw(rows[j], k).items():
                poly[m] = (poly.get(m, 0) + sign * a * c) % modulus
    poly_obj = PhasePolynomial._from_raw(n, k, poly)
    return CNOTDihedralElement(poly_obj, GF2Matrix(n, tuple(rows)), GF2Vector(n, shift))


def evaluate_by_multiply(circ: Circuit) -> CNOTDihedralElement:
    """Reference evaluation as a fold of ``multiply`` over generator triples."""
    out = identity(circ.params)
    for g in circ.gates:
        out = multiply(gate_element(g, circ.params), out)
    return out


def monomial_gadget(J, j: int, a: int, params: GroupParams) -> Circuit:
    """CNOT-conjugated phase gate whose element is ``a * p_J`` with trivial affine part.

    The CNOTs from every other qubit of ``J`` onto ``j`` put the parity of ``J``
    on qubit ``j``; ``Z^a`` there and the same CNOTs again undo the parity.
    """
    J = sorted(set(J))
    if not J:
        raise ValueError("J must be nonempty")
    if j not in J:
        raise ValueError(f"target {j} must belong to J={J}")
    for q in J:
        if not 0 <= q < params.n:
            raise ValueError(f"qubit {q} out of range for n={params.n}")
    fan = [cnot(l, j) for l in J if l != j]
    gates = fan + [phase(j, a % params.m)] + fan
    return Circuit(params.n, params.k, tuple(gates))


def synthesize_phase(poly: PhasePolynomial) -> Circuit:
    """Circuit for the diagonal element of ``poly``, highest degree first."""
    n, k = poly.n, poly.k
    params = GroupParams(n, k)
    q = poly
    gates: list[Gate] = []
    by_degree = {}
    for m in monomials(n, k):
        by_degree.setdefault(m.bit_count(), []).append(m)
    for t in range(k, 0, -1):
        coeffs = q.coeffs
        for mask in by_degree.get(t, []):
            c = coeffs.get(mask, 0)
            if not c:
                continue
            a = quotient(c, t, k)
            J = [j for j in range(n) if mask >> j & 1]
            gates.extend(monomial_gadget(J, J[-1], a, params).gates)
            q = q - monomial_basis_poly(mask, n, k).scale(a)
        if any(m.bit_count() >= t for m, _ in q.terms):
            raise AssertionError(f"round {t} left terms of degree >= {t}: {q}")
    return Circuit(n, k, tuple(gates))


def synthesize(g: CNOTDihedralElement) -> Circuit:
    """Circuit for ``g``: phase gadgets, then a CNOT network for B, then X gates for c."""
    n, k = g.n, g.k
    gates = list(synthesize_phase(g.poly).gates)
    gates.extend(cnot(src, dst) for src, dst in gf2.row_reduce_transcript(g.linear))
    gates.extend(xgate(j) for j in range(n) if g.shift[j])
    return Circuit(n, k, tuple(gates))


def circuit_inverse(circ: Circuit) -> Circuit:
    m = 1 << circ.k
    gates = []
    for g in reversed(circ.gates):
        gates.append(phase(g.qubits[0], -g.power % m) if g.name == ZP else g)
    return Circuit(circ.n, circ.k, tuple(gates))


def phase_gate_bound(n: int, k: int) -> int:
    """Upper bound on the size of the phase part of a synthesized circuit."""
    from math import comb

    return sum(comb(n, t) * (2 * t - 1) for t in range(1, k + 1))


# text format ---------------------------------------------------------------

_HEADER = re.compile(r"^#\s*cnotdihedral\s+n\s*=\s*(\d+)\s+k\s*=\s*(\d+)\s*$")


def _named_powers(k: int) -> dict[str, int]:
    m = 1 << k
    out = {"z": m // 2}
    if k >= 2:
        out.update(s=m // 4, sdg=m - m // 4)
    if k >= 3:
        out.update(t=m // 8, tdg=m - m // 8)
    return out


def export_text(circ: Circuit, named: bool = False) -> str:
    """Serialize a circuit; ``named=True`` (k=3 only) writes t/tdg/s/sdg/z where possible."""
    if named and circ.k != 3:
        raise ValueError("named export is defined for k=3 only")
    names = {v: key for key, v in _named_powers(circ.k).items()} if named else {}
    lines = [f"#cnotdihedral n={circ.n} k={circ.k}"]
    for g in circ.gates:
        q = [x + 1 for x in g.qubits]
        if g.name == CX:
            lines.append(f"cx {q[0]} {q[1]}")
        elif g.name == X:
            lines.append(f"x {q[0]}")
        elif g.power in names:
            lines.append(f"{names[g.power]} {q[0]}")
        else:
            lines.append(f"zp {g.power} {q[0]}")
    return "\n".join(lines) + "\n"


def parse_text(text: str, n: int | None = None, k: int | None = None) -> Circuit:
    """Parse the line format. ``n``/``k`` are required if there is no header line."""
    gates: list[Gate] = []
    header_seen = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        match = _HEADER.match(raw.strip())
        if match:
            if header_seen or gates:
                raise CircuitParseError("header must appear once, before any gate", lineno)
            hn, hk = int(match.group(1)), int(match.group(2))
            if (n is not None and n != hn) or (k is not None and k != hk):
                raise CircuitParseError(f"header n={hn} k={hk} conflicts with n={n} k={k}", lineno)
            n, k = hn, hk
            header_seen = True
            continue
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if n is None or k is None:
            raise CircuitParseError("missing '#cnotdihedral n=<n> k=<k>' header", lineno)
        tokens = line.split()
        op, args = tokens[0].lower(), tokens[1:]
        try:
            ints = [int(a) for a in args]
        except ValueError:
            raise CircuitParseError(f"non-integer argument in {line!r}", lineno) from None
        named = _named_powers(k)
        if op == CX and len(ints) == 2:
            gate = cnot(ints[0] - 1, ints[1] - 1)
        elif op == X and len(ints) == 1:
            gate = xgate(ints[0] - 1)
        elif op == ZP and len(ints) == 2:
            gate = phase(ints[1] - 1, ints[0])
        elif op in named and len(ints) == 1:
            gate = phase(ints[0] - 1, named[op])
        else:
            raise CircuitParseError(f"cannot parse gate {line!r}", lineno)
        try:
            _validate_gate(gate, n, k)
        except ValueError as exc:
            raise CircuitParseError(str(exc), lineno) from None
        gates.append(gate)
    if n is None or k is None:
        raise CircuitParseError("missing '#cnotdihedral n=<n> k=<k>' header")
    return Circuit(n, k, tuple(gates))
