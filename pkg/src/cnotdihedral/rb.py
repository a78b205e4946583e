"""Randomized benchmarking over G_{2^k}: sequences, noisy simulation and fitting.

A sequence of length ``l`` is ``l`` uniformly random group elements followed by
the recovery element that inverts their product. The noise channel is applied
after every element, the recovery included. Preparing ``|0...0>`` isolates the
``alpha_Z`` decay and ``|+...+>`` isolates ``alpha_R``.
"""

from __future__ import annotations

import csv
import io
import json
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from typing import Mapping

import numpy as np
from scipy.optimize import least_squares
from scipy.stats import chi2 as chi2_dist

from .group import CNOTDihedralElement, GroupParams, identity, inverse, multiply, sample_uniform
from .sim.pauli import KrausChannel, PauliChannel, channel_from_json
from .sim.states import (
    SimulationBudgetError,
    apply_element,
    element_monomial,
    expectation,
    plus_state,
    zero_state,
)

CONFIG_SCHEMA = "cnotdihedral.rbconfig/1"
FIT_SCHEMA = "cnotdihedral.rbfit/1"
MAX_DENSITY_QUBITS = 6
MAX_TRAJECTORY_QUBITS = 12
DEVIATION_SIGNIFICANCE = 1e-3


class FitNonConvergence(RuntimeError):
    def __init__(self, message: str, diagnostics: Mapping | None = None):
        super().__init__(message)
        self.diagnostics = dict(diagnostics or {})


class InsufficientLengths(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class RBConfig:
    n: int
    k: int
    lengths: tuple[int, ...]
    num_sequences: int = 20
    states: tuple = ("zeros", "plus")
    noise: PauliChannel | KrausChannel | None = None
    observable: np.ndarray | None = None
    interleaved_gate: CNOTDihedralElement | None = None
    seed: int = 0
    mode: str = "density"

    def __post_init__(self):
        GroupParams(self.n, self.k)
        object.__setattr__(self, "lengths", tuple(int(l) for l in self.lengths))
        object.__setattr__(self, "states", tuple(self.states))
        if not self.lengths or min(self.lengths) < 1:
            raise ValueError("lengths must be a nonempty list of positive integers")
        if self.num_sequences < 1:
            raise ValueError("num_sequences must be at least 1")
        if self.mode not in ("density", "trajectory"):
            raise ValueError(f"unknown simulation mode {self.mode!r}")
        if self.noise is not None and self.noise.n != self.n:
            raise ValueError("noise channel acts on the wrong number of qubits")
        if self.interleaved_gate is not None and self.interleaved_gate.params != self.params:
            raise ValueError("interleaved gate has the wrong group parameters")
        if self.mode == "trajectory" and not (self.noise is None or isinstance(self.noise, PauliChannel)):
            raise ValueError("trajectory mode needs a Pauli noise channel")

    @property
    def params(self) -> GroupParams:
        return GroupParams(self.n, self.k)

    @classmethod
    def from_json(cls, data: Mapping) -> RBConfig:
        n, k = int(data["n"]), int(data["k"])
        noise = data.get("noise")
        if noise is not None:
            noise = channel_from_json({"n": n, **noise})
        gate = data.get("interleaved_gate")
        if gate is not None:
            gate = CNOTDihedralElement.from_json(gate)
        observable = data.get("observable")
        if observable is not None:
            observable = _matrix_from_json(observable)
        states = tuple(_matrix_from_json(s) if isinstance(s, Mapping) else s for s in data.get("states", ("zeros", "plus")))
        return cls(
            n=n,
            k=k,
            lengths=tuple(data["lengths"]),
            num_sequences=int(data.get("num_sequences", 20)),
            states=states,
            noise=noise,
            observable=observable,
            interleaved_gate=gate,
            seed=int(data.get("seed", 0)),
            mode=data.get("mode", "density"),
        )


def _matrix_from_json(obj) -> np.ndarray:
    real = np.array(obj["real"], dtype=float)
    imag = np.array(obj.get("imag", np.zeros_like(real)), dtype=float)
    return real + 1j * imag


def state_name(state) -> str:
    return state if isinstance(state, str) else "custom"


def prepare_state(n: int, state) -> np.ndarray:
    if isinstance(state, str):
        if state == "zeros":
            return zero_state(n)
        if state == "plus":
            return plus_state(n)
        raise ValueError(f"unknown input state {state!r}")
    rho = np.asarray(state, dtype=complex)
    if rho.shape != (1 << n, 1 << n):
        raise ValueError("custom input state has the wrong shape")
    return rho


@dataclass(frozen=True, eq=False)
class RBSequence:
    elements: tuple[CNOTDihedralElement, ...]
    recovery: CNOTDihedralElement
    interleaved: CNOTDihedralElement | None = None

    @property
    def length(self) -> int:
        return len(self.elements)

    def gates(self) -> list[CNOTDihedralElement]:
        out = []
        for g in self.elements:
            out.append(g)
            if self.interleaved is not None:
                out.append(self.interleaved)
        out.append(self.recovery)
        return out

    def product(self) -> CNOTDihedralElement:
        out = identity(self.recovery.params)
        for g in self.gates():
            out = multiply(g, out)
        return out


def sequence_rng(seed: int, length_index: int, seq_index: int, stream: int = 0) -> np.random.Generator:
    """Independent stream per sequence, so serial and threaded runs agree."""
    return np.random.default_rng(np.random.SeedSequence([seed, length_index, seq_index, stream]))


def random_sequence(params: GroupParams, length: int, rng: np.random.Generator,
                    interleaved: CNOTDihedralElement | None = None) -> RBSequence:
    elements = []
    prod = identity(params)
    for _ in range(length):
        g = sample_uniform(params, rng)
        elements.append(g)
        prod = multiply(g, prod)
        if interleaved is not None:
            prod = multiply(interleaved, prod)
    return RBSequence(tuple(elements), inverse(prod), interleaved)


def generate_sequences(cfg: RBConfig, rng: np.random.Generator | None = None) -> dict[int, list[RBSequence]]:
    """``cfg.num_sequences`` sequences per length.

    Without ``rng`` each sequence draws from its own stream derived from
    ``(cfg.seed, length index, sequence index)``.
    """
    out = {}
    for li, length in enumerate(cfg.lengths):
        seqs = []
        for si in range(cfg.num_sequences):
            r = rng if rng is not None else sequence_rng(cfg.seed, li, si)
            seqs.append(random_sequence(cfg.params, length, r, cfg.interleaved_gate))
        out[length] = seqs
    return out


def _apply_noise(rho: np.ndarray, noise) -> np.ndarray:
    return rho if noise is None else noise.apply(rho)


def simulate_sequence(seq: RBSequence, cfg: RBConfig, state="zeros", rng: np.random.Generator | None = None) -> float:
    """Sequence fidelity ``Tr[E S(rho)]`` with the noise applied after every gate.

    ``rng`` drives Pauli-error sampling in trajectory mode and is otherwise unused.
    """
    if cfg.mode == "trajectory":
        return _simulate_trajectory(seq, cfg, state, rng or np.random.default_rng(cfg.seed))
    if cfg.n > MAX_DENSITY_QUBITS:
        raise SimulationBudgetError(f"density-matrix mode is limited to n <= {MAX_DENSITY_QUBITS}")
    rho0 = prepare_state(cfg.n, state)
    rho = rho0
    for g in seq.gates():
        rho = _apply_noise(apply_element(rho, g), cfg.noise)
    E = cfg.observable if cfg.observable is not None else rho0
    return expectation(E, rho)


def _state_vector(n: int, state) -> np.ndarray:
    dim = 1 << n
    if state == "zeros":
        psi = np.zeros(dim, dtype=complex)
        psi[0] = 1
        return psi
    if state == "plus":
        return np.full(dim, dim ** -0.5, dtype=complex)
    raise ValueError("trajectory mode supports only the 'zeros' and 'plus' input states")


def _simulate_trajectory(seq: RBSequence, cfg: RBConfig, state, rng: np.random.Generator) -> float:
    if cfg.n > MAX_TRAJECTORY_QUBITS:
        raise SimulationBudgetError(f"trajectory mode is limited to n <= {MAX_TRAJECTORY_QUBITS}")
    n = cfg.n
    dim = 1 << n
    b = np.arange(dim)
    parity = np.array([v.bit_count() & 1 for v in range(dim)])
    psi0 = _state_vector(n, state)
    psi = psi0
    probs = None if cfg.noise is None else np.asarray(cfg.noise.probs)
    for g in seq.gates():
        rows, exps = element_monomial(g)
        nxt = np.empty_like(psi)
        nxt[rows] = np.exp(2j * np.pi * exps / (1 << cfg.k)) * psi
        psi = nxt
        if probs is not None:
            idx = int(rng.choice(probs.size, p=probs))
            x, z = idx >> n, idx & (dim - 1)
            signs = 1.0 - 2.0 * parity[z & b]
            nxt = np.empty_like(psi)
            nxt[b ^ x] = signs * psi
            psi = nxt
    if cfg.observable is not None:
        return float(np.real(psi.conj() @ cfg.observable @ psi))
    return float(abs(np.vdot(psi0, psi)) ** 2)


# datasets ------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class RBDataset:
    n: int
    k: int
    seed: int
    lengths: tuple[int, ...]
    records: tuple[tuple[int, str, int, float], ...]  # (length, state, seq_index, fidelity)
    interleaved: bool = False

    def states(self) -> list[str]:
        seen = []
        for _, s, _, _ in self.records:
            if s not in seen:
                seen.append(s)
        return seen

    def samples(self, state: str, length: int) -> np.ndarray:
        return np.array([f for l, s, _, f in self.records if s == state and l == length])

    def summary(self, state: str) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """``(lengths, means, stderr)`` for one input state."""
        lengths = np.array(self.lengths, dtype=float)
        means, errs = [], []
        for l in self.lengths:
            x = self.samples(state, l)
            means.append(float(np.mean(x)))
            errs.append(float(np.std(x, ddof=1) / math.sqrt(x.size)) if x.size > 1 else 0.0)
        return lengths, np.array(means), np.array(errs)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["length", "state", "seq_index", "fidelity"])
        for l, s, i, f in self.records:
            w.writerow([l, s, i, repr(float(f))])
        return buf.getvalue()

    @classmethod
    def from_csv(cls, text: str, n: int, k: int, seed: int = 0) -> RBDataset:
        rows = list(csv.DictReader(io.StringIO(text)))
        records = tuple((int(r["length"]), r["state"], int(r["seq_index"]), float(r["fidelity"])) for r in rows)
        lengths = tuple(sorted({r[0] for r in records}))
        return cls(n, k, seed, lengths, records)


def estimate_sequence_fidelity(cfg: RBConfig, threads: int = 1,
                               sequences: dict[int, list[RBSequence]] | None = None) -> RBDataset:
    """Simulate every sequence for every input state; deterministic given ``cfg.seed``."""
    if sequences is None:
        sequences = generate_sequences(cfg)
    jobs = []
    for li, length in enumerate(cfg.lengths):
        for state in cfg.states:
            for si, seq in enumerate(sequences[length]):
                jobs.append((li, length, state, si, seq))

    def run(job):
        li, length, state, si, seq = job
        noise_rng = sequence_rng(cfg.seed, li, si, stream=1 + cfg.states.index(state))
        return simulate_sequence(seq, cfg, state, noise_rng)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            values = list(pool.map(run, jobs))
    else:
        values = [run(j) for j in jobs]
    records = tuple((length, state_name(state), si, float(v)) for (_, length, state, si, _), v in zip(jobs, values))
    return RBDataset(cfg.n, cfg.k, cfg.seed, cfg.lengths, records, cfg.interleaved_gate is not None)


# fitting -------------------------------------------------------------------

@dataclass(frozen=True)
class DecayFit:
    """Fit of ``A alpha^l + e_I`` (or the two-decay model) to one state's means."""

    model: str
    params: dict
    stderr: dict
    chi2_dof: float | None
    degenerate: bool = False
    deviation_flag: bool = False
    nfev: int = 0
    p_value: float | None = None

    @property
    def alpha(self) -> float:
        return self.params["alpha"]


def _decay(params, ls):
    A, alpha, e = params
    return A * alpha ** ls + e


def _alpha_from(s):
    return np.exp(-s * s)


def _s_from(alpha):
    return math.sqrt(-math.log(min(max(alpha, 1e-12), 1 - 1e-12)))


def _initial_guess(ls, ys):
    e0 = ys[-1]
    A0 = ys[0] - e0
    guess = None
    if abs(A0) > 1e-12:
        mid = len(ls) // 2
        ratio = (ys[mid] - e0) / A0
        if 0 < ratio < 1 and ls[mid] > ls[0]:
            guess = ratio ** (1.0 / (ls[mid] - ls[0]))
    if guess is None or not 0 < guess < 1:
        # fall back to a grid scan with (A, e_I) solved linearly at each alpha
        best = None
        for a in np.linspace(0.01, 0.9999, 400):
            X = np.column_stack([a ** ls, np.ones_like(ls)])
            coef, *_ = np.linalg.lstsq(X, ys, rcond=None)
            res = float(np.sum((X @ coef - ys) ** 2))
            if best is None or res < best[0]:
                best = (res, a, coef)
        _, guess, (A0, e0) = best
    A0 = (ys[0] - e0) / guess ** ls[0]
    return A0, guess, e0


def _weights(errs):
    errs = np.asarray(errs, dtype=float)
    if np.all(errs > 0):
        return errs, True
    return np.ones_like(errs), False


def fit_single(lengths, means, stderr=None, significance: float = DEVIATION_SIGNIFICANCE) -> DecayFit:
    """Least-squares fit of ``A alpha^l + e_I`` with ``0 < alpha <= 1``.

    Per-length standard errors weight the residuals when they are all positive;
    otherwise the fit is unweighted and errors come from the residual scatter.
    In the weighted case the fit is flagged as non-exponential when the
    chi-square p-value falls below ``significance``.
    """
    ls = np.asarray(lengths, dtype=float)
    ys = np.asarray(means, dtype=float)
    if np.unique(ls).size < 3:
        raise InsufficientLengths("the single-decay model needs at least 3 distinct lengths")
    order = np.argsort(ls)
    ls, ys = ls[order], ys[order]
    sig, weighted = _weights(np.zeros_like(ls) if stderr is None else np.asarray(stderr)[order])
    if not np.all(np.isfinite(ys)):
        raise ValueError("fidelities must be finite")
    if np.ptp(ys) < 1e-12:
        return DecayFit(
            "single",
            {"A": 0.0, "alpha": 1.0, "e_I": float(np.mean(ys))},
            {"A": 0.0, "alpha": 0.0, "e_I": 0.0},
            None,
            degenerate=True,
        )
    A0, a0, e0 = _initial_guess(ls, ys)

    def resid(theta):
        A, s, e = theta
        return (_decay((A, _alpha_from(s), e), ls) - ys) / sig

    sol = least_squares(resid, [A0, _s_from(a0), e0], method="lm", xtol=1e-15, ftol=1e-15, gtol=1e-15, max_nfev=20000)
    A, s, e = sol.x
    alpha = float(_alpha_from(s))
    if not sol.success or not np.all(np.isfinite(sol.x)):
        raise FitNonConvergence(sol.message, {"x": sol.x.tolist(), "nfev": sol.nfev, "status": sol.status})
    jac = np.column_stack([alpha ** ls, A * ls * alpha ** (ls - 1), np.ones_like(ls)]) / sig[:, None]
    r = (_decay((A, alpha, e), ls) - ys) / sig
    dof = ls.size - 3
    chi2 = float(r @ r)
    try:
        cov = np.linalg.inv(jac.T @ jac)
    except np.linalg.LinAlgError:
        cov = np.full((3, 3), np.nan)
    if not weighted:
        cov = cov * (chi2 / dof if dof > 0 else np.nan)
    errs = np.sqrt(np.clip(np.diag(cov), 0, None))
    chi2_dof = chi2 / dof if weighted and dof > 0 else None
    p_value = float(chi2_dist.sf(chi2, dof)) if chi2_dof is not None else None
    return DecayFit(
        "single",
        {"A": float(A), "alpha": alpha, "e_I": float(e)},
        {"A": float(errs[0]), "alpha": float(errs[1]), "e_I": float(errs[2])},
        chi2_dof,
        deviation_flag=bool(p_value is not None and p_value < significance),
        nfev=int(sol.nfev),
        p_value=p_value,
    )


def fit_dual(lengths, means, stderr=None) -> DecayFit:
    """Joint fit of ``A_Z alpha_Z^l + A_R alpha_R^l + e_I``."""
    ls = np.asarray(lengths, dtype=float)
    ys = np.asarray(means, dtype=float)
    if np.unique(ls).size < 5:
        raise InsufficientLengths("the two-decay model needs at least 5 distinct lengths")
    sig, weighted = _weights(np.zeros_like(ls) if stderr is None else stderr)
    start = fit_single(ls, ys, None if not weighted else sig)
    a = start.params["alpha"]

    def model(theta):
        Az, sz, Ar, sr, e = theta
        return Az * _alpha_from(sz) ** ls + Ar * _alpha_from(sr) ** ls + e

    best = None
    for az0, ar0 in ((min(a ** 0.5, 0.999), a * a), (a * a, min(a ** 0.5, 0.999))):
        x0 = [start.params["A"] / 2, _s_from(az0), start.params["A"] / 2, _s_from(ar0), start.params["e_I"]]
        sol = least_squares(lambda t: (model(t) - ys) / sig, x0, method="lm", max_nfev=20000)
        if best is None or sol.cost < best.cost:
            best = sol
    Az, sz, Ar, sr, e = best.x
    az, ar = float(_alpha_from(sz)), float(_alpha_from(sr))
    jac = np.column_stack([
        az ** ls, Az * ls * az ** (ls - 1), ar ** ls, Ar * ls * ar ** (ls - 1), np.ones_like(ls)
    ]) / sig[:, None]
    r = (model(best.x) - ys) / sig
    dof = ls.size - 5
    chi2 = float(r @ r)
    try:
        cov = np.linalg.pinv(jac.T @ jac)
    except np.linalg.LinAlgError:
        cov = np.full((5, 5), np.nan)
    if not weighted:
        cov = cov * (chi2 / dof if dof > 0 else np.nan)
    errs = np.sqrt(np.clip(np.diag(cov), 0, None))
    names = ["A_Z", "alpha_Z", "A_R", "alpha_R", "e_I"]
    return DecayFit(
        "dual",
        dict(zip(names, map(float, (Az, az, Ar, ar, e)))),
        dict(zip(names, map(float, errs))),
        chi2 / dof if weighted and dof > 0 else None,
        nfev=int(best.nfev),
    )


@dataclass(frozen=True)
class RBFit:
    n: int
    per_state: dict
    alpha_Z: float | None = None
    alpha_R: float | None = None
    alpha: float | None = None
    r: float | None = None
    stderr: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "per_state": {s: _fit_json(f) for s, f in self.per_state.items()},
            "alpha_Z": self.alpha_Z,
            "alpha_R": self.alpha_R,
            "alpha": self.alpha,
            "r": self.r,
            "stderr": self.stderr,
        }


def _fit_json(f: DecayFit) -> dict:
    return {
        "model": f.model,
        "params": f.params,
        "stderr": f.stderr,
        "chi2_dof": f.chi2_dof,
        "p_value": f.p_value,
        "degenerate": f.degenerate,
        "deviation_flag": f.deviation_flag,
    }


def combine(alpha_z: float, alpha_r: float, n: int, se_z: float = 0.0, se_r: float = 0.0) -> dict:
    """Depolarizing parameter and average gate error from the two decay rates."""
    d = 1 << n
    alpha = (alpha_z + d * alpha_r) / (d + 1)
    se_alpha = math.hypot(se_z, d * se_r) / (d + 1)
    r = (d - 1) * (1 - alpha) / d
    return {"alpha": alpha, "r": r, "se_alpha": se_alpha, "se_r": (d - 1) * se_alpha / d}


def fit_decay(ds: RBDataset, model: str = "single", significance: float = DEVIATION_SIGNIFICANCE) -> RBFit:
    """Fit every input state in ``ds``; combine zeros and plus into ``alpha`` and ``r``."""
    if model not in ("single", "dual"):
        raise ValueError(f"unknown model {model!r}")
    per_state = {}
    for state in ds.states():
        ls, ys, errs = ds.summary(state)
        per_state[state] = fit_single(ls, ys, errs, significance) if model == "single" else fit_dual(ls, ys, errs)
    out = {"n": ds.n, "per_state": per_state}
    if model == "single" and "zeros" in per_state and "plus" in per_state:
        fz, fr = per_state["zeros"], per_state["plus"]
        comb = combine(fz.alpha, fr.alpha, ds.n, fz.stderr["alpha"], fr.stderr["alpha"])
        out.update(
            alpha_Z=fz.alpha,
            alpha_R=fr.alpha,
            alpha=comb["alpha"],
            r=comb["r"],
            stderr={"alpha_Z": fz.stderr["alpha"], "alpha_R": fr.stderr["alpha"],
                    "alpha": comb["se_alpha"], "r": comb["se_r"]},
        )
    elif model == "dual" and len(per_state) == 1:
        f = next(iter(per_state.values()))
        comb = combine(f.params["alpha_Z"], f.params["alpha_R"], ds.n, f.stderr["alpha_Z"], f.stderr["alpha_R"])
        out.update(alpha_Z=f.params["alpha_Z"], alpha_R=f.params["alpha_R"], alpha=comb["alpha"], r=comb["r"],
                   stderr={"alpha": comb["se_alpha"], "r": comb["se_r"]})
    return RBFit(**out)


def interleaved_ratio(reference: DecayFit, interleaved: DecayFit) -> dict:
    """``alpha_interleaved / alpha_reference`` with first-order error propagation."""
    a_ref, a_int = reference.alpha, interleaved.alpha
    s_ref, s_int = reference.stderr["alpha"], interleaved.stderr["alpha"]
    ratio = a_int / a_ref
    se = math.hypot(s_int / a_ref, a_int * s_ref / a_ref ** 2)
    return {"ratio": ratio, "stderr": se}


# reports -------------------------------------------------------------------

def report(fit: RBFit, ds: RBDataset, interleaved: tuple[RBFit, RBDataset] | None = None) -> dict:
    """JSON-ready report: per-length means and errors, fits, alpha and r."""

    def summarize(d: RBDataset):
        out = {}
        for state in d.states():
            ls, ys, errs = d.summary(state)
            out[state] = {"lengths": [int(l) for l in ls], "mean": ys.tolist(), "stderr": errs.tolist()}
        return out

    body = {
        "schema": FIT_SCHEMA,
        "meta": {"n": ds.n, "k": ds.k, "seed": ds.seed},
        "data": summarize(ds),
        "fit": fit.to_json(),
    }
    if interleaved is not None:
        ifit, ids = interleaved
        body["interleaved"] = {"data": summarize(ids), "fit": ifit.to_json(), "ratio": {
            s: interleaved_ratio(fit.per_state[s], ifit.per_state[s]) for s in fit.per_state if s in ifit.per_state
        }}
    return body


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"


def run(cfg: RBConfig, threads: int = 1, model: str = "single") -> tuple[dict, RBDataset]:
    """Generate, simulate, fit and report; also runs the reference decay when interleaving."""
    if cfg.interleaved_gate is not None:
        ref_cfg = replace(cfg, interleaved_gate=None)
        ds = estimate_sequence_fidelity(ref_cfg, threads)
        ids = estimate_sequence_fidelity(cfg, threads)
        return report(fit_decay(ds, model), ds, (fit_decay(ids, model), ids)), ds
    ds = estimate_sequence_fidelity(cfg, threads)
    return report(fit_decay(ds, model), ds), ds


def sequences_to_json(cfg: RBConfig, sequences: dict[int, list[RBSequence]]) -> dict:
    """Circuits for every generated sequence, for running on an external backend."""
    from .circuit import export_text, synthesize

    out = []
    for li, length in enumerate(cfg.lengths):
        for si, seq in enumerate(sequences[length]):
            out.append({
                "length": length,
                "seq_index": si,
                "circuits": [export_text(synthesize(g)) for g in seq.gates()],
            })
    return {"schema": "cnotdihedral.rbsequences/1", "meta": {"n": cfg.n, "k": cfg.k, "seed": cfg.seed},
            "sequences": out}


__all__ = [
    "DecayFit",
    "FitNonConvergence",
    "InsufficientLengths",
    "RBConfig",
    "RBDataset",
    "RBFit",
    "RBSequence",
    "estimate_sequence_fidelity",
    "fit_decay",
    "fit_dual",
    "fit_single",
    "generate_sequences",
    "interleaved_ratio",
    "report",
    "run",
    "simulate_sequence",
]
