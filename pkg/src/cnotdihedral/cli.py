"""``cnotdihedral`` command-line tool.

Every subcommand writes JSON, CSV or circuit text to stdout (or ``--out``),
and is deterministic for a fixed seed. Errors go to stderr as a JSON object
with a nonzero exit code.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import rb
from .circuit import CircuitParseError, evaluate_circuit, export_text, parse_text, synthesize
from .group import CNOTDihedralElement, GroupParams, compose, group_order, inverse, sample_uniform
from .sim import LiouvilleRep, block_values, channel_from_json, enumerate_group, twirl_full, twirl_sequential
from .sim.twirl import DEFAULT_MAX_ELEMENTS

ERROR_SCHEMA = "cnotdihedral.error/1"


class CLIError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        _emit_error("UsageError", message)
        sys.exit(2)


def _emit_error(kind: str, message: str) -> None:
    sys.stderr.write(json.dumps({"schema": ERROR_SCHEMA, "error": kind, "message": message}) + "\n")


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _read(path: str | None) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def _load_json(path: str | None):
    text = _read(path)
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise CLIError(f"invalid JSON in {path or 'stdin'}: {exc}") from exc


def _elements(doc) -> list[CNOTDihedralElement]:
    """Elements from an element document, a list of them, or a ``sample`` output."""
    if isinstance(doc, list):
        return [e for d in doc for e in _elements(d)]
    if isinstance(doc, dict) and "elements" in doc:
        return [CNOTDihedralElement.from_json(d) for d in doc["elements"]]
    return [CNOTDihedralElement.from_json(doc)]


def _single(doc) -> CNOTDihedralElement:
    els = _elements(doc)
    if len(els) != 1:
        raise CLIError(f"expected one element, got {len(els)}")
    return els[0]


def _seed(value: int | None) -> int:
    return int(np.random.SeedSequence().entropy) if value is None else value


def _write(args, text: str) -> None:
    if getattr(args, "output", None):
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)


# subcommands -----------------------------------------------------------------

def cmd_order(args) -> None:
    order = group_order(args.n, args.m)
    if args.enumerate:
        counted = enumerate_group(args.n, args.m).count
        if counted != order:
            raise CLIError(f"enumeration found {counted} elements but the formula gives {order}")
    if args.json:
        body = {"schema": "cnotdihedral.order/1", "n": args.n, "m": args.m, "order": order}
        if args.enumerate:
            body["enumerated"] = order
        _write(args, _dumps(body))
    else:
        _write(args, f"{order}\n")


def cmd_sample(args) -> None:
    seed = _seed(args.seed)
    params = GroupParams(args.n, args.k)
    rng = np.random.default_rng(seed)
    els = [sample_uniform(params, rng).to_json() for _ in range(args.count)]
    _write(args, _dumps({
        "schema": "cnotdihedral.samples/1",
        "meta": {"n": args.n, "k": args.k, "seed": seed, "count": args.count},
        "elements": els,
    }))


def cmd_compose(args) -> None:
    els = [e for f in args.files for e in _elements(_load_json(f))]
    if not els:
        raise CLIError("nothing to compose")
    _write(args, _dumps(compose(*els).to_json()))


def cmd_invert(args) -> None:
    els = _elements(_load_json(args.file))
    out = [inverse(g).to_json() for g in els]
    _write(args, _dumps(out[0] if len(out) == 1 else {"schema": "cnotdihedral.samples/1", "elements": out}))


def cmd_synth(args) -> None:
    g = _single(_load_json(args.file))
    _write(args, export_text(synthesize(g), named=args.named))


def cmd_eval(args) -> None:
    circ = parse_text(_read(args.file), n=args.n, k=args.k)
    _write(args, _dumps(evaluate_circuit(circ).to_json()))


def cmd_twirl(args) -> None:
    doc = _load_json(args.channel)
    if args.n is not None:
        doc = {**doc, "n": args.n}
    if "n" not in doc:
        raise CLIError("channel file has no 'n'; pass -n")
    channel = channel_from_json(doc)
    params = GroupParams(channel.n, args.k)
    if args.mode == "full":
        R = twirl_full(channel, params, threads=args.threads, max_elements=args.max_elements)
    else:
        R = twirl_sequential(channel, params)
    vals = block_values(R, channel.n)
    _write(args, _dumps({
        "schema": "cnotdihedral.twirl/1",
        "meta": {"n": channel.n, "k": args.k, "mode": args.mode},
        "alpha_Z": vals["alpha_Z"],
        "alpha_R": vals["alpha_R"],
        "alpha": vals["alpha"],
        "r": vals["r"],
        "offdiag_max": vals["offdiag_max"],
        "liouville": LiouvilleRep(channel.n, R).to_json(),
    }))


def cmd_rb(args) -> None:
    doc = _load_json(args.config)
    doc = {**doc, "seed": _seed(doc.get("seed"))}
    cfg = rb.RBConfig.from_json(doc)
    out = Path(args.out) if args.out else None
    if out is not None:
        out.mkdir(parents=True, exist_ok=True)
    if args.generate_only:
        text = rb.dumps(rb.sequences_to_json(cfg, rb.generate_sequences(cfg)))
        if out is None:
            sys.stdout.write(text)
        else:
            (out / "sequences.json").write_text(text)
        return
    body, ds = rb.run(cfg, threads=args.threads, model=args.model)
    body["meta"]["config"] = {k: v for k, v in doc.items() if k != "observable"}
    text = rb.dumps(body)
    if out is None:
        sys.stdout.write(text)
    else:
        (out / "fit.json").write_text(text)
        (out / "dataset.csv").write_text(ds.to_csv())


# parser ----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="cnotdihedral", description="CNOT-dihedral group toolkit")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_):
        sp = sub.add_parser(name, help=help_)
        sp.set_defaults(func=func)
        sp.add_argument("-o", "--output", help="write to this file instead of stdout")
        return sp

    sp = add("order", cmd_order, "group order |G_m| on n qubits")
    sp.add_argument("-n", type=int, required=True)
    sp.add_argument("-m", type=int, required=True)
    sp.add_argument("--enumerate", action="store_true", help="cross-check by breadth-first enumeration")
    sp.add_argument("--json", action="store_true")

    sp = add("sample", cmd_sample, "uniformly random elements as JSON triples")
    sp.add_argument("-n", type=int, required=True)
    sp.add_argument("-k", type=int, required=True)
    sp.add_argument("--seed", type=int)
    sp.add_argument("--count", type=int, default=1)

    sp = add("compose", cmd_compose, "product of elements, listed in the order they act")
    sp.add_argument("files", nargs="+")

    sp = add("invert", cmd_invert, "inverse of an element")
    sp.add_argument("file", nargs="?")

    sp = add("synth", cmd_synth, "circuit text for an element")
    sp.add_argument("file", nargs="?")
    sp.add_argument("--named", action="store_true", help="use t/tdg/s/sdg/z names (k = 3 only)")

    sp = add("eval", cmd_eval, "element computed from circuit text")
    sp.add_argument("file", nargs="?")
    sp.add_argument("-n", type=int)
    sp.add_argument("-k", type=int)

    sp = add("twirl", cmd_twirl, "twirl a channel over G_{2^k}")
    sp.add_argument("--channel", required=True)
    sp.add_argument("-n", type=int)
    sp.add_argument("-k", type=int, required=True)
    sp.add_argument("--mode", choices=["full", "sequential"], default="full")
    sp.add_argument("--threads", type=int, default=1)
    sp.add_argument("--max-elements", type=int, default=DEFAULT_MAX_ELEMENTS)

    sp = add("rb", cmd_rb, "randomized benchmarking from a JSON config")
    sp.add_argument("config")
    sp.add_argument("--out", help="directory for fit.json and dataset.csv")
    sp.add_argument("--threads", type=int, default=1)
    sp.add_argument("--model", choices=["single", "dual"], default="single")
    sp.add_argument("--generate-only", action="store_true", help="write sequence circuits without simulating")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except CircuitParseError as exc:
        _emit_error("CircuitParseError", str(exc))
        return 1
    except (CLIError, ValueError, KeyError, TypeError, RuntimeError, OSError) as exc:
        _emit_error(type(exc).__name__, str(exc))
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
