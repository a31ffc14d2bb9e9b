"""Command line front end.

Exit codes: 0 success, 1 verification failed, 2 sigma does not commute with
the projector, 3 invalid input (schema, usage, unknown example), 4 register
too large for dense verification.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import jsonschema

from . import examples as ex
from .bitpauli import parse_pauli
from .circuit import Circuit, count_resources, from_json, from_text, to_text
from .subspace import BasisSet
from .synth import STRATEGIES, CommutationError, synthesize
from .verify import (
    DEFAULT_DENSE_CAP,
    DenseCapExceeded,
    baseline_cost,
    circuit_unitary,
    cover_pauli_terms,
    exact_evolution,
    max_deviation,
)

EXIT_OK, EXIT_VERIFY, EXIT_COMMUTE, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3, 4

PROBLEM_SCHEMA = {
    "type": "object",
    "required": ["n", "sigma", "basis", "t"],
    "additionalProperties": False,
    "properties": {
        "n": {"type": "integer", "minimum": 1},
        "sigma": {"type": "string", "pattern": "^[+-]?[IXYZ]+$"},
        "basis": {"type": "array", "items": {"type": "string", "pattern": "^[01]+$"}},
        "t": {"type": "number"},
        "epsilon": {"type": "number", "exclusiveMinimum": 0, "exclusiveMaximum": 1},
        "strategy": {"enum": list(STRATEGIES)},
        "name": {"type": "string"},
    },
}


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_INPUT)


def load_problem(path: Path) -> dict:
    try:
        data = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as err:
        raise InputError(f"{path}: {err}") from err
    try:
        jsonschema.validate(data, PROBLEM_SCHEMA)
    except jsonschema.ValidationError as err:
        raise InputError(f"{path}: {err.message}") from err
    n = data["n"]
    sigma = parse_pauli(data["sigma"])
    if sigma.n != n:
        raise InputError(f"{path}: sigma has length {sigma.n}, expected {n}")
    if any(len(z) != n for z in data["basis"]):
        raise InputError(f"{path}: every basis entry must have length {n}")
    try:
        B = BasisSet.from_strings(data["basis"], n)
    except ValueError as err:
        raise InputError(f"{path}: {err}") from err
    return {
        "sigma": sigma,
        "B": B,
        "t": float(data["t"]),
        "epsilon": float(data.get("epsilon", 1e-10)),
        "strategy": data.get("strategy", "auto"),
    }


def _problem_files(path: Path) -> list[Path]:
    path = Path(path)
    if path.is_dir():
        files = sorted(path.glob("*.json"))
        if not files:
            raise InputError(f"{path}: no *.json problem files")
        return files
    return [path]


def load_circuit(path: Path) -> Circuit:
    text = Path(path).read_text()
    try:
        return from_json(text) if text.lstrip().startswith("{") else from_text(text)
    except (ValueError, KeyError, TypeError) as err:
        raise InputError(f"{path}: {err}") from err


def _dump(obj) -> str:
    return json.dumps(obj, indent=2)


# ---------------------------------------------------------------- commands


def cmd_synth(args, out) -> int:
    outdir = Path(args.out)
    outdir.mkdir(parents=True, exist_ok=True)
    for path in _problem_files(args.problem):
        p = load_problem(path)
        report = synthesize(
            p["sigma"],
            p["B"],
            p["t"],
            args.strategy or p["strategy"],
            cover_fraction=args.cover_fraction,
            epsilon=args.epsilon or p["epsilon"],
            t_model_constant=args.t_model_constant,
        )
        if args.verify:
            try:
                report.verification_residual = max_deviation(
                    circuit_unitary(report.circuit, args.dense_cap),
                    exact_evolution(p["sigma"], p["B"], p["t"], args.dense_cap),
                )
            except DenseCapExceeded:
                report.verification_residual = "skipped"
        stem = path.stem
        (outdir / f"{stem}.circuit.txt").write_text(to_text(report.circuit))
        (outdir / f"{stem}.circuit.json").write_text(report.circuit.to_json())
        (outdir / f"{stem}.report.json").write_text(_dump(report.to_dict()))
        res = report.verification_residual
        res_text = res if isinstance(res, str) else f"{res:.10e}"
        out.append(
            f"{path.name}: case={report.case} gates={len(report.circuit)} "
            f"rotations={report.resources.rotation_count} t_count={report.resources.t_count} "
            f"residual={res_text} -> {outdir / stem}.circuit.txt"
        )
        if not isinstance(res, str) and res > args.tolerance:
            print(f"{path}: residual {res:.10e} exceeds {args.tolerance:.3e}", file=sys.stderr)
            return EXIT_VERIFY
    return EXIT_OK


def cmd_verify(args, out) -> int:
    p = load_problem(args.problem)
    c = load_circuit(args.circuit)
    if c.n != p["B"].n:
        raise InputError(f"circuit has {c.n} qubits, problem has {p['B'].n}")
    res = max_deviation(
        circuit_unitary(c, args.dense_cap), exact_evolution(p["sigma"], p["B"], p["t"], args.dense_cap)
    )
    if res > args.tolerance:
        print(f"residual {res:.10e} exceeds tolerance {args.tolerance:.3e}", file=sys.stderr)
        return EXIT_VERIFY
    out.append(f"residual {res:.10e}")
    return EXIT_OK


def cmd_estimate(args, out) -> int:
    results = []
    for path in _problem_files(args.problem):
        p = load_problem(path)
        eps = args.epsilon or p["epsilon"]
        report = synthesize(
            p["sigma"],
            p["B"],
            p["t"],
            args.strategy or p["strategy"],
            cover_fraction=args.cover_fraction,
            epsilon=eps,
            t_model_constant=args.t_model_constant,
        )
        base = baseline_cost(p["sigma"], p["B"], eps, args.t_model_constant)
        results.append(
            {
                "problem": path.name,
                "case": report.case,
                "compact": report.resources.to_dict(),
                "baseline": {
                    "pauli_terms": base.terms,
                    "per_orbit_pauli_terms": cover_pauli_terms(p["sigma"], p["B"]),
                    "rotations": base.rotations,
                    "cx": base.cx,
                    "t_count": base.t_count,
                    "model_based": True,
                },
            }
        )
    out.append(_dump(results[0] if len(results) == 1 else results))
    return EXIT_OK


def _example_spec(args) -> ex.ExampleSpec:
    name = args.name
    if name == "transposition":
        return ex.transposition_example(args.x, args.y)
    if name == "excitation":
        make = ex.fermionic_excitation if args.fermionic else ex.qubit_excitation
        occ = _int_list(args.occupied)
        vir = _int_list(args.virtual)
        return make(args.n_exc, occ, vir, args.total_qubits, args.t)
    if name == "trace":
        return ex.trace_gate_spec(args.n, args.t)
    if name == "maxkcut":
        return ex.maxkcut_oracle(args.k, None, args.t)
    if name == "lxmixer":
        return ex.orbit_mixer_example(args.t, args.t2) if args.orbit else ex.lx_mixer_example(args.t)
    raise InputError(f"unknown example {name!r}; available: {', '.join(ex.EXAMPLES)}")


def _int_list(text):
    if text is None:
        return None
    try:
        return [int(s) for s in text.split(",") if s.strip()]
    except ValueError as err:
        raise InputError(f"not a comma-separated index list: {text!r}") from err


def cmd_examples(args, out) -> int:
    try:
        spec = _example_spec(args)
    except ValueError as err:
        raise InputError(str(err)) from err
    circuit = spec.circuit(args.strategy or "auto")
    outdir = Path(args.out)
    outdir.mkdir(parents=True, exist_ok=True)
    stem = spec.name
    (outdir / f"{stem}.spec.json").write_text(_dump(spec.to_dict()))
    (outdir / f"{stem}.circuit.txt").write_text(to_text(circuit))
    (outdir / f"{stem}.circuit.json").write_text(circuit.to_json())
    res = count_resources(circuit, args.epsilon or 1e-10, args.t_model_constant)
    out.append(to_text(circuit).rstrip())
    out.append(f"# {stem}: {len(circuit)} gates, rotations={res.rotation_count}, t_count={res.t_count}")
    return EXIT_OK


# ------------------------------------------------------------------ parser


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="projsynth", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, verify=False):
        p.add_argument("--epsilon", type=float, default=None, help="rotation synthesis precision")
        p.add_argument("--t-model-constant", type=float, default=3.0)
        p.add_argument("--strategy", choices=STRATEGIES, default=None)
        p.add_argument("--cover-fraction", type=float, default=0.5, help="auto: max cover parts / |B|")
        if verify:
            p.add_argument("--tolerance", type=float, default=1e-9)
            p.add_argument("--dense-cap", type=int, default=DEFAULT_DENSE_CAP)

    p = sub.add_parser("synth", help="synthesize a circuit from a problem file or directory")
    p.add_argument("problem", type=Path)
    p.add_argument("--out", default="out")
    p.add_argument("--verify", action="store_true", help="also compute the dense residual")
    common(p, verify=True)
    p.set_defaults(func=cmd_synth)

    p = sub.add_parser("verify", help="compare a circuit file with the exact evolution")
    p.add_argument("problem", type=Path)
    p.add_argument("circuit", type=Path)
    p.add_argument("--tolerance", type=float, default=1e-9)
    p.add_argument("--dense-cap", type=int, default=DEFAULT_DENSE_CAP)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("estimate", help="resource estimate next to the Pauli-term baseline")
    p.add_argument("problem", type=Path)
    common(p)
    p.set_defaults(func=cmd_estimate)

    p = sub.add_parser("examples", help=f"generate a built-in example ({', '.join(ex.EXAMPLES)})")
    p.add_argument("name")
    p.add_argument("--out", default="out")
    p.add_argument("--t", type=float, default=0.3)
    p.add_argument("--t2", type=float, default=0.5, help="second angle of the orbit mixer")
    p.add_argument("--n", type=int, default=3, help="trace gate register size")
    p.add_argument("--n-exc", type=int, default=1)
    p.add_argument("--occupied", default=None, help="comma-separated qubit indices")
    p.add_argument("--virtual", default=None, help="comma-separated qubit indices")
    p.add_argument("--total-qubits", type=int, default=None)
    p.add_argument("--fermionic", action="store_true")
    p.add_argument("--k", type=int, default=3, help="number of colors for maxkcut")
    p.add_argument("--orbit", action="store_true", help="lxmixer: use the two-generator orbit instance")
    p.add_argument("--x", default="0000")
    p.add_argument("--y", default="1111")
    common(p)
    p.set_defaults(func=cmd_examples)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    out: list[str] = []
    try:
        code = args.func(args, out)
    except InputError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_INPUT
    except CommutationError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_COMMUTE
    except DenseCapExceeded as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_CAP
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_INPUT
    if code == EXIT_OK:
        for line in out:
            print(line)
    return code


if __name__ == "__main__":
    sys.exit(main())
