"""Command line entry point: ``quditsynth {synth,verify,gate,random,prep}``.

Machine-readable results go to stdout as one JSON line; diagnostics go to
stderr. Exit codes: 0 success, 1 bad input, 2 verification failure.
"""

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import formats, gates
from .errors import QuditError
from .matcore import Tolerances, haar_random_unitary, unitarity_error
from .sim import apply, stats, verify
from .stateprep import s_tilde
from .usynth import SynthOptions, synthesize

EXIT_OK, EXIT_INPUT, EXIT_FAIL = 0, 1, 2


class InputError(Exception):
    pass


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _write(path: str, text: str) -> None:
    try:
        Path(path).write_text(text, encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot write {path}: {exc.strerror}") from None


def _emit(obj: dict) -> None:
    print(json.dumps(obj), flush=True)


def _qudit_dim(n: int, dim: int | None) -> int:
    if dim is not None:
        if dim * dim != n:
            raise InputError(f"--dim {dim} does not match a {n}x{n} matrix")
        return dim
    d = int(round(np.sqrt(n)))
    if d * d != n or d < 2:
        raise InputError(f"matrix dimension {n} is not d^2 for any d >= 2")
    return d


def cmd_synth(args) -> int:
    u = formats.load_unitary(_read(args.input))
    d = _qudit_dim(u.shape[0], args.dim)
    tol = Tolerances.for_dim(u.shape[0])
    err = unitarity_error(u)
    if err > tol.tol_unitary:
        raise InputError(f"unitarity check failed: max|U^dagger U - I| = {err:.3e}")
    circuit = synthesize(u, SynthOptions(prune_zero=args.prune_zero))
    _write(args.output, formats.dump_circuit(circuit))
    report = verify(circuit, u, args.tol)
    _emit(report.to_json())
    if not args.quiet:
        print(f"d={d}: {len(circuit)} gates, max_err={report.max_err:.3e}", file=sys.stderr)
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_verify(args) -> int:
    circuit = formats.load_circuit(_read(args.circuit))
    u = formats.load_unitary(_read(args.unitary))
    n = circuit.dim * circuit.dim
    if u.shape[0] != n:
        raise InputError(f"circuit acts on {n} states, unitary is {u.shape[0]}x{u.shape[0]}")
    report = verify(circuit, u, args.tol)
    _emit(report.to_json())
    return EXIT_OK if report.passed else EXIT_FAIL


# name -> (integer params, float params, builder); a negative float count means "d - 1"
GATES = {
    "P": (2, 0, lambda d, i, f, cq: gates.p_matrix(d, *sorted(i))),
    "H": (2, 0, lambda d, i, f, cq: gates.h_matrix(d, *sorted(i))),
    "M": (1, 0, lambda d, i, f, cq: gates.m_matrix(d, i[0])),
    "THETA_B": (1, 1, lambda d, i, f, cq: gates.theta_b_matrix(d, i[0], f[0])),
    "THETA": (0, -1, lambda d, i, f, cq: gates.theta_vec_matrix(d, f)),
    "E": (1, 1, lambda d, i, f, cq: gates.e_matrix(d, i[0], f[0])),
    "X": (1, 1, lambda d, i, f, cq: gates.x_ab_matrix(d, i[0], f[0])),
    "CM": (2, 0, lambda d, i, f, cq: gates.cm_matrix(d, cq, i[0], i[1])),
}


def cmd_gate(args) -> int:
    name = args.name.upper()
    if name not in GATES:
        raise InputError(f"unknown gate {args.name!r}; choose from {', '.join(GATES)}")
    d = args.dim
    if d < 2:
        raise InputError("--dim must be >= 2")
    n_int, n_float, build = GATES[name]
    n_float = d - 1 if n_float < 0 else n_float
    if len(args.params) != n_int + n_float:
        raise InputError(f"gate {name} takes {n_int + n_float} parameters, got {len(args.params)}")
    try:
        ints = [int(p) for p in args.params[:n_int]]
        floats = [float(p) for p in args.params[n_int:]]
    except ValueError as exc:
        raise InputError(str(exc)) from None
    sys.stdout.write(formats.dump_unitary(build(d, ints, floats, args.control_qudit)))
    return EXIT_OK


def cmd_random(args) -> int:
    if args.dim < 2:
        raise InputError("--dim must be >= 2")
    _write(args.output, formats.dump_unitary(haar_random_unitary(args.dim, args.seed)))
    return EXIT_OK


def cmd_prep(args) -> int:
    x = formats.load_state(_read(args.state))
    n = len(x)
    d = _qudit_dim(n, None)
    circuit = s_tilde(x, args.a, args.b, prune_zero=args.prune_zero)
    _write(args.output, formats.dump_circuit(circuit))
    target = np.zeros(n, dtype=np.complex128)
    target[args.a * d + args.b] = 1
    err = float(np.max(np.abs(apply(circuit, x) - target)))
    counts = stats(circuit)
    passed = err <= args.tol
    _emit(
        {
            "dim": d,
            "max_err": err,
            "pass": passed,
            "gates_total": counts.total,
            "gates_single": counts.single,
            "gates_cm": counts.controlled_m,
        }
    )
    return EXIT_OK if passed else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="quditsynth", description=__doc__.splitlines()[0])
    parser.add_argument("--quiet", action="store_true", help="suppress diagnostics on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("synth", help="compile a two-qudit unitary into elementary gates")
    p.add_argument("input", help="unitary JSON file (d^2 x d^2)")
    p.add_argument("output", help="circuit JSON file to write")
    p.add_argument("--dim", type=int, help="qudit dimension d")
    p.add_argument("--tol", type=float, default=1e-8)
    p.add_argument("--prune-zero", action="store_true")
    p.set_defaults(func=cmd_synth)

    p = sub.add_parser("verify", help="compare a circuit against a unitary")
    p.add_argument("circuit")
    p.add_argument("unitary")
    p.add_argument("--tol", type=float, default=1e-8)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gate", help="print the matrix of an elementary gate")
    p.add_argument("name", help=", ".join(GATES))
    p.add_argument("params", nargs="*")
    p.add_argument("--dim", type=int, required=True, help="qudit dimension d")
    p.add_argument("--control-qudit", type=int, choices=(0, 1), default=0)
    p.set_defaults(func=cmd_gate)

    p = sub.add_parser("random", help="write a Haar-random unitary")
    p.add_argument("output")
    p.add_argument("--dim", type=int, required=True, help="matrix dimension")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_random)

    p = sub.add_parser("prep", help="circuit mapping a two-qudit state to |a>|b>")
    p.add_argument("state", help="state JSON file")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("output")
    p.add_argument("--tol", type=float, default=1e-8)
    p.add_argument("--prune-zero", action="store_true")
    p.set_defaults(func=cmd_prep)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        # gate parameters may follow --dim, which argparse leaves unparsed
        args, extra = parser.parse_known_args(argv)
        if extra and args.command == "gate" and not any(e.startswith("--") for e in extra):
            args.params = args.params + extra
        elif extra:
            parser.error(f"unrecognized arguments: {' '.join(extra)}")
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (InputError, formats.FormatError, QuditError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
