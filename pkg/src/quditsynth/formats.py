"""JSON file formats for unitaries, states and circuits.

Complex numbers are ``[re, im]`` pairs. Floats are written with Python's
shortest round-trip repr, so write -> read -> write reproduces the text
byte for byte.
"""

import json
import math

import numpy as np

from .gates import Circuit, ControlledM, SingleQudit


class FormatError(ValueError):
    pass


def _reject_constant(name):
    raise FormatError(f"non-finite number {name} not allowed")


def _loads(text: str):
    try:
        return json.loads(text, parse_constant=_reject_constant)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from None


def _dumps(obj) -> str:
    return json.dumps(obj, allow_nan=False) + "\n"


def _pair(z) -> list:
    return [float(z.real), float(z.imag)]


def _complex(p) -> complex:
    if not (isinstance(p, list) and len(p) == 2 and all(isinstance(v, (int, float)) for v in p)):
        raise FormatError(f"expected [re, im], got {p!r}")
    z = complex(p[0], p[1])
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise FormatError("non-finite entry")
    return z


def matrix_to_list(m) -> list:
    return [[_pair(z) for z in row] for row in np.asarray(m)]


def matrix_from_list(rows, dim: int | None = None) -> np.ndarray:
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise FormatError("matrix must be a list of rows")
    n = len(rows)
    if n == 0 or any(len(r) != n for r in rows):
        raise FormatError("matrix is not square")
    if dim is not None and dim != n:
        raise FormatError(f"dim {dim} does not match {n}x{n} matrix")
    return np.array([[_complex(p) for p in r] for r in rows], dtype=np.complex128)


def dump_unitary(m) -> str:
    m = np.asarray(m)
    return _dumps({"dim": int(m.shape[0]), "matrix": matrix_to_list(m)})


def load_unitary(text: str) -> np.ndarray:
    obj = _loads(text)
    if not isinstance(obj, dict) or "matrix" not in obj:
        raise FormatError("unitary file needs a 'matrix' field")
    return matrix_from_list(obj["matrix"], obj.get("dim"))


def dump_state(v) -> str:
    v = np.asarray(v)
    return _dumps({"dim": int(v.shape[0]), "vector": [_pair(z) for z in v]})


def load_state(text: str) -> np.ndarray:
    obj = _loads(text)
    if not isinstance(obj, dict) or not isinstance(obj.get("vector"), list):
        raise FormatError("state file needs a 'vector' list")
    v = np.array([_complex(p) for p in obj["vector"]], dtype=np.complex128)
    if "dim" in obj and obj["dim"] != len(v):
        raise FormatError(f"dim {obj['dim']} does not match vector length {len(v)}")
    return v


def circuit_to_obj(c: Circuit) -> dict:
    gates = []
    for g in c.gates:
        if isinstance(g, SingleQudit):
            gates.append(
                {"kind": "single", "qudit": g.qudit, "label": g.label, "matrix": matrix_to_list(g.matrix)}
            )
        else:
            gates.append(
                {
                    "kind": "cm",
                    "control_qudit": g.control_qudit,
                    "control_state": g.control_state,
                    "target_state": g.target_state,
                }
            )
    return {"dim": c.dim, "gates": gates}


def dump_circuit(c: Circuit) -> str:
    return _dumps(circuit_to_obj(c))


def circuit_from_obj(obj) -> Circuit:
    if not isinstance(obj, dict) or not isinstance(obj.get("dim"), int) or not isinstance(obj.get("gates"), list):
        raise FormatError("circuit needs integer 'dim' and a 'gates' list")
    d = obj["dim"]
    gates = []
    for i, g in enumerate(obj["gates"]):
        kind = g.get("kind") if isinstance(g, dict) else None
        try:
            if kind == "single":
                gates.append(SingleQudit(g["qudit"], str(g["label"]), matrix_from_list(g["matrix"], d)))
            elif kind == "cm":
                gates.append(ControlledM(g["control_qudit"], g["control_state"], g["target_state"]))
            else:
                raise FormatError(f"unknown gate kind {kind!r}")
        except KeyError as exc:
            raise FormatError(f"gate {i}: missing field {exc}") from None
    try:
        return Circuit(d, gates)
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def load_circuit(text: str) -> Circuit:
    return circuit_from_obj(_loads(text))
