"""Controlled-U gates compiled down to single-qudit gates and ``CM``.

Every builder returns a fully expanded :class:`Circuit`. By default the
control is qudit 0 and the target qudit 1; ``control_qudit=1`` swaps the
roles, putting single-qudit gates on qudit 0 and using ``CM`` gates
controlled from qudit 1.
"""

import numpy as np

from .errors import IndexOutOfRange, LengthMismatch, NotSpecialUnitary, NotUnitary
from .gates import (
    Circuit,
    ControlledM,
    _check_index,
    e_matrix,
    h_matrix,
    single,
    theta_b_matrix,
)
from .matcore import Tolerances, as_cmat, eig_unitary, unitarity_error


def _target(control_qudit: int) -> int:
    if control_qudit not in (0, 1):
        raise IndexOutOfRange(f"control_qudit must be 0 or 1, got {control_qudit}")
    return 1 - control_qudit


def c_exchange(d: int, a: int, b: int, c: int, control_qudit: int = 0) -> Circuit:
    """Swap target states ``b`` and ``c`` when the control is in ``a``.

    ``H_bc`` maps the swap onto a sign flip of ``c``, so the circuit is
    ``H_bc, CM(a, c), H_bc``.
    """
    _check_index(d, a, b, c)
    if not b < c:
        raise IndexOutOfRange(f"expected b < c, got b={b}, c={c}")
    t = _target(control_qudit)
    h = single(t, f"H{b}{c}", h_matrix(d, b, c))
    return Circuit(d, [h, ControlledM(control_qudit, a, c), h])


def c_theta_b(d: int, a: int, b: int, theta: float, control_qudit: int = 0) -> Circuit:
    """Controlled ``theta_b(theta)`` using two controlled exchanges of 0 and ``b``.

    Conjugating ``theta_b(-theta/2)`` by ``P_0b`` flips its sign, so on the
    controlled block the three phase gates add up to ``theta`` while on
    every other block they cancel.
    """
    _check_index(d, a, b)
    if b == 0:
        raise IndexOutOfRange("theta_b needs 1 <= b < d")
    t = _target(control_qudit)
    quarter = single(t, f"TH{b}({theta / 4:.6g})", theta_b_matrix(d, b, theta / 4))
    half = single(t, f"TH{b}({-theta / 2:.6g})", theta_b_matrix(d, b, -theta / 2))
    swap = c_exchange(d, a, 0, b, control_qudit)
    return Circuit(d, [quarter]) + swap + Circuit(d, [half]) + swap + Circuit(d, [quarter])


def c_theta_vec(d: int, a: int, thetas, control_qudit: int = 0) -> Circuit:
    thetas = np.asarray(thetas, dtype=float)
    if thetas.shape != (d - 1,):
        raise LengthMismatch(f"need {d - 1} angles for d={d}, got {thetas.shape}")
    out = Circuit(d)
    for b, theta in enumerate(thetas, start=1):
        out.extend(c_theta_b(d, a, b, float(theta), control_qudit))
    return out


def c_su(d: int, a: int, w, control_qudit: int = 0, tol: Tolerances | None = None) -> Circuit:
    """Controlled ``W`` for ``W`` in SU(d), via ``W = V diag(e^{i sigma}) V^dagger``.

    The eigenphases at positions 1..d-1 become the angles of the diagonal
    ``theta_vec`` gate; position 0 is then fixed by ``det W = 1``.
    """
    w = as_cmat(w)
    _check_index(d, a)
    if w.shape != (d, d):
        raise IndexOutOfRange(f"W has shape {w.shape}, expected ({d}, {d})")
    tol = tol or Tolerances.for_dim(d)
    det = np.linalg.det(w)
    if abs(det - 1) > tol.tol_verify:
        raise NotSpecialUnitary(f"|det W - 1| = {abs(det - 1):.3e}")
    phases, v = eig_unitary(w, tol)
    t = _target(control_qudit)
    out = Circuit(d, [single(t, "V'", v.conj().T)])
    out.extend(c_theta_vec(d, a, phases[1:], control_qudit))
    out.append(single(t, "V", v))
    return out


def c_phase(d: int, a: int, delta: float, control_qudit: int = 0) -> Circuit:
    """Phase ``e^{i delta}`` on the whole control block ``a``.

    This is just ``E_a`` on the control qudit; no two-qudit gate needed.
    """
    _check_index(d, a)
    return Circuit(d, [single(control_qudit, f"E{a}({delta:.6g})", e_matrix(d, a, delta))])


def su_split(u) -> tuple[float, np.ndarray]:
    """Split ``U = e^{i delta} W`` with ``det W = 1`` and ``delta = arg(det U) / d``."""
    u = as_cmat(u)
    d = u.shape[0]
    delta = float(np.angle(np.linalg.det(u))) / d
    if delta <= -np.pi / d:
        delta = np.pi / d
    return delta, np.exp(-1j * delta) * u


def c_u(d: int, a: int, u, control_qudit: int = 0, tol: Tolerances | None = None) -> Circuit:
    u = as_cmat(u)
    if u.shape != (d, d):
        raise IndexOutOfRange(f"U has shape {u.shape}, expected ({d}, {d})")
    tol = tol or Tolerances.for_dim(d)
    err = unitarity_error(u)
    if err > tol.tol_unitary:
        raise NotUnitary(f"max|U^dagger U - I| = {err:.3e}")
    delta, w = su_split(u)
    return c_phase(d, a, delta, control_qudit) + c_su(d, a, w, control_qudit, tol)
