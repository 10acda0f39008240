"""Rotating a single- or two-qudit state onto a computational basis vector."""

import numpy as np

from .errors import IndexOutOfRange, NotNormalized, ZeroVector
from .gates import Circuit, _check_index, p_matrix
from .csynth import c_u
from .matcore import Tolerances


def tail_norms(x) -> np.ndarray:
    """``N[n] = sqrt(sum_{i >= n} |x_i|^2)``, accumulated from the tail with hypot."""
    x = np.asarray(x, dtype=np.complex128)
    n = np.zeros(len(x))
    acc = 0.0
    for k in range(len(x) - 1, -1, -1):
        acc = np.hypot(acc, abs(x[k]))
        n[k] = acc
    return n


def printed_h_block(ck: complex, ck1: complex, nk: float) -> np.ndarray:
    """Last chain block with ``-conj(c_k)`` in the lower-right corner.

    Its columns are not orthogonal for complex amplitudes (the inner
    product is ``-2 conj(c_k) conj(c_k1) / nk**2``). Kept as a regression
    reference; :func:`givens_chain` uses ``+conj(c_k)``.
    """
    return np.array([[ck / nk, -np.conj(ck1) / nk], [ck1 / nk, -np.conj(ck) / nk]])


def givens_chain(x) -> list[np.ndarray]:
    """Blocks ``h_0 .. h_{d-2}`` with ``(h_{d-2} ... h_0)^dagger x = |x| e_0``.

    Each ``h_k`` is the identity outside rows/columns ``k, k+1``. A block
    whose tail norm ``N_k`` is zero is left as the identity.
    """
    x = np.asarray(x, dtype=np.complex128)
    d = len(x)
    if d < 2:
        raise IndexOutOfRange("need d >= 2")
    norms = tail_norms(x)
    if norms[0] == 0:
        raise ZeroVector("cannot rotate the zero vector")
    chain = []
    for k in range(d - 1):
        h = np.eye(d, dtype=np.complex128)
        nk = norms[k]
        if nk > 0:
            ck = x[k]
            # the last block pairs two amplitudes; earlier ones pair an amplitude with a tail norm
            below = x[k + 1] if k == d - 2 else norms[k + 1]
            h[k, k] = ck / nk
            h[k, k + 1] = -np.conj(below) / nk
            h[k + 1, k] = below / nk
            h[k + 1, k + 1] = np.conj(ck) / nk
        chain.append(h)
    return chain


def t_k(x, k: int) -> np.ndarray:
    """Unitary ``T`` with ``T x = |x| e_k``, the coefficient real and nonnegative."""
    x = np.asarray(x, dtype=np.complex128)
    d = len(x)
    _check_index(d, k)
    u = np.eye(d, dtype=np.complex128)
    for h in givens_chain(x):
        u = h @ u
    return p_matrix(d, 0, k) @ u.conj().T


def s_tilde(
    x,
    a: int,
    b: int,
    prune_zero: bool = False,
    tol: Tolerances | None = None,
) -> Circuit:
    """Circuit taking the normalized two-qudit state ``x`` to ``|a>|b>``.

    Row ``i`` of the amplitude grid is rotated onto ``|b>`` by a ``T_b``
    controlled on qudit 0 being ``|i>``. What remains is ``y (x) |b>`` with
    ``y`` the row norms, which a ``T_a(y)`` controlled on qudit 1 being
    ``|b>`` sends to ``|a>|b>``.

    Rows with zero norm get an identity controlled gate unless
    ``prune_zero`` is set, in which case they are skipped.
    """
    x = np.asarray(x, dtype=np.complex128)
    d = int(round(np.sqrt(len(x))))
    if d * d != len(x) or x.ndim != 1:
        raise IndexOutOfRange(f"state length {len(x)} is not a square")
    _check_index(d, a, b)
    tol = tol or Tolerances.for_dim(d)
    norm_err = abs(np.vdot(x, x).real - 1)
    if norm_err > tol.tol_norm:
        raise NotNormalized(f"|<x|x> - 1| = {norm_err:.3e}")

    rows = x.reshape(d, d)
    y = np.array([np.linalg.norm(r) for r in rows])
    out = Circuit(d)
    for i in range(d - 1, -1, -1):
        if y[i] == 0:
            if prune_zero:
                continue
            t = np.eye(d)
        else:
            t = t_k(rows[i], b)
        out.extend(c_u(d, i, t, control_qudit=0, tol=tol))
    out.extend(c_u(d, b, t_k(y, a), control_qudit=1, tol=tol))
    return out
