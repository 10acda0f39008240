"""Spectral synthesis of two-qudit unitaries.

A unitary ``U`` on ``d^2`` states with eigenpairs ``(sigma_k, v_k)`` is
the product of ``d^2`` commuting factors ``Z_k = 1 + (e^{i sigma_k} - 1)
|v_k><v_k|``. Each factor is compiled by rotating ``v_k`` onto a basis
state ``|a>|b>`` with :func:`~quditsynth.stateprep.s_tilde`, applying a
controlled phase there, and rotating back.
"""

from dataclasses import dataclass

import numpy as np

from .csynth import c_u
from .errors import NotUnitary
from .gates import Circuit, _check_index, invert_circuit, x_ab_matrix
from .matcore import Tolerances, as_cmat, eig_unitary, unitarity_error
from .sim import GateCounts
from .sim import stats as _stats
from .stateprep import s_tilde


@dataclass(frozen=True)
class SynthOptions:
    prune_zero: bool = False
    tol: Tolerances | None = None


def x_tilde(d: int, a: int, b: int, sigma: float, tol: Tolerances | None = None) -> Circuit:
    """Phase ``e^{i sigma}`` on the single basis state ``|a>|b>``."""
    _check_index(d, a, b)
    return c_u(d, a, x_ab_matrix(d, b, sigma), control_qudit=0, tol=tol)


def z_gate(
    d: int,
    a: int,
    b: int,
    sigma: float,
    eigvec,
    prune_zero: bool = False,
    tol: Tolerances | None = None,
) -> Circuit:
    s = s_tilde(eigvec, a, b, prune_zero=prune_zero, tol=tol)
    return s + x_tilde(d, a, b, sigma, tol) + invert_circuit(s)


def synthesize(u, opts: SynthOptions | None = None) -> Circuit:
    """Compile a ``d^2`` x ``d^2`` unitary into single-qudit gates and ``CM``.

    Eigenpairs are labelled ``(0, 0), (0, 1), ..., (d-1, d-1)`` in the
    order :func:`~quditsynth.matcore.eig_unitary` returns them. The global
    phase is reproduced exactly.
    """
    opts = opts or SynthOptions()
    u = as_cmat(u)
    n = u.shape[0]
    d = int(round(np.sqrt(n)))
    if d * d != n or d < 2:
        raise ValueError(f"matrix dimension {n} is not d^2 for d >= 2")
    mtol = opts.tol or Tolerances.for_dim(n)
    err = unitarity_error(u)
    if err > mtol.tol_unitary:
        raise NotUnitary(f"max|U^dagger U - I| = {err:.3e} exceeds {mtol.tol_unitary:.3e}")
    phases, vecs = eig_unitary(u, mtol)

    qtol = opts.tol or Tolerances.for_dim(d)
    out = Circuit(d)
    for k in range(n):
        a, b = divmod(k, d)
        out.extend(z_gate(d, a, b, float(phases[k]), vecs[:, k], opts.prune_zero, qtol))
    return out


def stats(c: Circuit) -> GateCounts:
    return _stats(c)


def expected_cm_count(d: int) -> int:
    """``CM`` gates in an unpruned :func:`synthesize` circuit."""
    return d * d * (4 * (d * d - 1) + 2 * (d - 1))
