"""Dense complex linear algebra shared by the synthesis modules.

Matrices are plain ``numpy`` arrays of dtype ``complex128``. Two-qudit
objects use the index ``d * first + second``, which is what ``np.kron``
produces when the first factor belongs to qudit 0.
"""

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np
import scipy.linalg

from .errors import DimMismatch, EigFailure, NotUnitary

# eigenphases closer than this are treated as one degenerate cluster
CLUSTER_GAP = 1e-8


@dataclass(frozen=True)
class Tolerances:
    tol_unitary: float = 1e-10
    tol_norm: float = 1e-12
    tol_eig: float = 1e-9
    tol_verify: float = 1e-8

    def __post_init__(self):
        for name in ("tol_unitary", "tol_norm", "tol_eig", "tol_verify"):
            if not getattr(self, name) > 0:
                raise ValueError(f"{name} must be strictly positive")

    @classmethod
    def for_dim(cls, n: int) -> "Tolerances":
        """Default tolerances for an ``n`` x ``n`` matrix."""
        return cls(tol_unitary=1e-10 * n, tol_eig=1e-9 * n)


class EigenPairs(NamedTuple):
    phases: np.ndarray
    vectors: np.ndarray


def as_cmat(a) -> np.ndarray:
    m = np.asarray(a, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimMismatch(f"expected a square matrix, got shape {m.shape}")
    return m


def kron(a, b) -> np.ndarray:
    return np.kron(np.asarray(a, dtype=np.complex128), np.asarray(b, dtype=np.complex128))


def unitarity_error(a) -> float:
    a = as_cmat(a)
    return float(np.max(np.abs(a.conj().T @ a - np.eye(a.shape[0]))))


def is_unitary(a, tol: float = 1e-10) -> bool:
    return unitarity_error(a) <= tol


def max_abs_diff(a, b) -> float:
    a = np.asarray(a)
    b = np.asarray(b)
    if a.shape != b.shape:
        raise DimMismatch(f"shape {a.shape} vs {b.shape}")
    if a.size == 0:
        return 0.0
    return float(np.max(np.abs(a - b)))


def haar_random_unitary(d: int, seed: int) -> np.ndarray:
    """Haar-distributed ``d`` x ``d`` unitary, deterministic in ``seed``.

    QR of a complex Ginibre matrix, with the phases of ``diag(R)`` pushed
    into ``Q`` so the factorization is unique.
    """
    if d < 2:
        raise ValueError("d must be >= 2")
    rng = np.random.default_rng(seed)
    z = (rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))) / np.sqrt(2)
    q, r = np.linalg.qr(z)
    diag = np.diagonal(r)
    return q * (diag / np.abs(diag))


def _mgs(vectors: np.ndarray) -> np.ndarray:
    """Modified Gram-Schmidt on the columns of ``vectors``."""
    q = vectors.copy()
    for j in range(q.shape[1]):
        for i in range(j):
            q[:, j] -= np.vdot(q[:, i], q[:, j]) * q[:, i]
        q[:, j] /= np.linalg.norm(q[:, j])
    return q


def _first_nonzero(v: np.ndarray, tol: float = 1e-12) -> int:
    return int(np.argmax(np.abs(v) > tol))


def _fix_phase(v: np.ndarray) -> np.ndarray:
    # largest-magnitude component real positive; argmax picks the first on ties
    k = int(np.argmax(np.round(np.abs(v), 12)))
    return v * (abs(v[k]) / v[k])


def eig_unitary(a, tol: Tolerances | None = None) -> EigenPairs:
    """Eigendecomposition ``a = V diag(exp(i*phases)) V^dagger`` of a unitary.

    The complex Schur form of a normal matrix is diagonal, so the Schur
    vectors are already an orthonormal eigenbasis even when eigenvalues
    are repeated. Phases are returned in ``(-pi, pi]``, sorted ascending;
    inside a degenerate cluster the columns are re-orthonormalized and
    ordered by the index of their first nonzero component. Each column is
    phase-fixed so its largest component is real and positive.
    """
    a = as_cmat(a)
    n = a.shape[0]
    tol = tol or Tolerances.for_dim(n)
    err = unitarity_error(a)
    if err > tol.tol_unitary:
        raise NotUnitary(f"max|A^dagger A - I| = {err:.3e} exceeds {tol.tol_unitary:.3e}")

    t, z = scipy.linalg.schur(a, output="complex")
    lam = np.diagonal(t).copy()
    phases = np.angle(lam)
    phases[phases <= -np.pi] = np.pi

    order = np.argsort(phases, kind="stable")
    phases = phases[order]
    vecs = z[:, order]

    start = 0
    for stop in range(1, n + 1):
        if stop < n and phases[stop] - phases[stop - 1] < CLUSTER_GAP:
            continue
        if stop - start > 1:
            block = _mgs(vecs[:, start:stop])
            idx = sorted(range(stop - start), key=lambda j: _first_nonzero(block[:, j]))
            vecs[:, start:stop] = block[:, idx]
        start = stop

    vecs = np.column_stack([_fix_phase(vecs[:, j]) for j in range(n)])

    resid = max_abs_diff(a @ vecs, vecs * np.exp(1j * phases))
    if resid > tol.tol_eig:
        raise EigFailure(f"eigen residual {resid:.3e} exceeds {tol.tol_eig:.3e}")
    return EigenPairs(phases, vecs)
