"""Dense statevector evaluation and verification of circuits."""

from dataclasses import dataclass

import numpy as np

from .errors import DimMismatch
from .gates import Circuit, ControlledM, SingleQudit
from .matcore import max_abs_diff


@dataclass(frozen=True)
class GateCounts:
    single: int
    controlled_m: int

    @property
    def total(self) -> int:
        return self.single + self.controlled_m


def stats(c: Circuit) -> GateCounts:
    n_cm = sum(isinstance(g, ControlledM) for g in c.gates)
    return GateCounts(single=len(c.gates) - n_cm, controlled_m=n_cm)


def _evolve(c: Circuit, grid: np.ndarray) -> np.ndarray:
    # grid has shape (d, d, k): axis 0 is qudit 0, axis 1 is qudit 1,
    # axis 2 batches k independent states
    d = c.dim
    for g in c.gates:
        if isinstance(g, SingleQudit):
            if g.qudit == 0:
                grid = np.einsum("ij,jbk->ibk", g.matrix, grid)
            else:
                grid = np.einsum("ij,ajk->aik", g.matrix, grid)
        else:
            if g.control_qudit == 0:
                grid[g.control_state, g.target_state] *= -1
            else:
                grid[g.target_state, g.control_state] *= -1
    return grid


def apply(c: Circuit, psi) -> np.ndarray:
    """Run ``psi`` (length ``d^2``) through the circuit, ``gates[0]`` first."""
    psi = np.asarray(psi, dtype=np.complex128)
    d = c.dim
    if psi.shape != (d * d,):
        raise DimMismatch(f"state of shape {psi.shape} for a d={d} circuit")
    grid = psi.reshape(d, d, 1).copy()
    return _evolve(c, grid).reshape(d * d)


def circuit_matrix(c: Circuit) -> np.ndarray:
    """Unitary realized by the circuit; column ``j`` is ``apply(c, e_j)``."""
    d = c.dim
    grid = np.eye(d * d, dtype=np.complex128).reshape(d, d, d * d)
    return _evolve(c, grid).reshape(d * d, d * d)


@dataclass(frozen=True)
class VerifyReport:
    dim: int
    max_err: float
    passed: bool
    counts: GateCounts

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "max_err": self.max_err,
            "pass": self.passed,
            "gates_total": self.counts.total,
            "gates_single": self.counts.single,
            "gates_cm": self.counts.controlled_m,
        }


def verify(c: Circuit, target, tol: float = 1e-8) -> VerifyReport:
    target = np.asarray(target, dtype=np.complex128)
    n = c.dim * c.dim
    if target.shape != (n, n):
        raise DimMismatch(f"target shape {target.shape}, circuit acts on {n} states")
    err = max_abs_diff(circuit_matrix(c), target)
    return VerifyReport(dim=c.dim, max_err=err, passed=err <= tol, counts=stats(c))
