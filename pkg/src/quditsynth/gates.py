"""Elementary qudit gates and the two-qudit circuit representation.

The gate set is every single-qudit unitary plus the controlled sign flip
``CM(a, b)``, which negates the single basis state ``|a>|b>``. A
:class:`Circuit` is an ordered list of such gates where ``gates[0]`` acts
first, so its matrix is ``gates[-1] @ ... @ gates[0]``.
"""

from dataclasses import dataclass, field
from typing import Union

import numpy as np

from .errors import DegenerateIndices, IndexOutOfRange, LengthMismatch, NotUnitary
from .matcore import as_cmat, kron, unitarity_error


def _check_index(d: int, *idx: int) -> None:
    for i in idx:
        if not 0 <= i < d:
            raise IndexOutOfRange(f"state index {i} outside 0..{d - 1}")


@dataclass(frozen=True, eq=False)
class SingleQudit:
    qudit: int
    label: str
    matrix: np.ndarray

    def __post_init__(self):
        if self.qudit not in (0, 1):
            raise IndexOutOfRange(f"qudit must be 0 or 1, got {self.qudit}")
        m = as_cmat(self.matrix)
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]


@dataclass(frozen=True)
class ControlledM:
    control_qudit: int
    control_state: int
    target_state: int

    def __post_init__(self):
        if self.control_qudit not in (0, 1):
            raise IndexOutOfRange(f"control_qudit must be 0 or 1, got {self.control_qudit}")

    def flipped_index(self, d: int) -> int:
        """Row of the two-qudit basis state whose sign this gate flips."""
        if self.control_qudit == 0:
            return self.control_state * d + self.target_state
        return self.target_state * d + self.control_state


Gate = Union[SingleQudit, ControlledM]


@dataclass
class Circuit:
    dim: int
    gates: list = field(default_factory=list)

    def __post_init__(self):
        for g in self.gates:
            self._check(g)

    def _check(self, g) -> None:
        if isinstance(g, SingleQudit):
            if g.dim != self.dim:
                raise LengthMismatch(f"gate {g.label!r} has dim {g.dim}, circuit has {self.dim}")
        elif isinstance(g, ControlledM):
            _check_index(self.dim, g.control_state, g.target_state)
        else:
            raise TypeError(f"not a gate: {g!r}")

    def append(self, g) -> None:
        self._check(g)
        self.gates.append(g)

    def extend(self, other: "Circuit") -> None:
        if other.dim != self.dim:
            raise LengthMismatch(f"cannot join circuits of dim {self.dim} and {other.dim}")
        self.gates.extend(other.gates)

    def __add__(self, other: "Circuit") -> "Circuit":
        out = Circuit(self.dim, list(self.gates))
        out.extend(other)
        return out

    def __len__(self) -> int:
        return len(self.gates)

    def __iter__(self):
        return iter(self.gates)


def single(qudit: int, label: str, matrix, tol: float | None = None) -> SingleQudit:
    """SingleQudit constructor that rejects non-unitary matrices."""
    m = as_cmat(matrix)
    tol = 1e-10 * m.shape[0] if tol is None else tol
    err = unitarity_error(m)
    if err > tol:
        raise NotUnitary(f"{label}: max|G^dagger G - I| = {err:.3e}")
    return SingleQudit(qudit, label, m)


# -- single-qudit matrices -------------------------------------------------


def p_matrix(d: int, a: int, b: int) -> np.ndarray:
    """Exchange of basis states ``a`` and ``b``; identity when ``a == b``."""
    _check_index(d, a, b)
    m = np.eye(d, dtype=np.complex128)
    m[[a, b]] = m[[b, a]]
    return m


def h_matrix(d: int, a: int, b: int) -> np.ndarray:
    """Hadamard acting on the two-level subspace spanned by ``a``, ``b``."""
    _check_index(d, a, b)
    if a == b:
        raise DegenerateIndices("H_ab needs two distinct states")
    if a > b:
        raise IndexOutOfRange(f"expected a < b, got a={a}, b={b}")
    s = 1 / np.sqrt(2)
    m = np.eye(d, dtype=np.complex128)
    m[a, a] = s
    m[a, b] = s
    m[b, a] = s
    m[b, b] = -s
    return m


def m_matrix(d: int, b: int) -> np.ndarray:
    _check_index(d, b)
    m = np.eye(d, dtype=np.complex128)
    m[b, b] = -1
    return m


def theta_b_matrix(d: int, b: int, theta: float) -> np.ndarray:
    """``diag(e^{-i theta}, 1, ..., e^{i theta}, ..., 1)`` with the second phase at ``b``.

    Position 0 carries the compensating phase, so ``b = 0`` is rejected.
    """
    _check_index(d, b)
    if b == 0:
        raise IndexOutOfRange("theta_b needs 1 <= b < d")
    diag = np.ones(d, dtype=np.complex128)
    diag[0] = np.exp(-1j * theta)
    diag[b] = np.exp(1j * theta)
    return np.diag(diag)


def theta_vec_matrix(d: int, thetas) -> np.ndarray:
    thetas = np.asarray(thetas, dtype=float)
    if thetas.shape != (d - 1,):
        raise LengthMismatch(f"need {d - 1} angles for d={d}, got {thetas.shape}")
    diag = np.empty(d, dtype=np.complex128)
    diag[0] = np.exp(-1j * np.sum(thetas))
    diag[1:] = np.exp(1j * thetas)
    return np.diag(diag)


def e_matrix(d: int, a: int, delta: float) -> np.ndarray:
    """Phase ``e^{i delta}`` on state ``a``. Not special unitary for delta != 0."""
    _check_index(d, a)
    m = np.eye(d, dtype=np.complex128)
    m[a, a] = np.exp(1j * delta)
    return m


def x_ab_matrix(d: int, b: int, sigma: float) -> np.ndarray:
    # same matrix as e_matrix; separate name keeps circuit labels readable
    return e_matrix(d, b, sigma)


# -- two-qudit matrices -----------------------------------------------------


def cm_matrix(d: int, control_qudit: int, a: int, b: int) -> np.ndarray:
    """Controlled sign flip as a ``d^2`` x ``d^2`` diagonal matrix.

    ``a`` is the control state on ``control_qudit`` and ``b`` the target
    state on the other qudit.
    """
    _check_index(d, a, b)
    g = ControlledM(control_qudit, a, b)
    diag = np.ones(d * d, dtype=np.complex128)
    diag[g.flipped_index(d)] = -1
    return np.diag(diag)


def cm_from_reference(d: int, a: int, b: int, ref_a: int, ref_b: int) -> np.ndarray:
    """Build ``CM(a, b)`` by conjugating the reference gate ``CM(ref_a, ref_b)``.

    The control state is moved with an exchange on qudit 0 and the target
    state with an exchange on qudit 1.
    """
    eye = np.eye(d)
    move = kron(p_matrix(d, a, ref_a), eye) @ kron(eye, p_matrix(d, b, ref_b))
    return move @ cm_matrix(d, 0, ref_a, ref_b) @ move.conj().T


def embed(matrix: np.ndarray, qudit: int) -> np.ndarray:
    eye = np.eye(matrix.shape[0])
    return kron(matrix, eye) if qudit == 0 else kron(eye, matrix)


def gate_matrix(g: Gate, d: int) -> np.ndarray:
    if isinstance(g, SingleQudit):
        if g.dim != d:
            raise LengthMismatch(f"gate dim {g.dim} != {d}")
        return embed(g.matrix, g.qudit)
    return cm_matrix(d, g.control_qudit, g.control_state, g.target_state)


# -- generator identities ---------------------------------------------------


def p_generator_expand(d: int, a: int, b: int) -> list:
    """Write ``P_ab`` using only exchanges with state 0.

    Returns ``[P_0a, P_0b, P_0a]`` with identity factors (``P_00``) dropped.
    ``P_aa`` is the identity and expands to the empty list.
    """
    _check_index(d, a, b)
    if a > b:
        raise IndexOutOfRange(f"expected a <= b, got a={a}, b={b}")
    if a == b:
        return []
    factors = [(0, a), (0, b), (0, a)]
    return [p_matrix(d, i, j) for i, j in factors if i != j]


def h_generator_expand(d: int, a: int, b: int) -> list:
    """Write ``H_ab`` as ``P_0a P_1b H_01 P_1b P_0a``.

    Exchanges that collapse to the identity (``P_00``, ``P_11``) are
    dropped, so ``(0, 1)`` yields ``[H_01]``. The product is a palindrome,
    so list order and application order coincide.
    """
    _check_index(d, a, b)
    if a == b:
        raise DegenerateIndices("H_ab needs two distinct states")
    if a > b:
        raise IndexOutOfRange(f"expected a < b, got a={a}, b={b}")
    out = []
    for i, j in ((0, a), (1, b)):
        if i != j:
            out.append(p_matrix(d, i, j))
    return out + [h_matrix(d, 0, 1)] + out[::-1]


def invert_circuit(c: Circuit) -> Circuit:
    gates = []
    for g in reversed(c.gates):
        if isinstance(g, SingleQudit):
            label = g.label[:-1] if g.label.endswith("'") else g.label + "'"
            g = SingleQudit(g.qudit, label, g.matrix.conj().T)
        gates.append(g)
    return Circuit(c.dim, gates)
