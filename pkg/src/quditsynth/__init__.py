"""Compile one- and two-qudit unitaries into single-qudit gates and the
controlled sign flip, and check the result by dense simulation."""

from .csynth import c_exchange, c_phase, c_su, c_theta_b, c_theta_vec, c_u
from .errors import (
    DegenerateIndices,
    DimMismatch,
    EigFailure,
    IndexOutOfRange,
    LengthMismatch,
    NotNormalized,
    NotSpecialUnitary,
    NotUnitary,
    QuditError,
    ZeroVector,
)
from .gates import (
    Circuit,
    ControlledM,
    SingleQudit,
    cm_matrix,
    e_matrix,
    gate_matrix,
    h_matrix,
    invert_circuit,
    m_matrix,
    p_matrix,
    theta_b_matrix,
    theta_vec_matrix,
    x_ab_matrix,
)
from .matcore import (
    EigenPairs,
    Tolerances,
    eig_unitary,
    haar_random_unitary,
    is_unitary,
    kron,
    max_abs_diff,
)
from .sim import apply, circuit_matrix, stats, verify
from .stateprep import givens_chain, s_tilde, t_k
from .usynth import SynthOptions, synthesize, x_tilde, z_gate

__version__ = "0.1.0"
