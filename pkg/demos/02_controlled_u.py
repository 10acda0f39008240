# Compiling a controlled single-qudit unitary.
#
# c_u(d, a, U) applies U to qudit 1 only when qudit 0 is |a>. The circuit
# splits off the global phase of U, diagonalizes the special-unitary rest,
# and realizes the diagonal part with 2(d-1) controlled sign flips.

import numpy as np

from quditsynth import c_theta_b, c_u, circuit_matrix, haar_random_unitary, stats, theta_b_matrix

d, a = 4, 2

# the building block: a controlled two-level phase needs exactly two CM gates
theta = 0.7
circ = c_theta_b(d, a, 1, theta)
print("c_theta_b:", [type(g).__name__ for g in circ.gates])
block = circuit_matrix(circ).reshape(d, d, d, d)[a, :, a, :]
print("controlled block equals theta_1(0.7):", np.allclose(block, theta_b_matrix(d, 1, theta)))

# a Haar-random target
U = haar_random_unitary(d, seed=1)
circ = c_u(d, a, U)
M = circuit_matrix(circ)

expected = np.eye(d * d, dtype=complex)
expected[a * d : (a + 1) * d, a * d : (a + 1) * d] = U
print("gates:", stats(circ))
print("max |circuit - controlled U| =", np.max(np.abs(M - expected)))

# role swap: control on qudit 1, gates on qudit 0
circ = c_u(d, a, U, control_qudit=1)
M = circuit_matrix(circ).reshape(d, d, d, d)
print("role-swapped block correct:", np.allclose(M[:, a, :, a], U))
