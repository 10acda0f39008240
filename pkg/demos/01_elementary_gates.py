# Elementary gates for a d-level qudit.
#
# Single-qudit gates are arbitrary; the only two-qudit primitive is the
# controlled sign flip CM(a, b), which negates |a>|b> and nothing else.

import numpy as np

from quditsynth import cm_matrix, h_matrix, kron, m_matrix, p_matrix
from quditsynth.gates import cm_from_reference, h_generator_expand

np.set_printoptions(precision=3, suppress=True)
d = 3

# exchange and two-level Hadamard
print("P_02 =\n", p_matrix(d, 0, 2).real)
print("H_12 =\n", h_matrix(d, 1, 2).real)

# H_12 rebuilt from exchanges around H_01 (factors listed in application order)
factors = h_generator_expand(d, 1, 2)
prod = np.eye(d)
for f in factors:
    prod = f @ prod
print("H_12 from generators matches:", np.allclose(prod, h_matrix(d, 1, 2)))

# H_bc turns a sign flip of c into an exchange of b and c
h = h_matrix(d, 1, 2)
print("H M_2 H == P_12:", np.allclose(h @ m_matrix(d, 2) @ h, p_matrix(d, 1, 2)))

# CM(1, 2) on two qutrits: a single -1 at index 1*3 + 2
print("diag CM(1,2) =", np.diag(cm_matrix(d, 0, 1, 2)).real)

# control and target are interchangeable
print("CM symmetric:", np.array_equal(cm_matrix(d, 0, 1, 2), cm_matrix(d, 1, 2, 1)))

# any CM(a, b) is a relabelled copy of one reference gate
print("CM(2,1) from CM(0,0):", np.array_equal(cm_from_reference(d, 2, 1, 0, 0), cm_matrix(d, 0, 2, 1)))

# a phase on one state of the control qudit is already a controlled phase
E = np.diag([1, np.exp(0.5j), 1])
print("E_1 (x) I is block-diagonal:", np.allclose(kron(E, np.eye(d)), np.diag(np.repeat(np.diag(E), d))))
