# Rotating a state onto a basis vector.
#
# t_k(x) is a single-qudit unitary sending x to |x| e_k. s_tilde builds a
# two-qudit circuit that sends any normalized state to |a>|b>, using one
# controlled T per row of the amplitude grid and one more controlled from
# qudit 1.

import numpy as np

from quditsynth import apply, givens_chain, s_tilde, stats, t_k
from quditsynth.stateprep import printed_h_block

np.set_printoptions(precision=4, suppress=True)
rng = np.random.default_rng(0)

x = rng.standard_normal(5) + 1j * rng.standard_normal(5)
print("|x| =", np.linalg.norm(x))
print("T_3 x =", t_k(x, 3) @ x)

# the chain is a sequence of 2x2 rotations on neighbouring amplitudes
chain = givens_chain(x)
print("chain length:", len(chain))

# with -conj(c) in the corner the block stops being unitary for complex amplitudes
bad = printed_h_block(3 / 5, 4j / 5, 1.0)
print("printed block B^dagger B =\n", bad.conj().T @ bad)

d = 3
psi = rng.standard_normal(d * d) + 1j * rng.standard_normal(d * d)
psi /= np.linalg.norm(psi)
circ = s_tilde(psi, 2, 0)
print("S|psi> =", apply(circ, psi))
print("gates:", stats(circ))
