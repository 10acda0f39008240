from functools import reduce
from itertools import permutations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quditsynth.csynth import c_u
from quditsynth.errors import NotNormalized, ZeroVector
from quditsynth.gates import ControlledM, SingleQudit
from quditsynth.matcore import haar_random_unitary, is_unitary, max_abs_diff
from quditsynth.sim import apply, circuit_matrix, stats
from quditsynth.stateprep import givens_chain, printed_h_block, s_tilde, t_k, tail_norms

from .conftest import random_state


def chain_product(chain):
    return reduce(lambda acc, h: h @ acc, chain, np.eye(chain[0].shape[0], dtype=complex))


def test_tail_norms(rng):
    x = random_state(rng, 6) * 2.5
    n = tail_norms(x)
    brute = [np.sqrt(sum(abs(c) ** 2 for c in x[k:])) for k in range(6)]
    assert np.allclose(n, brute, rtol=1e-14)
    assert np.all(np.diff(n) <= 0)
    assert np.isclose(n[0], np.linalg.norm(x))


def test_chain_of_e0_is_identity():
    for h in givens_chain(np.eye(5)[0]):
        assert np.array_equal(h, np.eye(5))


def test_chain_qubit_hand_example():
    x = np.array([3 / 5, 4j / 5])
    (h0,) = givens_chain(x)
    assert np.allclose(h0, [[3 / 5, 4j / 5], [4j / 5, 3 / 5]])
    assert np.allclose(h0.conj().T @ x, [1, 0])


def test_printed_block_regression():
    x = np.array([3 / 5, 4j / 5])
    printed = printed_h_block(x[0], x[1], 1.0)
    assert not is_unitary(printed, 1e-10)
    (fixed,) = givens_chain(x)
    assert is_unitary(fixed, 1e-14)
    assert np.max(np.abs(fixed.conj().T @ x - [1, 0])) < 1e-15


@pytest.mark.parametrize("d", range(2, 8))
def test_chain_rotates_onto_e0(rng, d):
    for _ in range(20):
        x = random_state(rng, d) * rng.uniform(0.1, 3)
        chain = givens_chain(x)
        assert len(chain) == d - 1
        for k, h in enumerate(chain):
            assert is_unitary(h, 1e-14)
            off = np.eye(d, dtype=complex)
            off[k : k + 2, k : k + 2] = h[k : k + 2, k : k + 2]
            assert np.array_equal(h, off)
        out = chain_product(chain).conj().T @ x
        target = np.zeros(d)
        target[0] = np.linalg.norm(x)
        assert np.max(np.abs(out - target)) <= 1e-12 * np.linalg.norm(x)


def test_chain_zero_vector():
    with pytest.raises(ZeroVector):
        givens_chain(np.zeros(3))


def test_t_k_fixed_points():
    assert np.array_equal(t_k(np.eye(4)[0], 0), np.eye(4))
    for j in range(4):
        for k in range(4):
            out = t_k(np.eye(4)[j], k) @ np.eye(4)[j]
            assert np.max(np.abs(out - np.eye(4)[k])) < 1e-15


@pytest.mark.parametrize("d", range(2, 7))
def test_t_k_random(rng, d):
    for _ in range(10):
        x = random_state(rng, d)
        for k in range(d):
            t = t_k(x, k)
            assert is_unitary(t, 1e-13)
            out = t @ x
            assert abs(out[k].imag) <= 1e-10 and out[k].real >= 0
            assert np.max(np.abs(out - np.eye(d)[k])) <= 1e-10


def test_t_k_sparse_tail():
    # zeros in the middle and at the end of the amplitude vector
    x = np.array([0, 0.6, 0, 0.8j, 0])
    for k in range(5):
        assert np.max(np.abs(t_k(x, k) @ x - np.eye(5)[k])) < 1e-15


def test_s_tilde_fixed_point():
    d, a, b = 3, 2, 1
    x = np.zeros(9)
    x[a * d + b] = 1
    out = apply(s_tilde(x, a, b), x)
    assert np.max(np.abs(out - x)) < 1e-14


def test_s_tilde_bell_state():
    x = np.array([1, 0, 0, 1]) / np.sqrt(2)
    out = apply(s_tilde(x, 0, 0), x)
    assert np.max(np.abs(out - [1, 0, 0, 0])) < 1e-14


@pytest.mark.parametrize("d", [2, 3, 4])
def test_s_tilde_haar_states(rng, d):
    for _ in range(25):
        x = random_state(rng, d * d)
        a, b = rng.integers(d, size=2)
        circ = s_tilde(x, int(a), int(b))
        out = apply(circ, x)
        assert np.max(np.abs(out - np.eye(d * d)[a * d + b])) <= 1e-9
        assert stats(circ).controlled_m == 2 * (d * d - 1)
        assert all(isinstance(g, (SingleQudit, ControlledM)) for g in circ.gates)


def test_s_tilde_prune_zero():
    d = 3
    x = np.zeros(9, dtype=complex)
    x[3:6] = [0.6, 0, 0.8j]
    full = s_tilde(x, 0, 2)
    pruned = s_tilde(x, 0, 2, prune_zero=True)
    assert stats(full).controlled_m == 2 * (d * d - 1)
    assert stats(pruned).controlled_m == 2 * 2 * (d - 1)
    for c in (full, pruned):
        assert np.max(np.abs(apply(c, x) - np.eye(9)[2])) < 1e-13


def test_s_tilde_rejects_unnormalized():
    with pytest.raises(NotNormalized):
        s_tilde(np.ones(4), 0, 0)


def test_s_tilde_controlled_rows_commute(rng):
    d = 3
    rows = [haar_random_unitary(d, s) for s in range(d)]
    mats = []
    for order in permutations(range(d)):
        c = c_u(d, order[0], rows[order[0]])
        for i in order[1:]:
            c = c + c_u(d, i, rows[i])
        mats.append(circuit_matrix(c))
    for m in mats[1:]:
        assert max_abs_diff(m, mats[0]) < 1e-13


@settings(max_examples=30, deadline=None)
@given(st.integers(2, 4), st.integers(0, 2**31))
def test_s_tilde_preserves_norm(d, seed):
    rng = np.random.default_rng(seed)
    x = random_state(rng, d * d)
    c = s_tilde(x, int(rng.integers(d)), int(rng.integers(d)))
    psi = rng.standard_normal(d * d) + 1j * rng.standard_normal(d * d)
    assert abs(np.linalg.norm(apply(c, psi)) - np.linalg.norm(psi)) <= 1e-12 * np.linalg.norm(psi)
