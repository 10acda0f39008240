import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quditsynth.errors import DimMismatch, NotUnitary
from quditsynth.matcore import (
    Tolerances,
    eig_unitary,
    haar_random_unitary,
    is_unitary,
    kron,
    max_abs_diff,
)


def kron_by_index(a, b):
    da, db = a.shape[0], b.shape[0]
    out = np.zeros((da * db, da * db), dtype=complex)
    for i1 in range(da):
        for j1 in range(da):
            for i2 in range(db):
                for j2 in range(db):
                    out[i1 * db + i2, j1 * db + j2] = a[i1, j1] * b[i2, j2]
    return out


def test_kron_identity():
    assert np.array_equal(kron(np.eye(2), np.eye(2)), np.eye(4))


def test_kron_phase_on_first_factor():
    delta = 0.83
    got = kron(np.diag([1, np.exp(1j * delta)]), np.eye(2))
    assert np.allclose(got, np.diag([1, 1, np.exp(1j * delta), np.exp(1j * delta)]))


def test_kron_pauli_index_formula():
    x = np.array([[0, 1], [1, 0]])
    z = np.diag([1, -1])
    expected = np.array([[0, 0, 1, 0], [0, 0, 0, -1], [1, 0, 0, 0], [0, -1, 0, 0]])
    assert np.array_equal(kron(x, z), expected)
    assert np.array_equal(kron_by_index(x, z), expected)


def test_kron_of_unitaries_is_unitary():
    a = haar_random_unitary(3, 1)
    b = haar_random_unitary(4, 2)
    assert is_unitary(kron(a, b), 4 * 1e-10 * 12)
    assert max_abs_diff(kron(a, b), kron_by_index(a, b)) < 1e-15


def test_is_unitary_examples():
    assert is_unitary(np.eye(3), 1e-10)
    assert not is_unitary(np.diag([1, 2]), 2.9)


def test_printed_block_is_not_unitary():
    a, b = 3 / 5, 4j / 5
    printed = np.array([[a, -np.conj(b)], [b, -np.conj(a)]])
    # column inner product is -2 a* b*
    gram = printed.conj().T @ printed
    assert np.isclose(gram[0, 1], -2 * np.conj(a) * np.conj(b))
    assert not is_unitary(printed, 1e-10)


def test_max_abs_diff():
    assert max_abs_diff(np.eye(3), np.eye(3)) == 0
    assert max_abs_diff(np.eye(2), np.diag([1, -1])) == 2
    a = haar_random_unitary(3, 5)
    b = a.copy()
    b[0, 0] += 1e-7
    assert np.isclose(max_abs_diff(a, b), 1e-7, rtol=1e-6)
    with pytest.raises(DimMismatch):
        max_abs_diff(np.eye(2), np.eye(3))


def test_haar_deterministic():
    assert np.array_equal(haar_random_unitary(2, 42), haar_random_unitary(2, 42))
    assert not np.array_equal(haar_random_unitary(2, 42), haar_random_unitary(2, 43))


@pytest.mark.parametrize("d", range(2, 10))
def test_haar_unitary(d):
    assert is_unitary(haar_random_unitary(d, d), 1e-10 * d)


def test_haar_trace_moment():
    # E|tr U|^2 = 1 under Haar measure; sample variance is 1, so 1000 draws give std err ~0.032
    vals = [abs(np.trace(haar_random_unitary(3, s))) ** 2 for s in range(1000)]
    assert abs(np.mean(vals) - 1) < 0.13


def test_haar_rejects_small():
    with pytest.raises(ValueError):
        haar_random_unitary(1, 0)


def test_tolerances_defaults():
    t = Tolerances.for_dim(4)
    assert t.tol_unitary == pytest.approx(4e-10)
    assert t.tol_eig == pytest.approx(4e-9)
    assert t.tol_norm == 1e-12 and t.tol_verify == 1e-8
    with pytest.raises(ValueError):
        Tolerances(tol_eig=0)


def test_eig_identity():
    phases, vecs = eig_unitary(np.eye(4))
    assert np.all(phases == 0)
    assert max_abs_diff(vecs, np.eye(4)) < 1e-14


def test_eig_pauli_z():
    phases, vecs = eig_unitary(np.diag([1, -1]))
    assert np.allclose(phases, [0, np.pi])
    assert max_abs_diff(np.abs(vecs), np.eye(2)) < 1e-14


def test_eig_controlled_z():
    phases, _ = eig_unitary(np.diag([1, 1, 1, -1]))
    assert np.allclose(phases, [0, 0, 0, np.pi])


def test_eig_rejects_non_unitary():
    with pytest.raises(NotUnitary):
        eig_unitary(np.diag([1, 2]))


def _check_pairs(u, phases, vecs, tol):
    n = u.shape[0]
    assert np.all(phases > -np.pi) and np.all(phases <= np.pi)
    assert np.all(np.diff(phases) >= 0)
    assert is_unitary(vecs, 1e-10 * n)
    assert max_abs_diff(vecs @ np.diag(np.exp(1j * phases)) @ vecs.conj().T, u) <= tol


@pytest.mark.parametrize("d", range(2, 10))
def test_eig_reconstruction_haar(d):
    for seed in range(1000):
        u = haar_random_unitary(d, 1000 * d + seed)
        phases, vecs = eig_unitary(u)
        _check_pairs(u, phases, vecs, 1e-9 * d)


def test_eig_degenerate_cluster_orthonormal():
    # rotated three-dimensional eigenspace at phase 0.5
    v = haar_random_unitary(5, 11)
    u = v @ np.diag(np.exp(1j * np.array([0.5, 0.5, 0.5, -2.0, 3.0]))) @ v.conj().T
    phases, vecs = eig_unitary(u)
    _check_pairs(u, phases, vecs, 5e-9)
    assert np.allclose(phases, [-2.0, 0.5, 0.5, 0.5, 3.0])


def test_eig_phase_convention():
    _, vecs = eig_unitary(haar_random_unitary(4, 3))
    for col in vecs.T:
        k = np.argmax(np.abs(col))
        assert abs(col[k].imag) < 1e-15 and col[k].real > 0


def test_eig_minus_one_phase_is_pi():
    phases, _ = eig_unitary(-np.eye(3))
    assert np.all(phases == np.pi)


@settings(max_examples=50, deadline=None)
@given(st.integers(2, 6), st.integers(0, 2**31))
def test_eig_property(d, seed):
    u = haar_random_unitary(d, seed)
    phases, vecs = eig_unitary(u)
    _check_pairs(u, phases, vecs, 1e-9 * d)
