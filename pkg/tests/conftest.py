import numpy as np
import pytest

_ACCEPTANCE = []


def block_oracle(d, a, g, control_qudit=0):
    """Brute-force controlled-G: identity except control block ``a`` carries ``g``."""
    n = d * d
    m = np.zeros((n, n), dtype=complex)
    for i in range(d):
        for j in range(d):
            for k in range(d):
                for l in range(d):
                    if control_qudit == 0:
                        if i == k:
                            m[i * d + j, k * d + l] = g[j, l] if i == a else float(j == l)
                    else:
                        if j == l:
                            m[i * d + j, k * d + l] = g[i, k] if j == a else float(i == k)
    return m


def random_state(rng, n):
    v = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    return v / np.linalg.norm(v)


@pytest.fixture
def rng():
    return np.random.default_rng(20261016)


@pytest.fixture
def acceptance():
    def record(name, passed, detail=""):
        _ACCEPTANCE.append((name, passed, detail))
        assert passed, f"{name}: {detail}"

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, passed, detail in _ACCEPTANCE:
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {name}  {detail}")
