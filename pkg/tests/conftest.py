import numpy as np
import pytest
from scipy.stats import unitary_group

from bbgeom.su_algebra import PAULI

I2, X, Y, Z = PAULI

# (criterion, passed, detail) lines collected by test_acceptance
ACCEPTANCE_LOG = []


def random_unitary(n, rng):
    return unitary_group.rvs(n, random_state=rng)


def random_traceless_hermitian(n, rng, scale=1.0):
    A = rng.normal(size=(n, n)) + 1j*rng.normal(size=(n, n))
    A = (A + A.conj().T)/2
    return scale*(A - np.trace(A)/n*np.eye(n))


@pytest.fixture
def rng():
    return np.random.default_rng(20021016)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LOG:
        return
    terminalreporter.section('acceptance criteria')
    for name, ok, detail in ACCEPTANCE_LOG:
        terminalreporter.write_line(f'{"PASS" if ok else "FAIL"}  {name}: {detail}')
