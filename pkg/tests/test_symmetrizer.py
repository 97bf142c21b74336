import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bbgeom.errors import ShapeError, ValidityError
from bbgeom.sequences import cyclic_sequence, parity_kick, vierergruppe
from bbgeom.su_algebra import (CoefficientVector, SystemHamiltonian, expand,
                               make_gell_mann_basis, make_pauli_basis,
                               make_pauli_tensor_basis)
from bbgeom.symmetrizer import (PulseSet, analyze, average_vector,
                                centralizer_check, check_storage,
                                check_target, conjugation_average,
                                effective_hamiltonian, little_group_check,
                                same_up_to_phase, verify_group_closure)

from conftest import I2, X, Y, Z, random_traceless_hermitian, random_unitary


def test_pulse_set_validation():
    with pytest.raises(ValidityError):
        PulseSet([X, I2])                       # U_0 not identity
    with pytest.raises(ValidityError):
        PulseSet([I2, 2*X])
    with pytest.raises(ValidityError):
        PulseSet([I2, X], weights=[0.7, 0.7])
    with pytest.raises(ValidityError):
        PulseSet([I2, X], weights=[1.0, 0.0])
    with pytest.raises(ShapeError):
        PulseSet([])
    with pytest.raises(ShapeError):
        PulseSet([I2, X], labels=['a'])
    p = PulseSet([1j*I2, X])                    # identity up to phase is fine
    assert p.uniform and len(p) == 2 and p.group_closed is None


def test_with_identity_prepends():
    p = PulseSet.with_identity([X, Y], labels=['X', 'Y'])
    assert p.labels == ('I', 'X', 'Y')
    assert len(PulseSet.with_identity([I2, X])) == 2


def test_average_vector_examples():
    b = make_pauli_basis()
    a = expand(Z, b)
    kick = parity_kick().pulses
    avg = average_vector(a, kick.rotations(b), kick.weights)
    assert np.linalg.norm(avg.components) <= 1e-12
    # single identity pulse leaves everything alone
    avg = average_vector(a, [np.eye(3)])
    np.testing.assert_array_equal(avg.components, a.components)
    with pytest.raises(ShapeError):
        average_vector(a, [])
    with pytest.raises(ValidityError):
        average_vector(a, [np.eye(3)]*2, [0.5, 0.6])
    with pytest.raises(ShapeError):
        average_vector(a, [np.eye(8)])


def test_c3_analytic_sum():
    # three unit vectors 120 degrees apart in the y-z plane sum to zero
    b = make_pauli_basis()
    seq = cyclic_sequence(3)
    images = [R.matrix @ [0, 0, 1] for R in seq.pulses.rotations(b)]
    for i in range(3):
        for j in range(i + 1, 3):
            assert np.dot(images[i], images[j]) == pytest.approx(-0.5, abs=1e-12)
    # x component untouched
    avg = average_vector(expand(X + Z, b), seq.pulses.rotations(b))
    np.testing.assert_allclose(avg.components, [1, 0, 0], atol=1e-12)


def _random_pulse_set(n, size, rng):
    us = [np.eye(n)] + [random_unitary(n, rng) for _ in range(size - 1)]
    w = rng.uniform(0.1, 1, size)
    return PulseSet(us, weights=w/w.sum())


@pytest.mark.parametrize('basis', [make_pauli_basis(),
                                   make_pauli_tensor_basis(2),
                                   make_gell_mann_basis(3)], ids=repr)
def test_matrix_and_coordinate_paths_agree(basis, rng):
    for _ in range(50):
        pulses = _random_pulse_set(basis.n, int(rng.integers(1, 6)), rng)
        S = random_traceless_hermitian(basis.n, rng)
        coord = average_vector(expand(S, basis), pulses.rotations(basis),
                               pulses.weights)
        mat = expand(conjugation_average(S, pulses), basis)
        np.testing.assert_allclose(coord.components, mat.components,
                                   atol=1e-9)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32 - 1), st.integers(1, 5))
def test_averaging_is_contraction(seed, size):
    rng = np.random.default_rng(seed)
    b = make_gell_mann_basis(3)
    pulses = _random_pulse_set(3, size, rng)
    a = expand(random_traceless_hermitian(3, rng), b)
    avg = average_vector(a, pulses.rotations(b), pulses.weights)
    assert avg.norm() <= a.norm() + 1e-12


def test_conjugation_average_on_system_bath():
    kick = parity_kick().pulses
    H = np.kron(Z, Z) + np.kron(X, Y)
    np.testing.assert_allclose(conjugation_average(H, kick), np.kron(X, Y),
                               atol=1e-12)
    with pytest.raises(ShapeError):
        conjugation_average(np.eye(3), kick)


def test_effective_hamiltonian_termwise():
    H = SystemHamiltonian.from_terms((Z, 'B', 'deph'), (X, None, 'field'))
    eff = effective_hamiltonian(H, parity_kick().pulses)
    np.testing.assert_allclose(eff.terms[0].system, 0, atol=1e-12)
    np.testing.assert_allclose(eff.terms[1].system, X, atol=1e-12)
    assert eff.terms[0].bath == 'B'


def test_storage_and_target_checks():
    b = make_pauli_basis()
    zero = CoefficientVector(np.zeros(3), b)
    small = CoefficientVector([0, 0, 1e-10], b)
    assert check_storage([zero, small])
    assert not check_storage([CoefficientVector([0, 0, 1e-6], b)])
    assert check_target(small, zero)
    assert not check_target(CoefficientVector([1, 0, 0], b), zero)
    with pytest.raises(ShapeError):
        check_target(zero, CoefficientVector(np.zeros(8),
                                             make_gell_mann_basis(3)))


def test_centralizer():
    kick = parity_kick().pulses
    assert centralizer_check(X, kick)
    assert not centralizer_check(Z, kick)
    assert centralizer_check(np.zeros((2, 2)), kick)
    with pytest.raises(ShapeError):
        centralizer_check(np.eye(3), kick)


def test_group_closure():
    assert verify_group_closure(vierergruppe().pulses)
    assert verify_group_closure(cyclic_sequence(4).pulses)
    p = PulseSet([I2, -1j*X, -1j*Y])
    assert not verify_group_closure(p)
    assert p.group_closed is False
    assert same_up_to_phase(-1j*X, X) and not same_up_to_phase(X, Y)


def test_little_group():
    b = make_pauli_basis()
    Rx = parity_kick().pulses.rotations(b)[1]
    assert little_group_check(Rx, [1, 0, 0])
    assert not little_group_check(Rx, [0, 0, 1])
    with pytest.raises(ShapeError):
        little_group_check(np.eye(2), [1, 0, 0])


def test_analyze_report():
    b = make_pauli_basis()
    H = SystemHamiltonian.from_terms((Z, 'B', 'deph'), (X, None, 'drive', True))
    rep = analyze(H, parity_kick().pulses, b)
    assert rep.storage_achieved is False        # wanted X term survives
    assert rep.target_achieved
    assert rep['deph'].distance <= 1e-12
    assert rep['drive'].in_centralizer and not rep['deph'].in_centralizer
    assert rep['drive'].overlap == pytest.approx(2.0)
    assert rep.pulses.group_closed
    with pytest.raises(KeyError):
        rep['missing']
    with pytest.raises(ShapeError):
        analyze(H, parity_kick().pulses, b, targets={'nope': [0, 0, 0]})
    rep = analyze(H, parity_kick().pulses, b, targets={'drive': [0, 0, 0]})
    assert rep.max_distance == pytest.approx(1.0)
