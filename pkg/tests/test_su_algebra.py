import warnings

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bbgeom.errors import InvalidDimensionError, ShapeError, ValidityError
from bbgeom.su_algebra import (CoefficientVector, GeneratorBasis,
                               IdentityComponentWarning, SystemHamiltonian,
                               expand, make_basis, make_gell_mann_basis,
                               make_pauli_basis, make_pauli_tensor_basis,
                               project_traceless, reconstruct)

from conftest import I2, X, Y, Z, random_traceless_hermitian

ALL_BASES = [make_pauli_basis(), make_gell_mann_basis(2),
             make_gell_mann_basis(3), make_gell_mann_basis(4),
             make_pauli_tensor_basis(1), make_pauli_tensor_basis(2)]


@pytest.mark.parametrize('basis', ALL_BASES, ids=repr)
def test_basis_invariants(basis):
    el = basis.elements
    assert np.abs(el - el.conj().transpose(0, 2, 1)).max() <= 1e-12
    assert np.abs(np.trace(el, axis1=1, axis2=2)).max() <= 1e-12
    # explicit double loop, independent of the einsum in gram()
    for i in range(basis.N):
        for j in range(basis.N):
            tr = np.trace(el[i] @ el[j])
            assert abs(tr - basis.normalization*(i == j)) <= 1e-12
    assert np.linalg.matrix_rank(basis.gram()) == basis.N


def test_pauli_basis():
    b = make_pauli_basis()
    assert (b.n, b.N, b.normalization) == (2, 3, 2.0)
    np.testing.assert_array_equal(b.elements, [X, Y, Z])
    assert abs(np.trace(b[2])) == 0
    # [s1, s2] = 2i s3 by direct multiplication
    np.testing.assert_allclose(b[0] @ b[1] - b[1] @ b[0], 2j*b[2], atol=1e-15)


def test_gell_mann_two_is_pauli_up_to_orthogonal_change():
    gm, p = make_gell_mann_basis(2), make_pauli_basis()
    C = np.array([[np.trace(a @ b).real/2 for b in p.elements]
                  for a in gm.elements])
    np.testing.assert_allclose(C @ C.T, np.eye(3), atol=1e-12)


def test_gell_mann_three():
    b = make_gell_mann_basis(3)
    assert b.N == 8 and b.normalization == 2
    # lambda_8 = diag(1, 1, -2)/sqrt(3)
    np.testing.assert_allclose(b[7], np.diag([1, 1, -2])/np.sqrt(3), atol=1e-15)
    np.testing.assert_allclose(b[1], [[0, -1j, 0], [1j, 0, 0], [0, 0, 0]])


def test_gell_mann_four_full_rank():
    assert np.linalg.matrix_rank(make_gell_mann_basis(4).gram()) == 15


@pytest.mark.parametrize('n', [1, 0, -3])
def test_gell_mann_invalid_dimension(n):
    with pytest.raises(InvalidDimensionError):
        make_gell_mann_basis(n)


def test_pauli_tensor_two_qubit_labels():
    b = make_pauli_tensor_basis(2)
    assert b.normalization == 4 and b.N == 15
    assert b.labels[:6] == ('XI', 'YI', 'ZI', 'IX', 'IY', 'IZ')
    np.testing.assert_array_equal(b[6], np.kron(X, X))       # lambda_7
    np.testing.assert_array_equal(b[10], np.kron(Y, Y))      # lambda_11
    np.testing.assert_array_equal(b[14], np.kron(Z, Z))      # lambda_15
    np.testing.assert_array_equal(b[2], np.kron(Z, I2))      # lambda_3
    np.testing.assert_array_equal(b[5], np.kron(I2, Z))      # lambda_6


def test_pauli_tensor_single_qubit_equals_pauli():
    assert make_pauli_tensor_basis(1).compatible(make_pauli_basis())


def test_pauli_tensor_three_qubits_lexicographic():
    b = make_pauli_tensor_basis(3)
    assert b.N == 63 and b.normalization == 8
    assert b.labels[:3] == ('IIX', 'IIY', 'IIZ') and b.labels[-1] == 'ZZZ'


def test_pauli_tensor_invalid():
    with pytest.raises(InvalidDimensionError):
        make_pauli_tensor_basis(0)


def test_make_basis_lookup():
    assert make_basis('pauli-tensor', 4).N == 15
    assert make_basis('gell-mann', 3).N == 8
    with pytest.raises(InvalidDimensionError):
        make_basis('pauli-tensor', 3)
    with pytest.raises(ValueError):
        make_basis('nope', 2)


def test_basis_rejects_non_orthogonal_elements():
    with pytest.raises(ValidityError):
        GeneratorBasis(np.array([X, X + Z, Z]), 2.0, 'bad')


def test_expand_examples():
    p = make_pauli_basis()
    g = 0.7
    np.testing.assert_allclose(expand(g*Z, p), [0, 0, g], atol=1e-15)
    np.testing.assert_array_equal(expand(np.zeros((2, 2)), p), [0, 0, 0])
    b = make_pauli_tensor_basis(2)
    J = 1.3
    Hex = J*(np.kron(X, X) + np.kron(Y, Y) + np.kron(Z, Z))
    expected = np.zeros(15)
    expected[[6, 10, 14]] = J
    np.testing.assert_allclose(expand(Hex, b), expected, atol=1e-15)


def test_expand_errors():
    p = make_pauli_basis()
    with pytest.raises(ShapeError):
        expand(np.eye(3), p)
    with pytest.raises(ValidityError):
        expand(np.array([[0, 1], [0, 0]]), p)


def test_expand_strips_identity_with_warning():
    p = make_pauli_basis()
    with pytest.warns(IdentityComponentWarning):
        a = expand(np.diag([2.0, 0.0]), p)
    np.testing.assert_allclose(a, [0, 0, 1])
    with warnings.catch_warnings():
        warnings.simplefilter('error')
        expand(Z, p)


def test_reconstruct_examples():
    p = make_pauli_basis()
    np.testing.assert_allclose(reconstruct([0, 0, 0.4], p), 0.4*Z)
    np.testing.assert_array_equal(reconstruct(np.zeros(3), p), np.zeros((2, 2)))
    with pytest.raises(ShapeError):
        reconstruct([1, 2], p)
    with pytest.raises(ShapeError):
        CoefficientVector([1, 2], p)


@pytest.mark.parametrize('basis', [make_pauli_basis(), make_gell_mann_basis(3),
                                   make_gell_mann_basis(4),
                                   make_pauli_tensor_basis(2)], ids=repr)
def test_round_trip_random(basis, rng):
    for _ in range(100):
        S = random_traceless_hermitian(basis.n, rng)
        np.testing.assert_allclose(reconstruct(expand(S, basis)), S, atol=1e-12)
        a = rng.normal(size=basis.N)
        np.testing.assert_allclose(expand(reconstruct(a, basis), basis), a,
                                   atol=1e-12)


def test_project_traceless():
    np.testing.assert_allclose(project_traceless(np.eye(3)), 0)
    np.testing.assert_array_equal(project_traceless(Z), Z)
    np.testing.assert_allclose(project_traceless(np.diag([2.0, 0.0])), Z)
    with pytest.raises(ShapeError):
        project_traceless(np.ones((2, 3)))


@settings(max_examples=50, deadline=None)
@given(st.integers(2, 4), st.floats(-5, 5), st.floats(-5, 5),
       st.integers(0, 2**32 - 1))
def test_expand_is_linear(n, alpha, beta, seed):
    rng = np.random.default_rng(seed)
    basis = make_gell_mann_basis(n)
    S, T = (random_traceless_hermitian(n, rng) for _ in range(2))
    lhs = expand(alpha*S + beta*T, basis).components
    rhs = alpha*expand(S, basis).components + beta*expand(T, basis).components
    np.testing.assert_allclose(lhs, rhs, atol=1e-9)


def test_system_hamiltonian_construction():
    p = make_pauli_basis()
    with pytest.warns(IdentityComponentWarning):
        H = SystemHamiltonian.from_terms((Z + np.eye(2), 'B', 'deph'),
                                         (CoefficientVector([1, 0, 0], p),))
    np.testing.assert_allclose(H.terms[0].system, Z)
    np.testing.assert_allclose(H.terms[1].system, X)
    assert H.labels == ['deph', 'term1']
    with pytest.raises(ValidityError):
        H.full_matrix()
    H2 = SystemHamiltonian.from_terms((Z, Z), (X, None))
    np.testing.assert_allclose(H2.full_matrix(), np.kron(Z, Z) + np.kron(X, I2))
    with pytest.raises(ShapeError):
        SystemHamiltonian.from_terms((Z,), (np.diag([1, -1, 0]),))
