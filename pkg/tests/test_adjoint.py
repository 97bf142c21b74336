import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy import linalg as sla

from bbgeom.adjoint import (AdjointRotation, AxisAngle, EulerAngles,
                            adjoint_rotation, axis_angle_rotation, compose,
                            euler_rotation, euler_unitary, is_unitary,
                            su2_from_axis_angle)
from bbgeom.errors import ShapeError, ValidityError
from bbgeom.su_algebra import (expand, make_gell_mann_basis, make_pauli_basis,
                               make_pauli_tensor_basis, reconstruct)

from conftest import I2, X, Y, Z, random_traceless_hermitian, random_unitary

angles = st.floats(-2*np.pi, 2*np.pi, allow_nan=False)


def rodrigues_image(n, theta, x):
    n = np.asarray(n, float)/np.linalg.norm(n)
    nx = np.cross(n, x)
    return np.dot(n, x)*n + np.cross(nx, n)*np.cos(theta) + nx*np.sin(theta)


def test_identity_pulse_gives_identity_rotation():
    for basis in (make_pauli_basis(), make_gell_mann_basis(3)):
        R = adjoint_rotation(np.eye(basis.n), basis)
        np.testing.assert_allclose(R.matrix, np.eye(basis.N), atol=1e-15)


def test_pi_pulse_about_x():
    R = adjoint_rotation(-1j*X, make_pauli_basis())
    # X Y X = -Y, X Z X = -Z
    np.testing.assert_allclose(R.matrix, np.diag([1, -1, -1]), atol=1e-12)


def test_global_phase_does_not_matter(rng):
    b = make_gell_mann_basis(3)
    U = random_unitary(3, rng)
    np.testing.assert_allclose(adjoint_rotation(U, b).matrix,
                               adjoint_rotation(np.exp(0.3j)*U, b).matrix,
                               atol=1e-12)


def test_adjoint_rotation_errors():
    b = make_pauli_basis()
    with pytest.raises(ValidityError):
        adjoint_rotation(np.array([[1, 1], [0, 1]]), b)
    with pytest.raises(ShapeError):
        adjoint_rotation(np.eye(3), b)


@pytest.mark.parametrize('basis', [make_pauli_basis(), make_gell_mann_basis(3),
                                   make_gell_mann_basis(4),
                                   make_pauli_tensor_basis(2)], ids=repr)
def test_random_unitary_properties(basis, rng):
    for _ in range(100):
        U, V = random_unitary(basis.n, rng), random_unitary(basis.n, rng)
        R = adjoint_rotation(U, basis)
        assert R.orthogonality_error() <= 1e-9
        assert abs(R.determinant() - 1) <= 1e-9
        S = random_traceless_hermitian(basis.n, rng)
        # conjugation fidelity, checked on matrices
        np.testing.assert_allclose(
            reconstruct(R.matrix @ expand(S, basis).components, basis),
            U.conj().T @ S @ U, atol=1e-9)
        # composition with the U^dag (.) U convention reverses the order
        lhs = adjoint_rotation(U @ V, basis).matrix
        rhs = (adjoint_rotation(V, basis) @ R).matrix
        np.testing.assert_allclose(lhs, rhs, atol=1e-9)


def test_euler_closed_form_matches_adjoint(rng):
    for _ in range(100):
        ang = EulerAngles(*rng.uniform(-2*np.pi, 2*np.pi, 3))
        U = euler_unitary(ang)
        np.testing.assert_allclose(
            euler_rotation(ang).matrix,
            adjoint_rotation(U, make_pauli_basis()).matrix, atol=1e-9)


def test_euler_unitary_independent_product():
    a, b, g = 0.3, -1.1, 2.0
    U = (sla.expm(0.5j*a*Z) @ sla.expm(0.5j*b*Y) @ sla.expm(0.5j*g*Z))
    np.testing.assert_allclose(euler_unitary(EulerAngles(a, b, g)), U,
                               atol=1e-14)


def test_euler_angles_must_be_finite():
    with pytest.raises(ValidityError):
        EulerAngles(np.nan, 0, 0)


def test_axis_angle_printed_form():
    c, s = np.cos(0.4), np.sin(0.4)
    R = axis_angle_rotation(AxisAngle((1, 0, 0), 0.4)).matrix
    np.testing.assert_allclose(R, [[1, 0, 0], [0, c, s], [0, -s, c]],
                               atol=1e-15)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.floats(-1, 1), min_size=3, max_size=3)
       .filter(lambda v: np.linalg.norm(v) > 1e-3), angles)
def test_axis_angle_is_transpose_of_rodrigues_map(axis, theta):
    R = axis_angle_rotation(AxisAngle(axis, theta)).matrix
    for x in np.eye(3):
        np.testing.assert_allclose(R.T @ x, rodrigues_image(axis, theta, x),
                                   atol=1e-12)
    # and it is the adjoint rotation of the inverse SU(2) element
    U = su2_from_axis_angle(AxisAngle(axis, theta))
    np.testing.assert_allclose(
        R, adjoint_rotation(U.conj().T, make_pauli_basis()).matrix, atol=1e-12)


def test_su2_from_axis_angle_matches_expm():
    p = AxisAngle((1, 2, -2), 0.7)
    ns = sum(c*s for c, s in zip(p.axis, (X, Y, Z)))
    np.testing.assert_allclose(su2_from_axis_angle(p), sla.expm(0.35j*ns),
                               atol=1e-14)
    np.testing.assert_allclose(su2_from_axis_angle(p, -1), sla.expm(-0.35j*ns),
                               atol=1e-14)
    with pytest.raises(ValueError):
        su2_from_axis_angle(p, 2)


def test_axis_angle_validation():
    with pytest.raises(ValidityError):
        AxisAngle((0, 0, 0), 1.0)
    with pytest.raises(ShapeError):
        AxisAngle((1, 0), 1.0)
    assert AxisAngle((0, 0, 3), 1).axis == (0.0, 0.0, 1.0)


@settings(max_examples=40, deadline=None)
@given(angles, angles, angles, st.lists(st.floats(-3, 3), min_size=3,
                                        max_size=3))
def test_euler_rotation_preserves_length(a, b, g, v):
    R = euler_rotation(EulerAngles(a, b, g))
    assert R.orthogonality_error() <= 1e-12
    assert np.linalg.norm(R @ np.array(v)) == pytest.approx(
        np.linalg.norm(v), abs=1e-9)


def test_rotation_object_behaviour():
    b = make_pauli_basis()
    Rx = adjoint_rotation(-1j*X, b)
    Ry = adjoint_rotation(-1j*Y, b)
    Rz = compose([Rx, Ry])
    np.testing.assert_allclose(Rz.matrix, np.diag([-1, -1, 1]), atol=1e-12)
    a = expand(Z, b)
    np.testing.assert_allclose((Rx @ a).components, [0, 0, -1], atol=1e-12)
    with pytest.raises(ShapeError):
        AdjointRotation(np.eye(3), make_gell_mann_basis(3))
    with pytest.raises(ShapeError):
        Rx.apply(expand(np.diag([1, -1, 0]), make_gell_mann_basis(3)))
    assert is_unitary(I2) and not is_unitary(2*I2)
