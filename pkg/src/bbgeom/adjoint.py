"""
Adjoint action of unitaries on coordinate vectors.

Convention
----------
``adjoint_rotation(U)`` is the matrix ``R`` that sends the coordinates of
``S`` to the coordinates of ``U^dagger S U``::

    expand(U^dagger S U) == R @ expand(S)

i.e. ``R[j, i] = Tr(U^dagger lambda_i U lambda_j) / M``. Because the
conjugation is ``U^dagger (.) U``, composition reverses order::

    adjoint_rotation(U @ V) == adjoint_rotation(V) @ adjoint_rotation(U)

The explicit SO(3) constructors follow the same rule. ``euler_rotation`` is
the adjoint rotation of :func:`euler_unitary`, and ``axis_angle_rotation(p)``
is the adjoint rotation of ``su2_from_axis_angle(p)^dagger``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np
from scipy import linalg as sla

from .errors import ShapeError, ValidityError
from .su_algebra import (NUMERIC_TOL, PAULI, CoefficientVector,
                         GeneratorBasis, make_pauli_basis)

__all__ = ['AdjointRotation', 'AxisAngle', 'EulerAngles', 'adjoint_rotation',
           'euler_rotation', 'euler_unitary', 'axis_angle_rotation',
           'su2_from_axis_angle', 'is_unitary']


def is_unitary(U, tol: float = NUMERIC_TOL) -> bool:
    U = np.asarray(U)
    return (U.ndim == 2 and U.shape[0] == U.shape[1]
            and np.abs(U.conj().T @ U - np.eye(len(U))).max() <= tol)


@dataclass(frozen=True, eq=False)
class AdjointRotation:
    """Orthogonal ``N x N`` matrix acting on coordinate vectors of ``basis``."""
    matrix: np.ndarray
    basis: GeneratorBasis = None

    def __post_init__(self):
        R = np.array(self.matrix, dtype=float)
        if R.ndim != 2 or R.shape[0] != R.shape[1]:
            raise ShapeError(f'rotation must be square, got {R.shape}')
        if self.basis is not None and R.shape[0] != self.basis.N:
            raise ShapeError(f'rotation of size {R.shape[0]} does not match '
                             f'basis with N={self.basis.N}')
        R.setflags(write=False)
        object.__setattr__(self, 'matrix', R)

    @property
    def N(self) -> int:
        return self.matrix.shape[0]

    def __array__(self, dtype=None, copy=None):
        return np.asarray(self.matrix, dtype=dtype)

    def __matmul__(self, other):
        if isinstance(other, AdjointRotation):
            return AdjointRotation(self.matrix @ other.matrix,
                                   self.basis or other.basis)
        if isinstance(other, CoefficientVector):
            return self.apply(other)
        return self.matrix @ np.asarray(other)

    def apply(self, a: CoefficientVector) -> CoefficientVector:
        if self.basis is not None and not self.basis.compatible(a.basis):
            raise ShapeError('rotation and vector belong to different bases')
        if len(a) != self.N:
            raise ShapeError(f'vector of length {len(a)} for rotation of '
                             f'size {self.N}')
        return a.with_components(self.matrix @ a.components)

    def orthogonality_error(self) -> float:
        return float(np.abs(self.matrix @ self.matrix.T - np.eye(self.N)).max())

    def determinant(self) -> float:
        return float(np.linalg.det(self.matrix))

    def __repr__(self):
        name = self.basis.name if self.basis is not None else None
        return f'AdjointRotation(N={self.N}, basis={name!r})'


@dataclass(frozen=True)
class AxisAngle:
    """Rotation by ``angle`` (radians) about the unit vector ``axis``."""
    axis: tuple
    angle: float

    def __post_init__(self):
        axis = np.asarray(self.axis, dtype=float)
        if axis.shape != (3,):
            raise ShapeError(f'axis must be a 3-vector, got shape {axis.shape}')
        norm = np.linalg.norm(axis)
        if norm < 1e-12:
            raise ValidityError('rotation axis must be nonzero')
        object.__setattr__(self, 'axis', tuple(float(x) for x in axis/norm))
        object.__setattr__(self, 'angle', float(self.angle))

    @property
    def unit(self) -> np.ndarray:
        return np.array(self.axis)


@dataclass(frozen=True)
class EulerAngles:
    """z-y-z Euler angles ``(alpha, beta, gamma)`` in radians."""
    alpha: float
    beta: float
    gamma: float

    def __post_init__(self):
        if not np.all(np.isfinite([self.alpha, self.beta, self.gamma])):
            raise ValidityError('Euler angles must be finite')


def adjoint_rotation(U, basis: GeneratorBasis,
                     tol: float = NUMERIC_TOL) -> AdjointRotation:
    """
    Coordinate matrix of the map ``S -> U^dagger S U`` in ``basis``.

    Raises
    ------
    ShapeError
        ``U`` is not ``n x n`` for the basis dimension.
    ValidityError
        ``U`` is not unitary within ``tol``.
    """
    U = np.asarray(U, dtype=complex)
    if U.shape != (basis.n, basis.n):
        raise ShapeError(f'unitary of shape {U.shape} does not match basis '
                         f'dimension {basis.n}')
    if not is_unitary(U, tol):
        raise ValidityError('pulse is not unitary')
    conj = U.conj().T @ basis.elements @ U
    # R[j, i] = Tr(lambda_j U^dag lambda_i U) / M
    R = np.einsum('jab,iba->ji', basis.elements, conj).real
    return AdjointRotation(R/basis.normalization, basis)


def euler_unitary(angles: EulerAngles) -> np.ndarray:
    """``exp(i s3 alpha/2) exp(i s2 beta/2) exp(i s3 gamma/2)``."""
    return (sla.expm(0.5j*angles.alpha*PAULI[3])
            @ sla.expm(0.5j*angles.beta*PAULI[2])
            @ sla.expm(0.5j*angles.gamma*PAULI[3]))


def euler_rotation(angles: EulerAngles) -> AdjointRotation:
    """
    Closed-form SO(3) matrix equal to ``adjoint_rotation(euler_unitary(angles))``.

    Rows read ``sigma_i -> sum_j R_ij sigma_j`` for the conjugation
    ``V sigma_i V^dagger`` with ``V = euler_unitary(angles)``.
    """
    ca, sa = np.cos(angles.alpha), np.sin(angles.alpha)
    cb, sb = np.cos(angles.beta), np.sin(angles.beta)
    cg, sg = np.cos(angles.gamma), np.sin(angles.gamma)
    R = np.array([
        [ca*cb*cg - sa*sg, -sa*cb*cg - ca*sg, sb*cg],
        [ca*cb*sg + sa*cg, -sa*cb*sg + ca*cg, sb*sg],
        [-ca*sb, sa*sb, cb],
    ])
    return AdjointRotation(R, make_pauli_basis())


def axis_angle_rotation(p: AxisAngle) -> AdjointRotation:
    r"""
    SO(3) matrix ``R_n(theta)`` with ``x' = R^T x`` where

    .. math::

        x' = (n\cdot x) n + [(n\times x)\times n]\cos\theta
             + (n\times x)\sin\theta .

    For ``n = x`` this is ``[[1, 0, 0], [0, c, s], [0, -s, c]]``.
    """
    n = p.unit
    c, s = np.cos(p.angle), np.sin(p.angle)
    cross = np.array([[0, -n[2], n[1]], [n[2], 0, -n[0]], [-n[1], n[0], 0]])
    # Rodrigues form of x -> x'
    forward = c*np.eye(3) + (1 - c)*np.outer(n, n) + s*cross
    return AdjointRotation(forward.T, make_pauli_basis())


def su2_from_axis_angle(p: AxisAngle, sign: int = 1) -> np.ndarray:
    """
    ``exp(i sign (theta/2) n.sigma)``.

    With the default ``sign=+1``, ``adjoint_rotation`` of the inverse
    (``U^dagger``) reproduces ``axis_angle_rotation(p)``.
    """
    if sign not in (1, -1):
        raise ValueError('sign must be +1 or -1')
    n = p.unit
    h = 0.5*sign*p.angle
    ns = np.tensordot(n, PAULI[1:], axes=1)
    return np.cos(h)*np.eye(2) + 1j*np.sin(h)*ns


def compose(rotations: Sequence[AdjointRotation]) -> AdjointRotation:
    """Matrix product of rotations, leftmost first."""
    out = rotations[0]
    for r in rotations[1:]:
        out = out @ r
    return out
