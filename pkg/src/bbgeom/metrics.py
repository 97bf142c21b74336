"""
Distances between achieved and desired evolutions.

The coordinate distance ``d = |a' - a^t|`` needs no diagonalization and
relates to the Hilbert-Schmidt geometry of the matrices through the basis
normalization: ``M d**2 = Tr[(A' - A^t)**2]``. For unitaries the trace-norm
distance ``d_u(U, V) = sqrt(1 - Re Tr(U^dag V)/n)`` is provided as printed
(sensitive to global phase) and in a phase-minimized variant.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np
from scipy import linalg as sla

from .errors import ShapeError
from .su_algebra import CoefficientVector, reconstruct

__all__ = ['ErrorVector', 'error_vector', 'euclidean_distance', 'hs_overlap',
           'unitary_trace_distance', 'phase_invariant_trace_distance',
           'ShortTimeComparison', 'short_time_distance_check']


def _pair(a, b):
    if isinstance(a, CoefficientVector) and isinstance(b, CoefficientVector):
        if not a.basis.compatible(b.basis):
            raise ShapeError('vectors belong to different bases')
    x, y = np.asarray(a), np.asarray(b)
    if x.shape != y.shape or x.ndim != 1:
        raise ShapeError(f'incompatible vector shapes {x.shape} and {y.shape}')
    if np.iscomplexobj(x) or np.iscomplexobj(y):
        warnings.warn('complex coefficient vectors describe non-Hermitian '
                      'operators', RuntimeWarning, stacklevel=3)
    return x, y


@dataclass(frozen=True, eq=False)
class ErrorVector:
    """``e = achieved - target`` with magnitude ``d = sqrt(e*.e)``."""
    components: np.ndarray
    basis: object = None

    @property
    def magnitude(self) -> float:
        e = self.components
        return float(np.sqrt(np.vdot(e, e).real))

    def __array__(self, dtype=None, copy=None):
        return np.asarray(self.components, dtype=dtype)


def error_vector(achieved, target) -> ErrorVector:
    x, y = _pair(achieved, target)
    return ErrorVector(x - y, getattr(achieved, 'basis', None))


def euclidean_distance(a, b) -> float:
    """``sqrt((a - b)^* . (a - b))``."""
    x, y = _pair(a, b)
    e = x - y
    return float(np.sqrt(np.vdot(e, e).real))


def hs_overlap(a: CoefficientVector, b: CoefficientVector) -> float:
    """``Tr[(a.lambda)(b.lambda)] = M a.b``."""
    x, y = _pair(a, b)
    return float(a.basis.normalization*np.dot(x, y).real)


def _unitary_pair(U, V):
    U, V = np.asarray(U, dtype=complex), np.asarray(V, dtype=complex)
    if U.shape != V.shape or U.ndim != 2 or U.shape[0] != U.shape[1]:
        raise ShapeError(f'incompatible matrix shapes {U.shape}, {V.shape}')
    return U, V


def unitary_trace_distance(U, V) -> float:
    """``sqrt(1 - Re Tr(U^dag V) / n)``; not invariant under global phases."""
    U, V = _unitary_pair(U, V)
    val = 1 - np.trace(U.conj().T @ V).real/U.shape[0]
    return float(np.sqrt(max(val, 0.0)))


def phase_invariant_trace_distance(U, V) -> float:
    """``sqrt(1 - |Tr(U^dag V)| / n)``, the minimum of ``d_u`` over phases."""
    U, V = _unitary_pair(U, V)
    val = 1 - abs(np.trace(U.conj().T @ V))/U.shape[0]
    return float(np.sqrt(max(val, 0.0)))


@dataclass(frozen=True)
class ShortTimeComparison:
    t: float
    exact: float
    surrogate: float

    @property
    def difference(self) -> float:
        return self.exact - self.surrogate

    @property
    def relative_difference(self) -> float:
        if self.exact == 0.0:
            return abs(self.surrogate)
        return abs(self.difference)/self.exact


def short_time_distance_check(a_target: CoefficientVector,
                              a_achieved: CoefficientVector,
                              t: float) -> ShortTimeComparison:
    """
    Compare ``d_u(exp(-iHt), exp(-iH't))`` with its leading-order form.

    Expanding both exponentials to second order gives
    ``d_u = t sqrt(M / 2n) |a' - a^t| + O(t**3)``, so the coordinate
    distance fixes the unitary distance at short times. The relative
    discrepancy scales as ``t**2``.
    """
    x, y = _pair(a_target, a_achieved)
    basis = a_target.basis
    H, Hp = reconstruct(a_target), reconstruct(a_achieved)
    exact = unitary_trace_distance(sla.expm(-1j*t*H), sla.expm(-1j*t*Hp))
    surrogate = t*np.sqrt(basis.normalization/(2*basis.n))*np.linalg.norm(x - y)
    return ShortTimeComparison(t, exact, float(surrogate))
