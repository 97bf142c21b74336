"""
Finite-interval bang-bang cycles on system (x) bath.

Pulses are instantaneous and act on the system factor as ``U_k (x) 1_B``.
One cycle of length ``T_c = |G| dt`` has propagator

    U(T_c) = prod_{k=0}^{|G|-1} U_k^dag exp(-i H dt) U_k

with the factors multiplied left to right in ascending ``k``. The effective
Hamiltonian estimate uses the sign convention ``U(T_c) = exp(-i H_eff T_c)``,
i.e. ``H_eff = (i / T_c) Log U(T_c)``, so that it tends to the group average
``sum_k w_k U_k^dag H U_k`` as ``dt -> 0``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np
from scipy import linalg as sla

from .errors import BranchAmbiguityError, ShapeError, ValidityError
from .su_algebra import NUMERIC_TOL, SystemHamiltonian, project_traceless
from .symmetrizer import PulseSet, conjugation_average

__all__ = ['CyclePropagator', 'EffectiveHamiltonianEstimate', 'ScanPoint',
           'free_propagator', 'cycle_propagator',
           'extract_effective_hamiltonian', 'convergence_scan',
           'decompose_system_bath', 'SIGN_CONVENTION']

SIGN_CONVENTION = 'U(T_c) = exp(-i H_eff T_c), H_eff = (i/T_c) Log U(T_c)'


def _as_matrix(H) -> np.ndarray:
    if isinstance(H, SystemHamiltonian):
        H = H.full_matrix()
    H = np.asarray(H, dtype=complex)
    if H.ndim != 2 or H.shape[0] != H.shape[1]:
        raise ShapeError(f'Hamiltonian must be square, got {H.shape}')
    if np.abs(H - H.conj().T).max() > NUMERIC_TOL:
        raise ValidityError('Hamiltonian is not Hermitian')
    return H


def free_propagator(H_total, t: float) -> np.ndarray:
    """``exp(-i H t)`` via the eigendecomposition of the Hermitian ``H``."""
    H = _as_matrix(H_total)
    if t < 0:
        raise ValueError('evolution time must be nonnegative')
    evals, evecs = np.linalg.eigh(H)
    return (evecs*np.exp(-1j*evals*t)) @ evecs.conj().T


@dataclass(frozen=True, eq=False)
class CyclePropagator:
    matrix: np.ndarray
    delta_t: float
    n_pulses: int
    n_system: int

    @property
    def cycle_time(self) -> float:
        return self.n_pulses*self.delta_t

    @property
    def dimension(self) -> int:
        return self.matrix.shape[0]

    @property
    def bath_dimension(self) -> int:
        return self.dimension//self.n_system


def _embedded(pulses: PulseSet, dim: int) -> list[np.ndarray]:
    if dim % pulses.n:
        raise ShapeError(f'pulses of dimension {pulses.n} do not divide the '
                         f'total dimension {dim}')
    eye = np.eye(dim//pulses.n)
    return [np.kron(u, eye) for u in pulses.unitaries]


def cycle_propagator(H_total, pulses: PulseSet,
                     delta_t: float) -> CyclePropagator:
    """Exact propagator of one cycle with free evolution ``delta_t`` per pulse.

    The identity component of ``H_total`` is removed first; it only adds a
    global phase.
    """
    if delta_t <= 0:
        raise ValueError('delta_t must be positive')
    if not pulses.uniform:
        raise ValidityError('finite-interval cycles need uniform weights')
    H = project_traceless(_as_matrix(H_total))
    U0 = free_propagator(H, delta_t)
    out = np.eye(len(H), dtype=complex)
    for g in _embedded(pulses, len(H)):
        out = out @ (g.conj().T @ U0 @ g)
    return CyclePropagator(out, float(delta_t), len(pulses), pulses.n)


def decompose_system_bath(X, n_system: int) -> dict:
    """
    Split an operator on system (x) bath into identity, bath-only
    (``1 (x) B``), system-only (``S (x) 1``) and interaction parts.
    """
    X = np.asarray(X, dtype=complex)
    n = n_system
    d = X.shape[0]//n
    T = X.reshape(n, d, n, d)
    bath_red = np.einsum('iaib->ab', T)/n
    sys_red = np.einsum('iaja->ij', T)/d
    ident = np.trace(X)/(n*d)*np.eye(n*d)
    bath_only = np.kron(np.eye(n), bath_red) - ident
    system_only = np.kron(sys_red, np.eye(d)) - ident
    interaction = X - ident - bath_only - system_only
    return {'identity': ident, 'bath_only': bath_only,
            'system_only': system_only, 'interaction': interaction}


def _norm(X) -> float:
    # Euclidean coefficient norm in a Pauli-like basis with M = dim
    return float(np.linalg.norm(X)/np.sqrt(X.shape[0]))


@dataclass(frozen=True, eq=False)
class EffectiveHamiltonianEstimate:
    matrix: np.ndarray
    cycle_time: float
    n_system: int

    @property
    def components(self) -> dict:
        return decompose_system_bath(self.matrix, self.n_system)

    @property
    def norms(self) -> dict:
        return {k: _norm(v) for k, v in self.components.items()
                if k != 'identity'}

    def propagator(self) -> np.ndarray:
        return free_propagator(self.matrix, self.cycle_time)


def extract_effective_hamiltonian(P: CyclePropagator,
                                  branch_tol: float = 1e-6
                                  ) -> EffectiveHamiltonianEstimate:
    """
    Principal-logarithm estimate ``(i/T_c) Log U(T_c)``, Hermitized and with
    its identity part removed.

    Raises
    ------
    BranchAmbiguityError
        An eigenphase lies within ``branch_tol`` of ``+-pi``, where the
        principal logarithm is ill defined. Use a shorter ``delta_t``.
    """
    Tc = P.cycle_time
    if Tc <= 0:
        raise ValueError('cycle time must be positive')
    # complex Schur form of a normal matrix is diagonal
    T, Z = sla.schur(P.matrix, output='complex')
    phases = np.angle(np.diag(T))
    if np.any(np.pi - np.abs(phases) < branch_tol):
        raise BranchAmbiguityError(
            'eigenphase of the cycle propagator at the branch cut +-pi; '
            'reduce delta_t so that |H| T_c < pi')
    H = (Z*(-phases/Tc)) @ Z.conj().T
    H = project_traceless(0.5*(H + H.conj().T))
    return EffectiveHamiltonianEstimate(H, Tc, P.n_system)


@dataclass(frozen=True, eq=False)
class ScanPoint:
    delta_t: float
    residual_interaction_norm: float
    residual_total_norm: float
    estimate: EffectiveHamiltonianEstimate


def convergence_scan(H_total, pulses: PulseSet,
                     delta_ts: Sequence[float],
                     branch_tol: float = 1e-6) -> list[ScanPoint]:
    """
    Distance between the finite-``dt`` effective Hamiltonian and the ideal
    group average for each ``dt``.

    ``residual_interaction_norm`` keeps only components whose system factor
    is not the identity; ``residual_total_norm`` also includes bath-only
    parts.
    """
    delta_ts = [float(dt) for dt in delta_ts]
    if not delta_ts or any(dt <= 0 for dt in delta_ts):
        raise ValueError('delta_t values must be positive')
    if any(b > a for a, b in zip(delta_ts, delta_ts[1:])):
        raise ValueError('delta_t values must be in descending order')
    H = project_traceless(_as_matrix(H_total))
    ideal = conjugation_average(H, pulses)
    points = []
    for dt in delta_ts:
        est = extract_effective_hamiltonian(
            cycle_propagator(H, pulses, dt), branch_tol)
        parts = decompose_system_bath(est.matrix - ideal, pulses.n)
        nontrivial = parts['system_only'] + parts['interaction']
        points.append(ScanPoint(dt, _norm(nontrivial),
                                _norm(est.matrix - ideal), est))
    return points
