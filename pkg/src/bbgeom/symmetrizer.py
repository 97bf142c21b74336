"""
Group averaging of Hamiltonians, in matrix form and in coordinate form,
together with the storage, target, centralizer, closure and little-group
checks used to judge a pulse set.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Optional, Sequence

import numpy as np

from .adjoint import AdjointRotation, adjoint_rotation, is_unitary
from .errors import ShapeError, ValidityError
from .su_algebra import (NUMERIC_TOL, CoefficientVector, GeneratorBasis,
                         SystemHamiltonian, project_traceless)

__all__ = ['PulseSet', 'TermReport', 'DecouplingReport', 'average_vector',
           'effective_hamiltonian', 'check_storage', 'check_target',
           'centralizer_check', 'verify_group_closure', 'little_group_check',
           'same_up_to_phase', 'analyze', 'STORAGE_TOL']

STORAGE_TOL = 1e-9


def same_up_to_phase(A, B, tol: float = NUMERIC_TOL) -> bool:
    """True if ``A = exp(i phi) B`` for some real ``phi``, within ``tol``."""
    A, B = np.asarray(A), np.asarray(B)
    if A.shape != B.shape:
        return False
    overlap = np.trace(B.conj().T @ A)
    phase = overlap/abs(overlap) if abs(overlap) > 1e-14 else 1.0
    return np.linalg.norm(A - phase*B) <= tol


class PulseSet:
    """
    Ordered set of pulse unitaries ``U_0 = 1, U_1, ...`` with weights.

    Parameters
    ----------
    unitaries: sequence of (n, n) arrays
        The first element must be the identity up to a global phase.
    weights: sequence of float, optional
        Positive weights summing to one. Defaults to uniform.
    labels: sequence of str, optional
        Names of the pulses; default ``U0, U1, ...``.
    group_closed: bool or None
        Closure flag; ``None`` means unchecked. See
        :func:`verify_group_closure`.
    """

    def __init__(self, unitaries, weights=None, labels=None,
                 group_closed: Optional[bool] = None, tol: float = NUMERIC_TOL):
        us = np.array([np.asarray(u, dtype=complex) for u in unitaries])
        if us.ndim != 3 or us.shape[0] == 0 or us.shape[1] != us.shape[2]:
            raise ShapeError('pulse set needs a nonempty list of square '
                             'matrices of equal size')
        for k, u in enumerate(us):
            if not is_unitary(u, tol):
                raise ValidityError(f'pulse {k} is not unitary')
        if not same_up_to_phase(us[0], np.eye(us.shape[1]), tol):
            raise ValidityError('first pulse U_0 must be the identity')
        if weights is None:
            weights = np.full(len(us), 1/len(us))
        weights = np.asarray(weights, dtype=float)
        if weights.shape != (len(us),):
            raise ShapeError('one weight per pulse is required')
        if np.any(weights <= 0) or abs(weights.sum() - 1) > tol:
            raise ValidityError('weights must be positive and sum to one')
        if labels is None:
            labels = [f'U{k}' for k in range(len(us))]
        if len(labels) != len(us):
            raise ShapeError('one label per pulse is required')
        us.setflags(write=False)
        weights.setflags(write=False)
        self.unitaries = us
        self.weights = weights
        self.labels = tuple(labels)
        self.group_closed = group_closed

    @classmethod
    def with_identity(cls, unitaries, labels=None, **kwargs) -> 'PulseSet':
        """Prepend the identity unless the first pulse already is one."""
        unitaries = [np.asarray(u, dtype=complex) for u in unitaries]
        n = unitaries[0].shape[0]
        if not same_up_to_phase(unitaries[0], np.eye(n)):
            unitaries = [np.eye(n, dtype=complex)] + unitaries
            if labels is not None:
                labels = ['I'] + list(labels)
        return cls(unitaries, labels=labels, **kwargs)

    @property
    def n(self) -> int:
        return self.unitaries.shape[1]

    def __len__(self):
        return len(self.unitaries)

    def __iter__(self):
        return iter(self.unitaries)

    def __getitem__(self, k):
        return self.unitaries[k]

    @property
    def uniform(self) -> bool:
        return bool(np.allclose(self.weights, 1/len(self)))

    def rotations(self, basis: GeneratorBasis) -> list[AdjointRotation]:
        return [adjoint_rotation(u, basis) for u in self.unitaries]

    def __repr__(self):
        return (f'PulseSet(labels={list(self.labels)}, n={self.n}, '
                f'group_closed={self.group_closed})')


def _rotation_matrix(R, N):
    M = np.asarray(R, dtype=float)
    if M.shape != (N, N):
        raise ShapeError(f'rotation of shape {M.shape} for vectors of length {N}')
    return M


def average_vector(a: CoefficientVector, rotations: Sequence,
                   weights=None) -> CoefficientVector:
    """
    Weighted average ``sum_k w_k R_k a`` of rotated coordinate vectors.

    ``rotations`` may be :class:`AdjointRotation` objects or plain arrays.
    """
    if len(rotations) == 0:
        raise ShapeError('at least one rotation is required')
    if weights is None:
        weights = np.full(len(rotations), 1/len(rotations))
    weights = np.asarray(weights, dtype=float)
    if weights.shape != (len(rotations),):
        raise ShapeError('one weight per rotation is required')
    if abs(weights.sum() - 1) > NUMERIC_TOL:
        raise ValidityError('weights must sum to one')
    for R in rotations:
        basis = getattr(R, 'basis', None)
        if basis is not None and not basis.compatible(a.basis):
            raise ShapeError('rotation and vector belong to different bases')
    stack = np.array([_rotation_matrix(R, len(a)) for R in rotations])
    avg = np.einsum('k,kij,j->i', weights, stack, a.components)
    return a.with_components(avg)


def conjugation_average(S, pulses: PulseSet) -> np.ndarray:
    """``sum_k w_k U_k^dagger S U_k`` for a system (or system (x) bath) matrix."""
    S = np.asarray(S, dtype=complex)
    n = pulses.n
    if S.shape[0] % n or S.shape[0] != S.shape[1]:
        raise ShapeError(f'operator of shape {S.shape} incompatible with '
                         f'pulses of dimension {n}')
    d = S.shape[0]//n
    out = np.zeros_like(S)
    for w, u in zip(pulses.weights, pulses.unitaries):
        U = np.kron(u, np.eye(d)) if d > 1 else u
        out += w*(U.conj().T @ S @ U)
    return out


def effective_hamiltonian(H: SystemHamiltonian,
                          pulses: PulseSet) -> SystemHamiltonian:
    """
    Termwise average ``S_g -> sum_k w_k U_k^dagger S_g U_k``; bath parts are
    left untouched.
    """
    if H.n != pulses.n:
        raise ShapeError(f'pulses act on dimension {pulses.n}, Hamiltonian '
                         f'on {H.n}')
    return SystemHamiltonian(tuple(
        t.with_system(project_traceless(conjugation_average(t.system, pulses)))
        for t in H.terms))


def check_storage(averaged: Sequence, tol: float = STORAGE_TOL) -> bool:
    """True iff every averaged vector has Euclidean norm ``<= tol``."""
    return all(np.linalg.norm(np.asarray(a)) <= tol for a in averaged)


def check_target(averaged: CoefficientVector, target: CoefficientVector,
                 tol: float = STORAGE_TOL) -> bool:
    """True iff ``|averaged - target| <= tol``."""
    if not averaged.basis.compatible(target.basis):
        raise ShapeError('averaged and target vectors use different bases')
    return bool(np.linalg.norm(averaged.components - target.components) <= tol)


def centralizer_check(X, pulses: PulseSet, tol: float = NUMERIC_TOL) -> bool:
    """True iff ``X`` commutes with every pulse within ``tol``."""
    X = np.asarray(X, dtype=complex)
    if X.shape != (pulses.n, pulses.n):
        raise ShapeError(f'operator of shape {X.shape} for pulses of '
                         f'dimension {pulses.n}')
    return all(np.linalg.norm(X @ g - g @ X) <= tol for g in pulses.unitaries)


def _find(target, unitaries, tol):
    return any(same_up_to_phase(target, u, tol) for u in unitaries)


def verify_group_closure(pulses: PulseSet, tol: float = NUMERIC_TOL) -> bool:
    """
    Check that the pulses form a group up to global phases: every product
    ``U_j U_k`` and every inverse ``U_j^dagger`` matches some ``U_m`` times
    a phase. Sets ``pulses.group_closed`` as a side effect.
    """
    us = pulses.unitaries
    closed = (all(_find(u.conj().T, us, tol) for u in us)
              and all(_find(a @ b, us, tol) for a in us for b in us))
    pulses.group_closed = closed
    return closed


def little_group_check(R, v, tol: float = NUMERIC_TOL) -> bool:
    """True iff the rotation leaves ``v`` fixed: ``|R v - v| <= tol``."""
    v = np.asarray(v, dtype=float)
    M = _rotation_matrix(R, len(v))
    return bool(np.linalg.norm(M @ v - v) <= tol)


@dataclass
class TermReport:
    label: str
    wanted: bool
    original: CoefficientVector
    averaged: CoefficientVector
    target: CoefficientVector
    rotated: list
    in_centralizer: bool

    @property
    def error(self) -> np.ndarray:
        return self.averaged.components - self.target.components

    @property
    def distance(self) -> float:
        return float(np.linalg.norm(self.error))

    @property
    def overlap(self) -> float:
        """Hilbert-Schmidt overlap ``Tr(A' A^t) = M a'.a^t``."""
        M = self.averaged.basis.normalization
        return float(M*np.dot(self.averaged.components, self.target.components))


@dataclass
class DecouplingReport:
    """Coordinate-level outcome of applying a pulse set to a Hamiltonian."""
    basis: GeneratorBasis
    pulses: PulseSet
    rotations: list
    terms: list = field(default_factory=list)
    tol: float = STORAGE_TOL

    @property
    def storage_achieved(self) -> bool:
        return check_storage([t.averaged for t in self.terms], self.tol)

    @property
    def max_distance(self) -> float:
        return max((t.distance for t in self.terms), default=0.0)

    @property
    def target_achieved(self) -> bool:
        return self.max_distance <= self.tol

    def __getitem__(self, label) -> TermReport:
        for t in self.terms:
            if t.label == label:
                return t
        raise KeyError(label)


def default_targets(H: SystemHamiltonian, basis: GeneratorBasis,
                    targets: Optional[Mapping] = None) -> list[CoefficientVector]:
    """Zero for error terms and the original vector for wanted terms,
    overridden per label by ``targets``."""
    targets = dict(targets or {})
    out = []
    for t, a in zip(H.terms, H.vectors(basis)):
        if t.label in targets:
            tgt = targets.pop(t.label)
            comps = tgt.components if isinstance(tgt, CoefficientVector) else tgt
            out.append(a.with_components(np.asarray(comps, dtype=float)))
        elif t.wanted:
            out.append(a)
        else:
            out.append(a.with_components(np.zeros(basis.N)))
    if targets:
        raise ShapeError(f'targets given for unknown terms {sorted(targets)}')
    return out


def analyze(H: SystemHamiltonian, pulses: PulseSet, basis: GeneratorBasis,
            targets: Optional[Mapping] = None,
            tol: float = STORAGE_TOL) -> DecouplingReport:
    """Run the coordinate pipeline and collect a :class:`DecouplingReport`."""
    if H.n != basis.n or pulses.n != basis.n:
        raise ShapeError(f'dimension mismatch: Hamiltonian {H.n}, pulses '
                         f'{pulses.n}, basis {basis.n}')
    if pulses.group_closed is None:
        verify_group_closure(pulses)
    rotations = pulses.rotations(basis)
    report = DecouplingReport(basis, pulses, rotations, tol=tol)
    for term, a, tgt in zip(H.terms, H.vectors(basis),
                            default_targets(H, basis, targets)):
        averaged = average_vector(a, rotations, pulses.weights)
        report.terms.append(TermReport(
            label=term.label, wanted=term.wanted, original=a,
            averaged=averaged, target=tgt,
            rotated=[R.apply(a) for R in rotations],
            in_centralizer=centralizer_check(term.system, pulses)))
    return report
