"""
Exhaustive search for pulse sets that reach a target effective Hamiltonian.

Subsets always contain the identity as ``U_0``; the remaining pulses are
drawn from a labelled candidate library. Subsets are enumerated by size and
then in lexicographic label order, averaged with uniform weights and graded
by ``d_max = max_g |a'_g - a^t_g|``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb
from typing import Mapping, Optional, Sequence

import numpy as np

from .adjoint import AxisAngle, adjoint_rotation, is_unitary
from .errors import BudgetError, ConfigError, ShapeError
from .sequences import pulse_for_rotation
from .su_algebra import (GeneratorBasis, SystemHamiltonian, make_basis,
                         make_pauli_basis, pauli_string)
from .symmetrizer import (PulseSet, average_vector, default_targets,
                          same_up_to_phase, verify_group_closure)

__all__ = ['CandidateLibrary', 'SearchResult', 'pauli_library',
           'axis_angle_library', 'find_pulse_sets', 'grade_pulse_set',
           'DEFAULT_BUDGET']

DEFAULT_BUDGET = 10**6
_CHUNK = 20000


@dataclass(frozen=True, eq=False)
class CandidateLibrary:
    labels: tuple
    unitaries: np.ndarray
    basis: GeneratorBasis

    def __post_init__(self):
        us = np.array([np.asarray(u, dtype=complex) for u in self.unitaries])
        labels = tuple(self.labels)
        if len(labels) != len(us):
            raise ShapeError('one label per candidate is required')
        if len(set(labels)) != len(labels):
            raise ConfigError('candidate labels must be unique')
        if len(us) and us.shape[1:] != (self.basis.n, self.basis.n):
            raise ShapeError(f'candidates of shape {us.shape[1:]} for basis '
                             f'dimension {self.basis.n}')
        for lab, u in zip(labels, us):
            if not is_unitary(u):
                raise ConfigError(f'candidate {lab!r} is not unitary')
        object.__setattr__(self, 'labels', labels)
        object.__setattr__(self, 'unitaries', us)

    def __len__(self):
        return len(self.labels)


def pauli_library(q: int = 1, basis: Optional[GeneratorBasis] = None
                  ) -> CandidateLibrary:
    """All ``4**q`` Pauli strings (identity included), labelled ``'IXZ'`` etc."""
    idx = list(itertools.product(range(4), repeat=q))
    labels = [''.join('IXYZ'[i] for i in t) for t in idx]
    us = [pauli_string(t) for t in idx]
    basis = basis or make_basis('pauli' if q == 1 else 'pauli-tensor', 2**q)
    return CandidateLibrary(tuple(labels), np.array(us), basis)


def axis_angle_library(axes: Mapping[str, Sequence[float]],
                       angles: Sequence[float]) -> CandidateLibrary:
    """Single-qubit pulses for every named axis and every angle on a grid."""
    labels, us = [], []
    for name, axis in axes.items():
        for ang in angles:
            labels.append(f'R{name}({ang:.6g})')
            us.append(pulse_for_rotation(AxisAngle(axis, ang)))
    return CandidateLibrary(tuple(labels), np.array(us), make_pauli_basis())


@dataclass(frozen=True, eq=False)
class SearchResult:
    labels: tuple
    pulses: PulseSet
    averaged: list
    targets: list
    d_max: float

    @property
    def size(self) -> int:
        return len(self.labels)

    @property
    def group_closed(self) -> bool:
        if self.pulses.group_closed is None:
            verify_group_closure(self.pulses)
        return self.pulses.group_closed

    def recompute_d_max(self) -> float:
        return max(float(np.linalg.norm(a.components - t.components))
                   for a, t in zip(self.averaged, self.targets))


def _targets(H, basis, targets):
    if targets is None or isinstance(targets, Mapping):
        return default_targets(H, basis, targets)
    targets = list(targets)
    if len(targets) != len(H):
        raise ShapeError('one target per Hamiltonian term is required')
    vecs = H.vectors(basis)
    return [a.with_components(np.asarray(t, dtype=float))
            for a, t in zip(vecs, targets)]


def grade_pulse_set(H: SystemHamiltonian, targets, pulses: PulseSet,
                    basis: Optional[GeneratorBasis] = None,
                    labels: Optional[Sequence[str]] = None) -> SearchResult:
    """Average every term over ``pulses`` and report the worst distance."""
    basis = basis or make_basis('pauli' if H.n == 2 else 'gell-mann', H.n)
    if pulses.n != H.n or basis.n != H.n:
        raise ShapeError(f'dimension mismatch: Hamiltonian {H.n}, pulses '
                         f'{pulses.n}, basis {basis.n}')
    tgts = _targets(H, basis, targets)
    rotations = pulses.rotations(basis)
    averaged = [average_vector(a, rotations, pulses.weights)
                for a in H.vectors(basis)]
    d_max = max(float(np.linalg.norm(a.components - t.components))
                for a, t in zip(averaged, tgts))
    return SearchResult(tuple(labels or pulses.labels), pulses, averaged,
                        tgts, d_max)


def find_pulse_sets(H: SystemHamiltonian, targets, library: CandidateLibrary,
                    max_size: int, tol: float = 1e-9,
                    budget: int = DEFAULT_BUDGET,
                    top_k: int = 5) -> list[SearchResult]:
    """
    Enumerate identity-containing subsets of size ``<= max_size``.

    Returns every subset with ``d_max <= tol`` sorted by ``(size, d_max,
    labels)``. When none qualifies, the ``top_k`` subsets with the smallest
    ``d_max`` are returned instead.

    Raises
    ------
    ConfigError
        Empty library or ``max_size < 1``.
    BudgetError
        More than ``budget`` subsets would be enumerated.
    """
    if len(library) == 0:
        raise ConfigError('candidate library is empty')
    if max_size < 1:
        raise ConfigError('max_size must be at least 1')
    basis = library.basis
    if H.n != basis.n:
        raise ShapeError(f'library acts on dimension {basis.n}, Hamiltonian '
                         f'on {H.n}')
    eye = np.eye(basis.n)
    pool = sorted((lab, u) for lab, u in zip(library.labels, library.unitaries)
                  if not same_up_to_phase(u, eye))
    id_label = next((lab for lab, u in zip(library.labels, library.unitaries)
                     if same_up_to_phase(u, eye)), 'I')
    total = sum(comb(len(pool), s) for s in range(max_size))
    if total > budget:
        raise BudgetError(f'{total} subsets exceed the search budget of '
                          f'{budget}')

    tgts = _targets(H, basis, targets)
    vecs = H.vectors(basis)
    A = np.array([v.components for v in vecs]).T            # (N, terms)
    T = np.array([t.components for t in tgts]).T
    rot = np.array([adjoint_rotation(u, basis).matrix @ A for _, u in pool])

    scored = []                                             # (size, d, combo)
    for extra in range(max_size):
        combos = itertools.combinations(range(len(pool)), extra)
        while True:
            items = list(itertools.islice(combos, _CHUNK))
            if not items:
                break
            chunk = np.array(items, dtype=int).reshape(len(items), extra)
            summed = A + rot[chunk].sum(axis=1) if extra else A[None]
            avg = summed/(extra + 1)
            d = np.linalg.norm(avg - T, axis=1).max(axis=1)
            scored.extend(zip(itertools.repeat(extra + 1), d.tolist(),
                              map(tuple, chunk.tolist())))

    feasible = [s for s in scored if s[1] <= tol]
    if feasible:
        chosen = sorted(feasible, key=lambda s: (s[0], s[1], s[2]))
    else:
        chosen = sorted(scored, key=lambda s: (s[1], s[0], s[2]))[:top_k]

    results = []
    for _, _, combo in chosen:
        labels = [id_label] + [pool[i][0] for i in combo]
        pulses = PulseSet([eye] + [pool[i][1] for i in combo], labels=labels)
        results.append(grade_pulse_set(
            H, [t.components for t in tgts], pulses, basis))
    return results
