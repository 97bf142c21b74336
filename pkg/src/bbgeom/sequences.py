"""
Catalog of worked pulse sets.

Every entry stores unitaries, so it can drive both the coordinate-level
averaging and the finite-interval dynamics. Rotations quoted in the notes
use :func:`~bbgeom.adjoint.axis_angle_rotation`; the pulse realizing
``axis_angle_rotation(p)`` is ``su2_from_axis_angle(p)^dagger``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .adjoint import AxisAngle, axis_angle_rotation, su2_from_axis_angle
from .errors import ShapeError, ValidityError
from .su_algebra import (PAULI, CoefficientVector, GeneratorBasis,
                         SystemHamiltonian, make_pauli_basis,
                         make_pauli_tensor_basis, reconstruct)
from .symmetrizer import PulseSet, verify_group_closure

__all__ = ['NamedSequence', 'parity_kick', 'cyclic_sequence', 'vierergruppe',
           'tetrahedron_sequence', 'two_qubit_exchange_example',
           'pulse_for_rotation', 'TETRAHEDRAL_ANGLE', 'CATALOG',
           'load_sequence', 'catalog_listing']

TETRAHEDRAL_ANGLE = float(np.arccos(-1/3))

I2, SX, SY, SZ = PAULI


@dataclass(frozen=True, eq=False)
class NamedSequence:
    name: str
    pulses: PulseSet
    basis: GeneratorBasis
    action: str
    note: str
    rotations: Optional[list] = None

    @property
    def group_closed(self) -> bool:
        if self.pulses.group_closed is None:
            verify_group_closure(self.pulses)
        return self.pulses.group_closed


def pulse_for_rotation(p: AxisAngle) -> np.ndarray:
    """Single-qubit unitary whose adjoint rotation is ``axis_angle_rotation(p)``."""
    return su2_from_axis_angle(p).conj().T


def _wrap(angle: float) -> float:
    # map to (-pi, pi] so that e.g. the C3 pulses come out as exp(-+i s1 pi/3)
    a = float(np.mod(angle + np.pi, 2*np.pi) - np.pi)
    return np.pi if np.isclose(a, -np.pi) else a


def parity_kick() -> NamedSequence:
    """``{1, -i sigma_x}``: the kick maps ``(a1, a2, a3)`` to ``(a1, -a2, -a3)``,
    so averaging keeps only the sigma_x component."""
    pulses = PulseSet([I2, -1j*SX], labels=['I', '-iX'])
    return NamedSequence('parity-kick', pulses, make_pauli_basis(), 'storage',
                         'C2 parity kick; annihilates pure dephasing (0, 0, g)')


def cyclic_sequence(order: int, axis=(1, 0, 0)) -> NamedSequence:
    """
    ``order`` pulses with adjoint rotations ``R_axis(2 pi k / order)``.

    Averages away every vector orthogonal to ``axis`` and leaves the axis
    component unchanged.
    """
    if int(order) != order or order < 2:
        raise ValidityError(f'cyclic order must be an integer >= 2, got {order}')
    order = int(order)
    params = [AxisAngle(axis, _wrap(2*np.pi*k/order)) for k in range(order)]
    unitaries = [pulse_for_rotation(p) for p in params]
    unitaries[0] = np.eye(2, dtype=complex)
    pulses = PulseSet(unitaries, labels=[f'R{k}' for k in range(order)])
    return NamedSequence(f'c{order}', pulses, make_pauli_basis(),
                         'storage of components orthogonal to the axis',
                         f'cyclic group C{order} about axis {tuple(params[0].axis)}',
                         [axis_angle_rotation(p) for p in params])


def vierergruppe() -> NamedSequence:
    """pi rotations about x, y and z plus the identity; decouples any qubit term."""
    pulses = PulseSet([I2, -1j*SX, -1j*SY, -1j*SZ],
                      labels=['I', '-iX', '-iY', '-iZ'])
    return NamedSequence('vierergruppe', pulses, make_pauli_basis(), 'storage',
                         'Klein four-group of pi rotations; full single-qubit '
                         'decoupling')


def _first_axis(direction: np.ndarray) -> np.ndarray:
    if np.allclose(direction, [0, 0, 1]) or np.allclose(direction, [0, 0, -1]):
        return np.array([0.0, 1.0, 0.0])
    perp = np.eye(3) - np.outer(direction, direction)
    # coordinate axis with the largest component orthogonal to the vector;
    # argmax returns the smallest index on ties
    best = int(np.argmax(np.linalg.norm(perp, axis=0).round(12)))
    axis = perp[:, best]
    return axis/np.linalg.norm(axis)


def tetrahedron_sequence(initial) -> NamedSequence:
    """
    Four pulses taking ``initial`` to the vertices of a regular tetrahedron.

    The rotations are ``1, R_y(theta), R_a2(2pi/3), R_a2(-2pi/3)`` with
    ``theta = arccos(-1/3)`` and ``a2`` the direction of the second vertex
    ``R_y(theta) initial``. For initial vectors not along z the first axis is
    replaced by a deterministic unit vector orthogonal to ``initial``. The set
    is not a group.
    """
    v = np.asarray(initial, dtype=float)
    if v.shape != (3,):
        raise ShapeError('tetrahedron construction needs a 3-component vector')
    if np.linalg.norm(v) < 1e-12:
        raise ValidityError('initial vector must be nonzero')
    direction = v/np.linalg.norm(v)
    first = AxisAngle(_first_axis(direction), TETRAHEDRAL_ANGLE)
    a2 = axis_angle_rotation(first).matrix @ v
    params = [AxisAngle(a2, 2*np.pi/3), AxisAngle(a2, -2*np.pi/3)]
    unitaries = [I2, pulse_for_rotation(first)] + [pulse_for_rotation(p)
                                                  for p in params]
    rotations = [np.eye(3)] + [axis_angle_rotation(p).matrix
                               for p in [first] + params]
    pulses = PulseSet(unitaries, labels=['I', 'Ry(theta)', 'Ra2(+2pi/3)',
                                         'Ra2(-2pi/3)'])
    return NamedSequence('tetrahedron', pulses, make_pauli_basis(), 'storage',
                         'non-subgroup tetrahedral averaging', rotations)


def two_qubit_exchange_example(J: float = 1.0, g: float = 1.0, bath=None
                               ) -> tuple[SystemHamiltonian, NamedSequence]:
    """
    Heisenberg exchange ``J(XX + YY + ZZ)`` (wanted) with collective
    dephasing ``g(ZI + IZ) (x) B`` (error), and the kick ``{1, -XX}``.

    ``bath`` defaults to sigma_z on a two-level bath.
    """
    basis = make_pauli_tensor_basis(2)
    v1 = np.zeros(15)
    v1[[6, 10, 14]] = J
    v2 = np.zeros(15)
    v2[[2, 5]] = g
    B = SZ if bath is None else bath
    H = SystemHamiltonian.from_terms(
        (reconstruct(v1, basis), None, 'H_ex', True),
        (reconstruct(v2, basis), B, 'H_I', False))
    pulses = PulseSet([np.eye(4), -np.kron(SX, SX)], labels=['II', '-XX'])
    seq = NamedSequence('two-qubit-exchange', pulses, basis,
                        'preserve H_ex, annihilate H_I',
                        'parity kick inside the little group of the exchange '
                        'vector')
    return H, seq


def _tetrahedron_default():
    return tetrahedron_sequence((0, 0, 1))


CATALOG: dict[str, Callable[[], NamedSequence]] = {
    'parity-kick': parity_kick,
    'c3': lambda: cyclic_sequence(3),
    'c4': lambda: cyclic_sequence(4),
    'vierergruppe': vierergruppe,
    'tetrahedron': _tetrahedron_default,
    'two-qubit-exchange': lambda: two_qubit_exchange_example()[1],
}


def load_sequence(name: str, axis=None, initial=None) -> NamedSequence:
    """Resolve a catalog name, passing ``axis`` to cyclic sequences and
    ``initial`` to the tetrahedron."""
    key = name.lower()
    if key not in CATALOG:
        raise KeyError(f'unknown sequence {name!r}; choose from '
                       f'{", ".join(CATALOG)}')
    if key in ('c3', 'c4') and axis is not None:
        return cyclic_sequence(int(key[1:]), axis)
    if key == 'tetrahedron' and initial is not None:
        comps = initial.components if isinstance(initial, CoefficientVector) \
            else initial
        return tetrahedron_sequence(comps)
    return CATALOG[key]()


def catalog_listing() -> list[dict]:
    """Stable description of all catalog entries."""
    rows = []
    for name in CATALOG:
        seq = load_sequence(name)
        rows.append({'name': name, 'size': len(seq.pulses),
                     'dimension': seq.pulses.n, 'basis': seq.basis.name,
                     'group_closed': seq.group_closed, 'action': seq.action,
                     'note': seq.note})
    return rows
