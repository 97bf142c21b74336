"""
Geometric analysis of bang-bang (dynamical decoupling) pulse sequences.

System operators are expanded in a trace-orthogonal generator basis, pulses
act on the resulting coordinate vectors as orthogonal rotations, and a pulse
set acts on a Hamiltonian through the average of those rotations.
"""
from .adjoint import (AdjointRotation, AxisAngle, EulerAngles,
                      adjoint_rotation, axis_angle_rotation, euler_rotation,
                      euler_unitary, su2_from_axis_angle)
from .dynamics import (convergence_scan, cycle_propagator,
                       extract_effective_hamiltonian, free_propagator)
from .errors import (BBGeomError, BranchAmbiguityError, BudgetError,
                     ConfigError, InvalidDimensionError, ShapeError,
                     ValidityError)
from .metrics import (error_vector, euclidean_distance, hs_overlap,
                      phase_invariant_trace_distance,
                      short_time_distance_check, unitary_trace_distance)
from .search import (CandidateLibrary, find_pulse_sets, grade_pulse_set,
                     pauli_library)
from .sequences import (cyclic_sequence, parity_kick, tetrahedron_sequence,
                        two_qubit_exchange_example, vierergruppe)
from .su_algebra import (CoefficientVector, GeneratorBasis, HamiltonianTerm,
                         SystemHamiltonian, expand, make_gell_mann_basis,
                         make_pauli_basis, make_pauli_tensor_basis,
                         project_traceless, reconstruct)
from .symmetrizer import (PulseSet, analyze, average_vector,
                          centralizer_check, check_storage, check_target,
                          effective_hamiltonian, little_group_check,
                          verify_group_closure)

__all__ = [
    'AdjointRotation', 'AxisAngle', 'EulerAngles', 'adjoint_rotation',
    'axis_angle_rotation', 'euler_rotation', 'euler_unitary',
    'su2_from_axis_angle', 'convergence_scan', 'cycle_propagator',
    'extract_effective_hamiltonian', 'free_propagator', 'BBGeomError',
    'BranchAmbiguityError', 'BudgetError', 'ConfigError',
    'InvalidDimensionError', 'ShapeError', 'ValidityError', 'error_vector',
    'euclidean_distance', 'hs_overlap', 'phase_invariant_trace_distance',
    'short_time_distance_check', 'unitary_trace_distance', 'CandidateLibrary',
    'find_pulse_sets', 'grade_pulse_set', 'pauli_library', 'cyclic_sequence',
    'parity_kick', 'tetrahedron_sequence', 'two_qubit_exchange_example',
    'vierergruppe', 'CoefficientVector', 'GeneratorBasis', 'HamiltonianTerm',
    'SystemHamiltonian', 'expand', 'make_gell_mann_basis', 'make_pauli_basis',
    'make_pauli_tensor_basis', 'project_traceless', 'reconstruct', 'PulseSet',
    'analyze', 'average_vector', 'centralizer_check', 'check_storage',
    'check_target', 'effective_hamiltonian', 'little_group_check',
    'verify_group_closure',
]

__version__ = '0.1.0'
