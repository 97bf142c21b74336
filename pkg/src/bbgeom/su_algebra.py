"""
Generator bases of the traceless Hermitian matrices and the coordinate
representation of system operators.

A :class:`GeneratorBasis` holds ``N = n**2 - 1`` traceless Hermitian
matrices ``lambda_i`` with ``Tr(lambda_i lambda_j) = M delta_ij``. Any
traceless Hermitian ``S`` is then ``sum_i a_i lambda_i`` with real
coordinates ``a_i = Tr(lambda_i S) / M``.

Functions
---------
:func:`make_pauli_basis`
    The three Pauli matrices, ``M = 2``.
:func:`make_gell_mann_basis`
    Generalized Gell-Mann matrices for any ``n >= 2``, ``M = 2``.
:func:`make_pauli_tensor_basis`
    Non-identity q-fold Pauli products, ``M = 2**q``.
:func:`expand`, :func:`reconstruct`
    Matrix <-> coordinate conversion.
:func:`project_traceless`
    Remove the identity component of a square matrix.
"""
from __future__ import annotations

import itertools
import warnings
from dataclasses import dataclass, field
from typing import Optional, Sequence, Union

import numpy as np

from .errors import InvalidDimensionError, ShapeError, ValidityError

__all__ = ['GeneratorBasis', 'CoefficientVector', 'HamiltonianTerm',
           'SystemHamiltonian', 'IdentityComponentWarning', 'PAULI',
           'make_pauli_basis', 'make_gell_mann_basis',
           'make_pauli_tensor_basis', 'make_basis', 'expand', 'reconstruct',
           'project_traceless', 'EXACT_TOL', 'NUMERIC_TOL']

#: tolerance for analytically exact constructions
EXACT_TOL = 1e-12
#: tolerance for derived numerical comparisons
NUMERIC_TOL = 1e-9

# identity, sigma_x, sigma_y, sigma_z
PAULI = np.array([[[1, 0], [0, 1]],
                  [[0, 1], [1, 0]],
                  [[0, -1j], [1j, 0]],
                  [[1, 0], [0, -1]]], dtype=complex)


class IdentityComponentWarning(UserWarning):
    """Emitted when a non-traceless operator has its identity part dropped."""


@dataclass(frozen=True, eq=False)
class GeneratorBasis:
    """
    Ordered trace-orthogonal basis of the traceless Hermitian n x n matrices.

    Parameters
    ----------
    elements: ndarray, shape (N, n, n)
        The generators ``lambda_1 .. lambda_N``.
    normalization: float
        The constant ``M`` in ``Tr(lambda_i lambda_j) = M delta_ij``.
    name: str
        Tag such as ``'pauli'``, ``'gell-mann'`` or ``'pauli-tensor'``.
    labels: tuple of str, optional
        Human readable element labels, e.g. ``'XZ'`` for sigma_x (x) sigma_z.
    """
    elements: np.ndarray
    normalization: float
    name: str
    labels: tuple = ()
    check: bool = field(default=True, repr=False)

    def __post_init__(self):
        elements = np.asarray(self.elements, dtype=complex)
        elements.setflags(write=False)
        object.__setattr__(self, 'elements', elements)
        if elements.ndim != 3 or elements.shape[1] != elements.shape[2]:
            raise ShapeError('basis elements must have shape (N, n, n)')
        n = elements.shape[1]
        if n < 2:
            raise InvalidDimensionError(f'dimension must be >= 2, got {n}')
        if elements.shape[0] != n**2 - 1:
            raise ShapeError(f'expected {n**2 - 1} generators for n={n}, '
                             f'got {elements.shape[0]}')
        if not self.labels:
            labels = tuple(f'lambda_{i + 1}' for i in range(len(elements)))
            object.__setattr__(self, 'labels', labels)
        if self.check:
            self.validate()

    @property
    def n(self) -> int:
        """Hilbert space dimension."""
        return self.elements.shape[1]

    @property
    def N(self) -> int:
        """Number of generators, ``n**2 - 1``."""
        return self.elements.shape[0]

    def __len__(self):
        return self.N

    def __getitem__(self, i):
        return self.elements[i]

    def gram(self) -> np.ndarray:
        """Matrix of traces ``Tr(lambda_i lambda_j)``."""
        return np.einsum('iab,jba->ij', self.elements, self.elements)

    def validate(self, tol: float = EXACT_TOL) -> None:
        """Raise :class:`ValidityError` unless all basis invariants hold."""
        el = self.elements
        if np.abs(el - el.conj().transpose(0, 2, 1)).max() > tol:
            raise ValidityError(f'{self.name} basis is not Hermitian')
        if np.abs(np.trace(el, axis1=1, axis2=2)).max() > tol:
            raise ValidityError(f'{self.name} basis is not traceless')
        gram = self.gram()
        deviation = np.abs(gram - self.normalization*np.eye(self.N)).max()
        if deviation > tol:
            raise ValidityError(f'{self.name} basis violates trace-'
                                f'orthogonality by {deviation:.3g}')

    def compatible(self, other: 'GeneratorBasis') -> bool:
        if other is self:
            return True
        return (self.name == other.name and self.n == other.n
                and np.allclose(self.elements, other.elements))

    def __repr__(self):
        return (f'GeneratorBasis(name={self.name!r}, n={self.n}, '
                f'N={self.N}, M={self.normalization})')


@dataclass(frozen=True, eq=False)
class CoefficientVector:
    """Real coordinates of a traceless Hermitian operator in ``basis``."""
    components: np.ndarray
    basis: GeneratorBasis
    label: Optional[str] = None

    def __post_init__(self):
        comps = np.array(self.components, dtype=complex if
                         np.iscomplexobj(self.components) else float)
        if comps.shape != (self.basis.N,):
            raise ShapeError(f'coefficient vector needs {self.basis.N} '
                             f'components, got shape {comps.shape}')
        comps.setflags(write=False)
        object.__setattr__(self, 'components', comps)

    def __array__(self, dtype=None, copy=None):
        return np.asarray(self.components, dtype=dtype)

    def __len__(self):
        return len(self.components)

    def __iter__(self):
        return iter(self.components)

    def __getitem__(self, i):
        return self.components[i]

    def norm(self) -> float:
        return float(np.linalg.norm(self.components))

    def with_components(self, components, label=None) -> 'CoefficientVector':
        return CoefficientVector(components, self.basis,
                                 self.label if label is None else label)

    def __repr__(self):
        tag = f', label={self.label!r}' if self.label else ''
        return (f'CoefficientVector({np.array2string(self.components, precision=6)}'
                f', basis={self.basis.name!r}{tag})')


def make_pauli_basis() -> GeneratorBasis:
    """Pauli basis ``(sigma_x, sigma_y, sigma_z)`` with ``M = 2``."""
    return GeneratorBasis(PAULI[1:], 2.0, 'pauli', labels=('X', 'Y', 'Z'))


def _gell_mann_elements(n: int) -> tuple[list, list]:
    # Ordered like the standard SU(3) set: for each k the symmetric and
    # antisymmetric pairs (j, k), j < k, then the k-th diagonal element.
    elements, labels = [], []
    for k in range(1, n):
        for j in range(k):
            sym = np.zeros((n, n), dtype=complex)
            sym[j, k] = sym[k, j] = 1
            anti = np.zeros((n, n), dtype=complex)
            anti[j, k] = -1j
            anti[k, j] = 1j
            elements += [sym, anti]
            labels += [f'S{j}{k}', f'A{j}{k}']
        diag = np.zeros(n)
        diag[:k] = 1
        diag[k] = -k
        elements.append(np.sqrt(2/(k*(k + 1)))*np.diag(diag).astype(complex))
        labels.append(f'D{k}')
    return elements, labels


def make_gell_mann_basis(n: int) -> GeneratorBasis:
    """
    Generalized Gell-Mann matrices of dimension ``n`` normalized so that
    ``Tr(lambda_i lambda_j) = 2 delta_ij``.

    For ``n = 2`` this reproduces the Pauli matrices in order x, y, z and for
    ``n = 3`` the usual eight Gell-Mann matrices.
    """
    if int(n) != n or n < 2:
        raise InvalidDimensionError(f'Gell-Mann basis needs n >= 2, got {n}')
    elements, labels = _gell_mann_elements(int(n))
    return GeneratorBasis(np.array(elements), 2.0, 'gell-mann',
                          labels=tuple(labels))


def _pauli_string_order(q: int) -> list[tuple[int, ...]]:
    if q == 2:
        # sigma_i (x) 1, 1 (x) sigma_i, then sigma_a (x) sigma_b row by row
        return ([(i, 0) for i in (1, 2, 3)] + [(0, i) for i in (1, 2, 3)]
                + [(a, b) for a in (1, 2, 3) for b in (1, 2, 3)])
    return [idx for idx in itertools.product(range(4), repeat=q) if any(idx)]


def pauli_string(indices: Sequence[int]) -> np.ndarray:
    """Tensor product ``sigma_{i_1} (x) ... (x) sigma_{i_q}``."""
    out = np.ones((1, 1), dtype=complex)
    for i in indices:
        out = np.kron(out, PAULI[i])
    return out


def make_pauli_tensor_basis(q: int) -> GeneratorBasis:
    """
    All non-identity q-fold tensor products of Pauli matrices, ``M = 2**q``.

    For two qubits the elements follow the ordering
    ``XI, YI, ZI, IX, IY, IZ, XX, XY, XZ, YX, YY, YZ, ZX, ZY, ZZ``; other
    sizes use lexicographic order over the index tuples.
    """
    if int(q) != q or q < 1:
        raise InvalidDimensionError(f'Pauli tensor basis needs q >= 1, got {q}')
    q = int(q)
    order = _pauli_string_order(q)
    elements = np.array([pauli_string(idx) for idx in order])
    labels = tuple(''.join('IXYZ'[i] for i in idx) for idx in order)
    name = 'pauli' if q == 1 else 'pauli-tensor'
    return GeneratorBasis(elements, float(2**q), name, labels=labels)


def make_basis(name: str, n: int) -> GeneratorBasis:
    """Look up a basis by name for Hilbert space dimension ``n``."""
    key = name.lower().replace('_', '-')
    if key == 'pauli':
        if n != 2:
            raise InvalidDimensionError('the Pauli basis is two-dimensional')
        return make_pauli_basis()
    if key in ('gell-mann', 'gellmann', 'ggm'):
        return make_gell_mann_basis(n)
    if key == 'pauli-tensor':
        q = int(round(np.log2(n)))
        if 2**q != n:
            raise InvalidDimensionError(
                f'pauli-tensor basis needs a power of two, got n={n}')
        return make_pauli_tensor_basis(q)
    raise ValueError(f'unknown basis {name!r}')


def project_traceless(H) -> np.ndarray:
    """Return ``H - Tr(H)/n * 1``."""
    H = np.asarray(H)
    if H.ndim != 2 or H.shape[0] != H.shape[1]:
        raise ShapeError(f'expected a square matrix, got shape {H.shape}')
    n = H.shape[0]
    return H - np.trace(H)/n*np.eye(n)


def _check_hermitian(S, tol, what='operator'):
    dev = np.abs(S - S.conj().T).max() if S.size else 0.0
    if dev > tol:
        raise ValidityError(f'{what} is not Hermitian (deviation {dev:.3g})')


def expand(S, basis: GeneratorBasis, label: Optional[str] = None,
           tol: float = NUMERIC_TOL) -> CoefficientVector:
    r"""
    Coordinates ``a_i = Tr(lambda_i S) / M`` of a Hermitian matrix.

    The identity component of ``S`` is discarded first since it only
    contributes a global phase; an :class:`IdentityComponentWarning` is
    issued if it was non-negligible.

    Raises
    ------
    ShapeError
        ``S`` is not ``n x n`` for the basis dimension ``n``.
    ValidityError
        ``S`` deviates from Hermiticity by more than ``tol``.
    """
    S = np.asarray(S, dtype=complex)
    if S.shape != (basis.n, basis.n):
        raise ShapeError(f'operator of shape {S.shape} does not match '
                         f'basis dimension {basis.n}')
    _check_hermitian(S, tol)
    if abs(np.trace(S)) > tol:
        warnings.warn(f'dropping identity component Tr(S)/n = '
                      f'{np.trace(S).real/basis.n:.6g}',
                      IdentityComponentWarning, stacklevel=2)
    coeffs = np.einsum('iab,ba->i', basis.elements, S)/basis.normalization
    return CoefficientVector(coeffs.real, basis, label)


def reconstruct(a: Union[CoefficientVector, Sequence[float]],
                basis: Optional[GeneratorBasis] = None) -> np.ndarray:
    """Matrix ``sum_i a_i lambda_i``; Hermitian whenever ``a`` is real."""
    if isinstance(a, CoefficientVector):
        if basis is not None and not basis.compatible(a.basis):
            raise ShapeError('coefficient vector belongs to a different basis')
        basis = a.basis
    if basis is None:
        raise TypeError('a basis is required for plain coefficient arrays')
    comps = np.asarray(a)
    if comps.shape != (basis.N,):
        raise ShapeError(f'expected {basis.N} coefficients, got {comps.shape}')
    return np.tensordot(comps, basis.elements, axes=1)


@dataclass(frozen=True, eq=False)
class HamiltonianTerm:
    """
    One term ``S (x) B`` of a system-bath Hamiltonian.

    ``system`` is stored as a traceless Hermitian matrix. ``bath`` is either
    ``None`` (identity on the bath), an abstract label or a concrete
    Hermitian matrix. ``wanted`` marks terms whose action should survive
    decoupling, as opposed to error terms.
    """
    system: np.ndarray
    bath: Union[None, str, np.ndarray] = None
    label: str = ''
    wanted: bool = False

    def __post_init__(self):
        S = np.array(self.system, dtype=complex)
        if S.ndim != 2 or S.shape[0] != S.shape[1]:
            raise ShapeError(f'system operator must be square, got {S.shape}')
        _check_hermitian(S, NUMERIC_TOL, f'system operator {self.label!r}')
        if abs(np.trace(S)) > NUMERIC_TOL:
            warnings.warn(f'term {self.label!r}: dropping identity component',
                          IdentityComponentWarning, stacklevel=3)
        S = project_traceless(S)
        S.setflags(write=False)
        object.__setattr__(self, 'system', S)
        if self.bath is not None and not isinstance(self.bath, str):
            B = np.array(self.bath, dtype=complex)
            if B.ndim != 2 or B.shape[0] != B.shape[1]:
                raise ShapeError(f'bath operator must be square, got {B.shape}')
            _check_hermitian(B, NUMERIC_TOL, f'bath operator of {self.label!r}')
            B.setflags(write=False)
            object.__setattr__(self, 'bath', B)

    @property
    def has_concrete_bath(self) -> bool:
        return not isinstance(self.bath, str)

    def with_system(self, system) -> 'HamiltonianTerm':
        return HamiltonianTerm(system, self.bath, self.label, self.wanted)


@dataclass(frozen=True, eq=False)
class SystemHamiltonian:
    """Sum of :class:`HamiltonianTerm` acting on an ``n``-level system."""
    terms: tuple
    n: int = 0

    def __post_init__(self):
        terms = tuple(self.terms)
        if not terms:
            raise ValidityError('a Hamiltonian needs at least one term')
        n = terms[0].system.shape[0]
        if self.n and self.n != n:
            raise ShapeError(f'terms have dimension {n}, declared {self.n}')
        for t in terms:
            if t.system.shape != (n, n):
                raise ShapeError(f'term {t.label!r} has dimension '
                                 f'{t.system.shape[0]}, expected {n}')
        object.__setattr__(self, 'terms', terms)
        object.__setattr__(self, 'n', n)

    @classmethod
    def from_terms(cls, *specs) -> 'SystemHamiltonian':
        """
        Build from ``(system, bath, label, wanted)`` tuples, where ``system``
        may be a matrix or a :class:`CoefficientVector`.
        """
        terms = []
        for i, spec in enumerate(specs):
            if isinstance(spec, HamiltonianTerm):
                terms.append(spec)
                continue
            system, bath, label, wanted = (tuple(spec) + (None, '', False))[:4]
            if isinstance(system, CoefficientVector):
                label = label or system.label or ''
                system = reconstruct(system)
            terms.append(HamiltonianTerm(system, bath, label or f'term{i}',
                                         bool(wanted)))
        return cls(tuple(terms))

    def __iter__(self):
        return iter(self.terms)

    def __len__(self):
        return len(self.terms)

    @property
    def labels(self) -> list[str]:
        return [t.label for t in self.terms]

    def vectors(self, basis: GeneratorBasis) -> list[CoefficientVector]:
        """Coordinate vector of every term's system operator."""
        return [expand(t.system, basis, t.label) for t in self.terms]

    def bath_dimension(self) -> int:
        """Common dimension of the concrete bath operators (1 if none)."""
        dims = {t.bath.shape[0] for t in self.terms
                if isinstance(t.bath, np.ndarray)}
        if len(dims) > 1:
            raise ShapeError(f'inconsistent bath dimensions {sorted(dims)}')
        return dims.pop() if dims else 1

    def full_matrix(self, bath_dim: Optional[int] = None) -> np.ndarray:
        """
        Matrix ``sum_g S_g (x) B_g`` on system (x) bath. Requires every bath
        part to be concrete.
        """
        d = self.bath_dimension() if bath_dim is None else bath_dim
        H = np.zeros((self.n*d, self.n*d), dtype=complex)
        for t in self.terms:
            if isinstance(t.bath, str):
                raise ValidityError(f'term {t.label!r} has abstract bath '
                                    f'{t.bath!r}; a matrix is required')
            B = np.eye(d) if t.bath is None else t.bath
            if B.shape != (d, d):
                raise ShapeError(f'term {t.label!r} bath has shape {B.shape}')
            H += np.kron(t.system, B)
        return H
