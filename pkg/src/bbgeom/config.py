"""
Problem configuration files.

Configurations are JSON documents. Complex matrices are written as
``{"real": rows, "imag": rows}`` (``imag`` may be omitted). A minimal
single-qubit example::

    {
      "dimension": 2,
      "basis": "pauli",
      "terms": [{"label": "dephasing", "role": "error",
                 "coefficients": [0, 0, 1], "bath": "B"}],
      "pulses": {"sequence": "parity-kick"}
    }

Every parse error is reported as a :class:`~bbgeom.errors.ConfigError`
whose message starts with the offending field path, e.g.
``terms[0].bath.real``, or with the line and column for malformed JSON.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

import numpy as np

from .adjoint import AxisAngle
from .errors import BBGeomError, ConfigError
from .search import DEFAULT_BUDGET, CandidateLibrary, pauli_library
from .sequences import CATALOG, load_sequence, pulse_for_rotation
from .su_algebra import (GeneratorBasis, HamiltonianTerm, SystemHamiltonian,
                         make_basis, reconstruct)
from .symmetrizer import STORAGE_TOL, PulseSet

__all__ = ['ProblemConfig', 'Problem', 'parse_config', 'load_config',
           'encode_matrix', 'decode_matrix']

ROLES = ('error', 'wanted')


def encode_matrix(M) -> dict:
    M = np.asarray(M, dtype=complex)
    return {'real': M.real.tolist(), 'imag': M.imag.tolist()}


def decode_matrix(obj, path: str) -> np.ndarray:
    if not isinstance(obj, dict) or 'real' not in obj:
        raise ConfigError(f'{path}: expected an object with "real" and '
                          f'optional "imag" arrays')
    try:
        re = np.array(obj['real'], dtype=float)
    except (TypeError, ValueError):
        raise ConfigError(f'{path}.real: not a numeric matrix') from None
    try:
        im = np.array(obj.get('imag', np.zeros_like(re)), dtype=float)
    except (TypeError, ValueError):
        raise ConfigError(f'{path}.imag: not a numeric matrix') from None
    if re.ndim != 2 or re.shape[0] != re.shape[1]:
        raise ConfigError(f'{path}.real: expected a square matrix, got shape '
                          f'{re.shape}')
    if im.shape != re.shape:
        raise ConfigError(f'{path}.imag: shape {im.shape} does not match real '
                          f'part {re.shape}')
    return re + 1j*im


def _vector(obj, path, length=None) -> list:
    try:
        v = np.array(obj, dtype=float)
    except (TypeError, ValueError):
        raise ConfigError(f'{path}: expected a list of numbers') from None
    if v.ndim != 1 or (length is not None and len(v) != length):
        want = f'{length} numbers' if length else 'a flat list'
        raise ConfigError(f'{path}: expected {want}, got shape {v.shape}')
    if not np.all(np.isfinite(v)):
        raise ConfigError(f'{path}: values must be finite')
    return v.tolist()


def _number(obj, path, positive=True) -> float:
    if isinstance(obj, bool) or not isinstance(obj, (int, float)):
        raise ConfigError(f'{path}: expected a number')
    if not math.isfinite(obj) or (positive and obj <= 0):
        raise ConfigError(f'{path}: expected a positive finite number')
    return float(obj)


def _integer(obj, path, minimum=1) -> int:
    if isinstance(obj, bool) or not isinstance(obj, (int, float)) \
            or int(obj) != obj or obj < minimum:
        raise ConfigError(f'{path}: expected an integer >= {minimum}')
    return int(obj)


@dataclass
class ProblemConfig:
    """Validated, JSON-serializable problem description."""
    dimension: int
    basis: str
    terms: list
    pulses: dict
    targets: dict = field(default_factory=dict)
    tolerance: float = STORAGE_TOL
    delta_t: list = field(default_factory=list)
    search: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        out = {'dimension': self.dimension, 'basis': self.basis,
               'terms': self.terms, 'pulses': self.pulses,
               'tolerance': self.tolerance}
        if self.targets:
            out['targets'] = self.targets
        if self.delta_t:
            out['delta_t'] = self.delta_t
        if self.search:
            out['search'] = self.search
        return json.loads(json.dumps(out))

    def dumps(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def build(self) -> 'Problem':
        return Problem.from_config(self)


def _parse_term(raw, i, basis: GeneratorBasis) -> dict:
    path = f'terms[{i}]'
    if not isinstance(raw, dict):
        raise ConfigError(f'{path}: expected an object')
    unknown = set(raw) - {'label', 'role', 'coefficients', 'matrix', 'bath'}
    if unknown:
        raise ConfigError(f'{path}: unknown fields {sorted(unknown)}')
    term = {'label': str(raw.get('label', f'term{i}'))}
    role = raw.get('role', 'error')
    if role not in ROLES:
        raise ConfigError(f'{path}.role: must be one of {ROLES}, got {role!r}')
    term['role'] = role
    if ('coefficients' in raw) == ('matrix' in raw):
        raise ConfigError(f'{path}: give exactly one of "coefficients" or '
                          f'"matrix"')
    if 'coefficients' in raw:
        term['coefficients'] = _vector(raw['coefficients'],
                                       f'{path}.coefficients', basis.N)
    else:
        M = decode_matrix(raw['matrix'], f'{path}.matrix')
        if M.shape != (basis.n, basis.n):
            raise ConfigError(f'{path}.matrix: shape {M.shape} does not match '
                              f'dimension {basis.n}')
        term['matrix'] = encode_matrix(M)
    bath = raw.get('bath')
    if bath is None or isinstance(bath, str):
        term['bath'] = bath
    else:
        term['bath'] = encode_matrix(decode_matrix(bath, f'{path}.bath'))
    return term


def _parse_pulses(raw, dimension) -> dict:
    path = 'pulses'
    if not isinstance(raw, dict):
        raise ConfigError(f'{path}: expected an object')
    kinds = [k for k in ('sequence', 'axis_angle', 'matrices') if k in raw]
    if len(kinds) != 1:
        raise ConfigError(f'{path}: give exactly one of "sequence", '
                          f'"axis_angle" or "matrices"')
    kind = kinds[0]
    if kind == 'sequence':
        name = raw['sequence']
        if name not in CATALOG:
            raise ConfigError(f'{path}.sequence: unknown sequence {name!r}; '
                              f'choose from {", ".join(CATALOG)}')
        out = {'sequence': name}
        if 'axis' in raw:
            out['axis'] = _vector(raw['axis'], f'{path}.axis', 3)
        if 'initial' in raw:
            out['initial'] = _vector(raw['initial'], f'{path}.initial', 3)
        return out
    entries = raw[kind]
    if not isinstance(entries, list) or not entries:
        raise ConfigError(f'{path}.{kind}: expected a nonempty list')
    if kind == 'axis_angle':
        if dimension != 2:
            raise ConfigError(f'{path}.axis_angle: only valid for dimension 2')
        parsed = []
        for j, e in enumerate(entries):
            p = f'{path}.axis_angle[{j}]'
            if not isinstance(e, dict) or 'axis' not in e or 'angle' not in e:
                raise ConfigError(f'{p}: expected {{"axis": [x, y, z], '
                                  f'"angle": radians}}')
            axis = _vector(e['axis'], f'{p}.axis', 3)
            if np.linalg.norm(axis) < 1e-12:
                raise ConfigError(f'{p}.axis: must be nonzero')
            parsed.append({'axis': axis,
                           'angle': _number(e['angle'], f'{p}.angle', False)})
        out = {'axis_angle': parsed}
    else:
        mats = []
        for j, e in enumerate(entries):
            M = decode_matrix(e, f'{path}.matrices[{j}]')
            if M.shape != (dimension, dimension):
                raise ConfigError(f'{path}.matrices[{j}]: shape {M.shape} does '
                                  f'not match dimension {dimension}')
            mats.append(encode_matrix(M))
        out = {'matrices': mats}
    if 'labels' in raw:
        labels = raw['labels']
        if not isinstance(labels, list) or len(labels) != len(entries):
            raise ConfigError(f'{path}.labels: need one label per pulse')
        out['labels'] = [str(x) for x in labels]
    return out


def parse_config(raw: Any) -> ProblemConfig:
    """Validate a decoded JSON document and return a :class:`ProblemConfig`."""
    if not isinstance(raw, dict):
        raise ConfigError('<root>: expected a JSON object')
    unknown = set(raw) - {'dimension', 'basis', 'terms', 'pulses', 'targets',
                          'tolerance', 'delta_t', 'search'}
    if unknown:
        raise ConfigError(f'<root>: unknown fields {sorted(unknown)}')
    if 'dimension' not in raw:
        raise ConfigError('dimension: required')
    dimension = _integer(raw['dimension'], 'dimension', 2)
    basis_name = raw.get('basis', 'pauli' if dimension == 2 else 'gell-mann')
    try:
        basis = make_basis(str(basis_name), dimension)
    except (ValueError, BBGeomError) as exc:
        raise ConfigError(f'basis: {exc}') from None

    terms = raw.get('terms')
    if not isinstance(terms, list) or not terms:
        raise ConfigError('terms: expected a nonempty list')
    parsed_terms = [_parse_term(t, i, basis) for i, t in enumerate(terms)]
    labels = [t['label'] for t in parsed_terms]
    if len(set(labels)) != len(labels):
        raise ConfigError('terms: labels must be unique')

    if 'pulses' not in raw:
        raise ConfigError('pulses: required')
    pulses = _parse_pulses(raw['pulses'], dimension)

    targets = raw.get('targets', {})
    if not isinstance(targets, dict):
        raise ConfigError('targets: expected an object mapping term labels '
                          'to coefficient lists')
    parsed_targets = {}
    for lab, vec in targets.items():
        if lab not in labels:
            raise ConfigError(f'targets.{lab}: no term with this label')
        parsed_targets[lab] = _vector(vec, f'targets.{lab}', basis.N)

    tol = _number(raw.get('tolerance', STORAGE_TOL), 'tolerance')
    dts = raw.get('delta_t', [])
    if not isinstance(dts, list):
        raise ConfigError('delta_t: expected a list of positive numbers')
    dts = [_number(dt, f'delta_t[{j}]') for j, dt in enumerate(dts)]

    search = raw.get('search', {})
    if not isinstance(search, dict):
        raise ConfigError('search: expected an object')
    parsed_search = {}
    if search:
        parsed_search['library'] = str(search.get('library', 'pauli'))
        if parsed_search['library'] != 'pauli':
            raise ConfigError('search.library: only "pauli" (all Pauli '
                              'strings) is supported')
        parsed_search['max_size'] = _integer(search.get('max_size', 2),
                                             'search.max_size')
        parsed_search['budget'] = _integer(search.get('budget', DEFAULT_BUDGET),
                                           'search.budget')
        parsed_search['top_k'] = _integer(search.get('top_k', 5),
                                          'search.top_k')

    return ProblemConfig(dimension, str(basis_name), parsed_terms, pulses,
                         parsed_targets, tol, dts, parsed_search)


def load_config(path) -> ProblemConfig:
    """Read and validate a JSON configuration file."""
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ConfigError(f'{path}: {exc.strerror}') from None
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f'{path}:{exc.lineno}:{exc.colno}: {exc.msg}') \
            from None
    return parse_config(raw)


@dataclass
class Problem:
    """Module-level objects built from a :class:`ProblemConfig`."""
    config: ProblemConfig
    basis: GeneratorBasis
    hamiltonian: SystemHamiltonian
    pulses: PulseSet
    targets: dict

    @classmethod
    def from_config(cls, cfg: ProblemConfig) -> 'Problem':
        basis = make_basis(cfg.basis, cfg.dimension)
        terms = []
        for i, t in enumerate(cfg.terms):
            if 'coefficients' in t:
                S = reconstruct(t['coefficients'], basis)
            else:
                S = decode_matrix(t['matrix'], f'terms[{i}].matrix')
            bath = t['bath']
            if isinstance(bath, dict):
                bath = decode_matrix(bath, f'terms[{i}].bath')
            try:
                terms.append(HamiltonianTerm(S, bath, t['label'],
                                             t['role'] == 'wanted'))
            except BBGeomError as exc:
                raise ConfigError(f'terms[{i}]: {exc}') from None
        H = SystemHamiltonian(tuple(terms))
        try:
            pulses = cls._pulses(cfg, basis, H)
        except (ConfigError, KeyError):
            raise
        except (BBGeomError, ValueError) as exc:
            raise ConfigError(f'pulses: {exc}') from None
        targets = {k: np.array(v) for k, v in cfg.targets.items()}
        return cls(cfg, basis, H, pulses, targets)

    @staticmethod
    def _pulses(cfg, basis, H) -> PulseSet:
        spec = cfg.pulses
        if 'sequence' in spec:
            initial = spec.get('initial')
            if spec['sequence'] == 'tetrahedron' and initial is None:
                initial = H.vectors(basis)[0].components
            seq = load_sequence(spec['sequence'], spec.get('axis'), initial)
            if seq.pulses.n != cfg.dimension:
                raise ConfigError(f'pulses.sequence: {seq.name!r} acts on '
                                  f'dimension {seq.pulses.n}, problem has '
                                  f'{cfg.dimension}')
            return seq.pulses
        if 'axis_angle' in spec:
            us = [pulse_for_rotation(AxisAngle(e['axis'], e['angle']))
                  for e in spec['axis_angle']]
        else:
            us = [decode_matrix(m, f'pulses.matrices[{j}]')
                  for j, m in enumerate(spec['matrices'])]
        return PulseSet.with_identity(us, labels=spec.get('labels'))

    def library(self) -> CandidateLibrary:
        q = int(round(np.log2(self.config.dimension)))
        if 2**q != self.config.dimension:
            raise ConfigError('search.library: Pauli library needs a power-of-'
                              'two dimension')
        return pauli_library(q, self.basis)
