"""Serialization of analysis, simulation and search results to JSON and CSV."""
from __future__ import annotations

import csv
import io
from typing import Sequence

import numpy as np

from .config import encode_matrix
from .dynamics import SIGN_CONVENTION, ScanPoint
from .search import SearchResult
from .symmetrizer import DecouplingReport

__all__ = ['analysis_to_dict', 'scan_to_dict', 'search_to_dict',
           'rows_to_csv', 'analysis_rows', 'scan_rows', 'search_rows',
           'catalog_rows', 'SCAN_COLUMNS']

SCAN_COLUMNS = ('delta_t', 'residual_interaction_norm', 'residual_total_norm')


def _vec(v) -> list:
    return np.asarray(v, dtype=float).tolist()


def analysis_to_dict(report: DecouplingReport) -> dict:
    basis = report.basis
    gram = basis.gram()
    pulses = report.pulses
    return {
        'command': 'analyze',
        'basis': {
            'name': basis.name, 'dimension': basis.n, 'size': basis.N,
            'normalization': basis.normalization,
            'labels': list(basis.labels),
            'trace_orthogonality_error': float(
                np.abs(gram - basis.normalization*np.eye(basis.N)).max()),
        },
        'pulses': [
            {'label': lab, 'weight': float(w), 'unitary': encode_matrix(u),
             'rotation': _vec(R.matrix)}
            for lab, w, u, R in zip(pulses.labels, pulses.weights,
                                    pulses.unitaries, report.rotations)],
        'group_closed': pulses.group_closed,
        'tolerance': report.tol,
        'storage_achieved': report.storage_achieved,
        'target_achieved': report.target_achieved,
        'max_distance': report.max_distance,
        'terms': [
            {'label': t.label, 'role': 'wanted' if t.wanted else 'error',
             'original': _vec(t.original), 'averaged': _vec(t.averaged),
             'target': _vec(t.target), 'error': _vec(t.error),
             'distance': t.distance, 'hs_overlap': t.overlap,
             'in_centralizer': t.in_centralizer,
             'rotated': [_vec(r) for r in t.rotated]}
            for t in report.terms],
    }


def scan_to_dict(points: Sequence[ScanPoint], pulse_labels=()) -> dict:
    return {
        'command': 'simulate',
        'sign_convention': SIGN_CONVENTION,
        'pulses': list(pulse_labels),
        'scan': [
            {'delta_t': p.delta_t,
             'residual_interaction_norm': p.residual_interaction_norm,
             'residual_total_norm': p.residual_total_norm,
             'cycle_time': p.estimate.cycle_time,
             'effective_hamiltonian_norms': p.estimate.norms}
            for p in points],
    }


def search_to_dict(results: Sequence[SearchResult], tol: float) -> dict:
    return {
        'command': 'search',
        'tolerance': tol,
        'feasible': bool(results) and results[0].d_max <= tol,
        'results': [
            {'labels': list(r.labels), 'size': r.size, 'd_max': r.d_max,
             'group_closed': r.group_closed,
             'averaged': {a.label: _vec(a) for a in r.averaged}}
            for r in results],
    }


def rows_to_csv(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator='\n')
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _fmt(v) -> str:
    return ' '.join(repr(float(x)) for x in np.asarray(v, dtype=float))


def analysis_rows(report: DecouplingReport):
    header = ('label', 'role', 'distance', 'hs_overlap', 'original',
              'averaged', 'target')
    rows = [(t.label, 'wanted' if t.wanted else 'error', repr(t.distance),
             repr(t.overlap), _fmt(t.original), _fmt(t.averaged),
             _fmt(t.target)) for t in report.terms]
    return header, rows


def scan_rows(points: Sequence[ScanPoint]):
    return SCAN_COLUMNS, [(repr(p.delta_t), repr(p.residual_interaction_norm),
                           repr(p.residual_total_norm)) for p in points]


def search_rows(results: Sequence[SearchResult]):
    header = ('rank', 'size', 'd_max', 'group_closed', 'labels')
    return header, [(i, r.size, repr(r.d_max), r.group_closed,
                     ';'.join(r.labels)) for i, r in enumerate(results)]


def catalog_rows(listing):
    header = ('name', 'size', 'dimension', 'basis', 'group_closed', 'action',
              'note')
    return header, [tuple(row[h] for h in header) for row in listing]
