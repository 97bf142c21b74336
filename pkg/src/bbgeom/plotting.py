"""
Figures for the command-line reports.

Figures are drawn on :class:`matplotlib.figure.Figure` objects directly so no
interactive backend or global pyplot state is involved.
"""
from __future__ import annotations

from pathlib import Path

import numpy as np
from matplotlib.figure import Figure

__all__ = ['plot_analysis', 'plot_scan', 'plot_search']

_WIDTH = 6.4
_GOLDEN = (np.sqrt(5) - 1)/2


def _save(fig: Figure, path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(path, dpi=150, bbox_inches='tight')
    return path


def plot_analysis(report: dict, path) -> Path:
    """Grouped bars of original, averaged and target coordinates per term."""
    terms = report['terms']
    labels = report['basis']['labels']
    fig = Figure(figsize=(_WIDTH, _WIDTH*_GOLDEN*0.6*len(terms) + 0.6))
    x = np.arange(len(labels))
    width = 0.27
    for i, term in enumerate(terms):
        ax = fig.add_subplot(len(terms), 1, i + 1)
        ax.bar(x - width, term['original'], width, label='original')
        ax.bar(x, term['averaged'], width, label='averaged')
        ax.bar(x + width, term['target'], width, label='target',
               fill=False, edgecolor='k')
        ax.axhline(0, color='0.5', lw=0.5)
        ax.set_title(f"{term['label']} ({term['role']}), d = "
                     f"{term['distance']:.3g}", fontsize=9)
        ax.set_xticks(x)
        ax.set_xticklabels(labels, fontsize=7, rotation=90 if len(x) > 8 else 0)
        ax.set_ylabel('coefficient')
        if i == 0:
            ax.legend(fontsize=7, frameon=False, ncol=3)
    fig.tight_layout()
    return _save(fig, path)


def plot_scan(report: dict, path) -> Path:
    """Log-log residual norms against the pulse interval."""
    scan = report['scan']
    dt = np.array([p['delta_t'] for p in scan])
    inter = np.array([p['residual_interaction_norm'] for p in scan])
    total = np.array([p['residual_total_norm'] for p in scan])
    fig = Figure(figsize=(_WIDTH, _WIDTH*_GOLDEN))
    ax = fig.add_subplot()
    floor = 1e-16
    ax.loglog(dt, np.maximum(inter, floor), 'o-', label='system-nontrivial')
    ax.loglog(dt, np.maximum(total, floor), 's--', mfc='none', label='total')
    if len(dt) > 1 and inter[0] > floor:
        ax.loglog(dt, inter[0]*dt/dt[0], ':', color='0.4', label=r'$\propto\Delta t$')
    ax.set_xlabel(r'pulse interval $\Delta t$')
    ax.set_ylabel('residual norm')
    ax.legend(frameon=False)
    return _save(fig, path)


def plot_search(report: dict, path) -> Path:
    """Worst-term distance of every returned pulse set."""
    results = report['results']
    fig = Figure(figsize=(_WIDTH, _WIDTH*_GOLDEN))
    ax = fig.add_subplot()
    names = ['{' + ', '.join(r['labels']) + '}' for r in results]
    ax.barh(np.arange(len(results)), [r['d_max'] for r in results],
            color=['C2' if r['d_max'] <= report['tolerance'] else 'C3'
                   for r in results])
    ax.set_yticks(np.arange(len(results)))
    ax.set_yticklabels(names, fontsize=7)
    ax.invert_yaxis()
    ax.set_xlabel(r'$d_{\max}$')
    fig.tight_layout()
    return _save(fig, path)
