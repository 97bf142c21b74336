"""
Command-line interface.

::

    bbgeom analyze  CONFIG [-o OUT] [--format structured|csv] [--tol TOL]
    bbgeom simulate CONFIG [--dt DT ...]
    bbgeom search   CONFIG [--budget N] [--top-k K] [--max-size M]
    bbgeom catalog

Reports go to standard output (or ``-o``), diagnostics to standard error.
``--plot-dir`` additionally renders a PNG figure for the report. Exit status
is 0 on success, 2 for configuration errors and 1 for other failures.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import report as rep
from .config import load_config
from .dynamics import convergence_scan
from .errors import BBGeomError, ConfigError
from .search import DEFAULT_BUDGET, find_pulse_sets
from .sequences import catalog_listing
from .symmetrizer import analyze

__all__ = ['main', 'build_parser']


def _emit(args, payload: dict, csv_table) -> None:
    if args.format == 'csv':
        text = rep.rows_to_csv(*csv_table)
    else:
        text = json.dumps(payload, indent=2) + '\n'
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)


def _plot(args, kind: str, payload: dict) -> None:
    if not getattr(args, 'plot_dir', None):
        return
    from . import plotting
    draw = {'analyze': plotting.plot_analysis, 'simulate': plotting.plot_scan,
            'search': plotting.plot_search}[kind]
    path = draw(payload, Path(args.plot_dir)/f'{kind}.png')
    print(f'wrote {path}', file=sys.stderr)


def cmd_analyze(args) -> dict:
    problem = load_config(args.config).build()
    tol = args.tol if args.tol is not None else problem.config.tolerance
    report = analyze(problem.hamiltonian, problem.pulses, problem.basis,
                     problem.targets, tol)
    payload = rep.analysis_to_dict(report)
    _emit(args, payload, rep.analysis_rows(report))
    _plot(args, 'analyze', payload)
    return payload


def cmd_simulate(args) -> dict:
    problem = load_config(args.config).build()
    dts = args.dt or problem.config.delta_t
    if not dts:
        raise ConfigError('delta_t: no pulse intervals given (config or --dt)')
    H = problem.hamiltonian
    for t in H.terms:
        if not t.has_concrete_bath:
            raise ConfigError(f'terms[{H.labels.index(t.label)}].bath: '
                              f'simulation needs a bath matrix, got label '
                              f'{t.bath!r}')
    dts = sorted(dts, reverse=True)
    points = convergence_scan(H, problem.pulses, dts)
    payload = rep.scan_to_dict(points, problem.pulses.labels)
    _emit(args, payload, rep.scan_rows(points))
    _plot(args, 'simulate', payload)
    return payload


def cmd_search(args) -> dict:
    problem = load_config(args.config).build()
    settings = dict(problem.config.search)
    tol = args.tol if args.tol is not None else problem.config.tolerance
    max_size = args.max_size or settings.get('max_size', 2)
    budget = args.budget or settings.get('budget', DEFAULT_BUDGET)
    top_k = args.top_k or settings.get('top_k', 5)
    results = find_pulse_sets(problem.hamiltonian, problem.targets,
                              problem.library(), max_size, tol, budget, top_k)
    payload = rep.search_to_dict(results, tol)
    _emit(args, payload, rep.search_rows(results))
    _plot(args, 'search', payload)
    return payload


def cmd_catalog(args) -> list:
    listing = catalog_listing()
    if args.format == 'csv':
        text = rep.rows_to_csv(*rep.catalog_rows(listing))
    else:
        text = json.dumps({'command': 'catalog', 'sequences': listing},
                          indent=2) + '\n'
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return listing


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('-o', '--output', help='write the report to this file')
    common.add_argument('--format', choices=('structured', 'csv'),
                        default='structured', help='report format')

    problem = argparse.ArgumentParser(add_help=False, parents=[common])
    problem.add_argument('config', help='problem configuration (JSON)')
    problem.add_argument('--tol', type=float, help='override the tolerance')
    problem.add_argument('--plot-dir', help='render a PNG figure here')

    parser = argparse.ArgumentParser(
        prog='bbgeom', description='Geometric analysis and design of '
        'bang-bang decoupling pulse sequences.')
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('analyze', parents=[problem],
                       help='average the Hamiltonian over the pulse set')
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser('simulate', parents=[problem],
                       help='finite-interval cycle convergence scan')
    p.add_argument('--dt', type=float, nargs='+',
                   help='pulse intervals, overriding the config')
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser('search', parents=[problem],
                       help='exhaustive search over Pauli pulses')
    p.add_argument('--budget', type=int, help='maximum number of subsets')
    p.add_argument('--top-k', type=int, help='results kept when none is '
                   'feasible')
    p.add_argument('--max-size', type=int, help='largest pulse-set size')
    p.set_defaults(func=cmd_search)

    p = sub.add_parser('catalog', parents=[common],
                       help='list the built-in pulse sequences')
    p.set_defaults(func=cmd_catalog)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except ConfigError as exc:
        print(f'bbgeom: config error: {exc}', file=sys.stderr)
        return 2
    except (BBGeomError, KeyError, ValueError) as exc:
        print(f'bbgeom: error: {exc}', file=sys.stderr)
        return 1
    return 0


if __name__ == '__main__':
    sys.exit(main())
