"""
Command-line front end.

    daisycube generate --family fibonacci -n 3
    daisycube indices graph.json --method all
    daisycube verify graph.json
    daisycube sweep --family lucas --n-min 1 --n-max 16 --format csv

Exit codes: 0 success, 1 a property failed, 2 bad input or a size cap was
exceeded.
"""

# Standard library
import argparse
import csv
import io
import sys
from typing import NamedTuple

# Third-party
from astropy import log as logger
import numpy as np

# Project
from ._astropy_init import __version__
from .config import conf
from .core import (hypercube, fibonacci_cube, lucas_cube,
                   generalized_fibonacci_cube, generalized_lucas_cube,
                   vertex_deleted_cube, daisy_closure, is_downward_closed)
from .errors import (DaisyCubeError, LabelError, SizeLimitError,
                     MethodDisagreementError, NotIsometricError)
from .invariants import (METHODS, IndexReport, direction_profile,
                         wiener_semicube, semicube_report, corollary_report,
                         companion_identity, check_daisy_embedding)
from .io import graph_to_dict, read_graph, read_generators, dumps
from .oracle import build_adjacency, all_pairs_summary, oracle_report

__all__ = ['main', 'build_family', 'SweepRow', 'FAMILIES', 'SWEEP_COLUMNS']

EXIT_OK = 0
EXIT_PROPERTY = 1
EXIT_INPUT = 2

FAMILIES = ('hypercube', 'fibonacci', 'lucas', 'qnf', 'glucas',
            'vertex-deleted', 'daisy')
SWEEP_COLUMNS = ('family', 'n', 'V', 'E', 'W', 'Mo', 'residual',
                 'relation_holds')


class SweepRow(NamedTuple):
    family: str
    n: int
    V: int
    E: int
    W: int
    Mo: int
    residual: int
    relation_holds: bool
    method: str

    def to_dict(self):
        return self._asdict()

    def to_csv(self):
        row = [getattr(self, c) for c in SWEEP_COLUMNS]
        return ['true' if x is True else 'false' if x is False else x
                for x in row]


def build_family(family, n=None, pattern=None, generators=None):
    """
    Construct one member of a named family.

    Parameters
    ----------
    family : str
        One of `FAMILIES`.
    n : int
        Dimension (ignored for ``'daisy'``, where the generator set fixes it).
    pattern : str (optional)
        Forbidden bitstring for ``'qnf'`` and ``'glucas'``.
    generators : `~daisycube.core.GeneratorSet` (optional)
        Required for ``'daisy'``.

    Returns
    -------
    graph : `~daisycube.core.CubeSubgraph`
    """
    if family not in FAMILIES:
        raise LabelError(f"Unknown family '{family}', expected one of "
                         f"{', '.join(FAMILIES)}")

    if family == 'daisy':
        if generators is None:
            raise LabelError("Family 'daisy' needs a generator file "
                             "(--generators)")
        if n is not None and n != generators.n:
            raise LabelError(f"-n {n} does not match the generator dimension "
                             f"{generators.n}")
        return daisy_closure(generators)

    if n is None:
        raise LabelError(f"Family '{family}' needs a dimension (-n)")

    if family in ('qnf', 'glucas'):
        if pattern is None:
            raise LabelError(f"Family '{family}' needs a pattern (--pattern)")
        if family == 'qnf':
            return generalized_fibonacci_cube(n, pattern)
        return generalized_lucas_cube(n, pattern)

    return {'hypercube': hypercube,
            'fibonacci': fibonacci_cube,
            'lucas': lucas_cube,
            'vertex-deleted': vertex_deleted_cube}[family](n)


def _compute(g, method, a, profile):
    if method == 'oracle':
        return oracle_report(g, a)

    if method == 'semicube':
        if not all_pairs_summary(a).isometric:
            logger.warning("The labelling is not an isometric embedding; "
                           "the oracle is not substituted for the semicube "
                           "method.")
            raise NotIsometricError("Semicube formulas need an isometric "
                                    "labelling")
        check_daisy_embedding(g, profile)
        return semicube_report(g, profile)

    check_daisy_embedding(g, profile)
    return corollary_report(g, profile)


def _cross_check(reports):
    first = reports[0]
    for r in reports[1:]:
        if not first.same_values(r):
            raise MethodDisagreementError(
                f"{first.method} gives W={first.wiener}, Mo={first.mostar} "
                f"but {r.method} gives W={r.wiener}, Mo={r.mostar}")


def _emit(text, out):
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, 'w') as f:
            f.write(text)


def cmd_generate(args):
    generators = None
    if args.generators is not None:
        generators = read_generators(args.generators)
    family = args.family
    if family is None:
        family = 'daisy' if generators is not None else None
    if family is None:
        raise LabelError("generate needs --family")

    g = build_family(family, args.n, args.pattern, generators)
    logger.debug(f"generated {family}: {g!r}")
    _emit(dumps(graph_to_dict(g)), args.out)
    return EXIT_OK


def cmd_indices(args):
    g = read_graph(args.graph)
    a = build_adjacency(g)
    profile = direction_profile(g)

    methods = METHODS if args.method == 'all' else (args.method,)
    reports = [_compute(g, m, a, profile) for m in methods]

    if args.method == 'all':
        _cross_check(reports)
        doc = {'reports': [r.to_dict() for r in reports], 'agreement': True}
    else:
        doc = reports[0].to_dict()

    _emit(dumps(doc), args.out)
    return EXIT_OK


class _Checklist:

    def __init__(self):
        self.checks = []

    def record(self, name, passed, failure, detail=None):
        passed = bool(passed)
        self.checks.append({'check': name, 'passed': passed,
                            'detail': detail if detail is not None else
                            ('' if passed else failure),
                            '_failure': failure})
        if not passed:
            logger.warning(f"{name}: {failure}")
        return passed

    @property
    def passed(self):
        return all(c['passed'] for c in self.checks)

    def first_failure(self):
        for c in self.checks:
            if not c['passed']:
                return c['_failure']
        return None

    def to_list(self):
        return [{k: v for k, v in c.items() if not k.startswith('_')}
                for c in self.checks]


def verify_graph(g):
    """
    Run every structural and index check on ``g``.

    Returns
    -------
    doc : dict
        JSON-serializable report with ``passed`` and ``reason`` keys.
    """
    cl = _Checklist()
    a = build_adjacency(g)
    profile = direction_profile(g)
    reports = []
    oracle = None

    connected = cl.record('connected', a.is_connected(), 'disconnected')
    if connected:
        summary = all_pairs_summary(a)
        oracle = oracle_report(g, a)
        reports.append(oracle)
        cl.record('isometric', summary.isometric, 'not isometric')
        cl.record('no equidistant vertices', np.all(summary.ties == 0),
                  'some edge has equidistant vertices')

    cl.record('downward-closed', is_downward_closed(g), 'not downward-closed')

    cl.record('complementary semicubes',
              all(x + y == g.vertex_count
                  for x, y in zip(profile.w0, profile.w1)),
              'semicubes are not complementary')

    bad3 = [i for i, (x, y) in enumerate(zip(profile.w0, profile.w1), 1)
            if x < y]
    prop3 = cl.record('Proposition 3', not bad3,
                      f"Proposition 3 violated in direction(s) {bad3}")

    bad4 = [i for i, (e, y) in enumerate(zip(profile.e, profile.w1), 1)
            if e != y]
    prop4 = cl.record('Proposition 4', not bad4,
                      f"Proposition 4 violated in direction(s) {bad4}")

    if connected:
        lower, _, direction = g.edges()
        w0 = np.array(profile.w0, dtype=np.int64)
        w1 = np.array(profile.w1, dtype=np.int64)
        sides_match = (np.array_equal(summary.n_lower, w0[direction]) and
                       np.array_equal(summary.n_upper, w1[direction]))
        cl.record('Proposition 5', sides_match,
                  'edge side counts differ from semicube sizes')

        if summary.isometric:
            W = wiener_semicube(profile)
            cl.record('Wiener semicube = oracle', W == oracle.wiener,
                      f"semicube W={W} but oracle W={oracle.wiener}")
            if prop3:
                reports.append(semicube_report(g, profile))
        if prop4:
            reports.append(corollary_report(g, profile))

        agree = all(oracle.same_values(r) for r in reports)
        cl.record('method agreement', agree, 'index methods disagree')

        cl.record('relation', oracle.relation_holds,
                  f"relation residual {oracle.residual}",
                  detail=f"residual {oracle.residual}")

        lhs, rhs = companion_identity(oracle, profile)
        cl.record('W - Mo identity', lhs == rhs,
                  f"W - Mo = {lhs} but sum |W_(i,1)|^2 = {rhs}")

    reason = cl.first_failure()
    if reason is not None and oracle is not None and \
            not reason.startswith('relation residual'):
        reason = f"{reason}; relation residual {oracle.residual}"

    return {'n': g.n, 'V': g.vertex_count, 'E': g.edge_count,
            'passed': cl.passed, 'reason': reason,
            'checks': cl.to_list(),
            'reports': [r.to_dict() for r in reports]}


def cmd_verify(args):
    g = read_graph(args.graph)
    doc = verify_graph(g)
    _emit(dumps(doc), args.out)
    return EXIT_OK if doc['passed'] else EXIT_PROPERTY


def sweep_row(family, n, g):
    """
    Compute and cross-check the indices of one graph for a sweep.

    Daisy cubes get all three methods; other graphs are reported from the
    oracle, with the semicube Wiener index still compared when the labelling
    is isometric.
    """
    a = build_adjacency(g)
    profile = direction_profile(g)
    oracle = oracle_report(g, a)

    try:
        check_daisy_embedding(g, profile)
        daisy = True
    except DaisyCubeError:
        daisy = False

    if daisy:
        _cross_check([oracle, semicube_report(g, profile),
                      corollary_report(g, profile)])
        method = 'all'
    else:
        if all_pairs_summary(a).isometric:
            _cross_check([oracle, IndexReport(
                g.vertex_count, g.edge_count, wiener_semicube(profile),
                oracle.mostar, method='semicube')])
        method = 'oracle'

    return SweepRow(family, n, oracle.vertex_count, oracle.edge_count,
                    oracle.wiener, oracle.mostar, oracle.residual,
                    oracle.relation_holds, method)


def _format_rows(rows, fmt):
    if fmt == 'json':
        return dumps([r.to_dict() for r in rows])

    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator='\n')
    writer.writerow(SWEEP_COLUMNS)
    for r in rows:
        writer.writerow(r.to_csv())
    return buf.getvalue()


def cmd_sweep(args):
    if args.n is not None:
        n_min = n_max = args.n
    else:
        n_min, n_max = args.n_min, args.n_max
    if n_min is None or n_max is None or n_min > n_max:
        raise LabelError("sweep needs a nonempty range: --n-min <= --n-max "
                         "(or -n)")
    if args.family == 'daisy':
        raise LabelError("Family 'daisy' has no dimension parameter to sweep")
    if args.family in ('qnf', 'glucas') and args.pattern is None:
        raise LabelError(f"Family '{args.family}' needs a pattern "
                         "(--pattern)")

    rows = []
    status = EXIT_OK
    try:
        for n in range(n_min, n_max + 1):
            g = build_family(args.family, n, args.pattern)
            rows.append(sweep_row(args.family, n, g))
            logger.debug(f"sweep {args.family} n={n}: {rows[-1]}")
    except (LabelError, SizeLimitError) as e:
        logger.warning(f"sweep stopped: {e}")
        status = EXIT_INPUT
    except DaisyCubeError as e:
        logger.warning(f"sweep stopped: {e}")
        status = EXIT_PROPERTY

    _emit(_format_rows(rows, args.format), args.out)
    return status


def _parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--out', default=None,
                        help='write the result to this path instead of '
                             'stdout')
    common.add_argument('--max-vertices', type=int, default=None,
                        help='override the vertex-count cap '
                             f'(default {conf.max_vertices})')
    verbosity = common.add_mutually_exclusive_group()
    verbosity.add_argument('-v', '--verbose', action='store_true',
                           help='log debug messages (astropy sends them to '
                                'stdout, so combine with --out)')
    verbosity.add_argument('-q', '--quiet', action='store_true',
                           help='only log errors')

    parser = argparse.ArgumentParser(
        prog='daisycube',
        description='Daisy cubes, their Wiener and Mostar indices, and the '
                    'relation 2W - Mo = |V||E|.')
    parser.add_argument('--version', action='version',
                        version=f'%(prog)s {__version__}')
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('generate', parents=[common],
                       help='write a graph JSON document')
    p.add_argument('--family', choices=FAMILIES, default=None)
    p.add_argument('-n', '--dim', dest='n', type=int, default=None)
    p.add_argument('--pattern', default=None,
                   help="forbidden bitstring for 'qnf' and 'glucas'")
    p.add_argument('--generators', default=None,
                   help="generator JSON file for 'daisy'")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser('indices', parents=[common],
                       help='compute Wiener and Mostar indices')
    p.add_argument('graph', help='graph JSON file')
    p.add_argument('--method', choices=METHODS + ('all',), default='all')
    p.set_defaults(func=cmd_indices)

    p = sub.add_parser('verify', parents=[common],
                       help='check every property of a graph')
    p.add_argument('graph', help='graph JSON file')
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser('sweep', parents=[common],
                       help='tabulate a family over a range of dimensions')
    p.add_argument('--family', choices=FAMILIES, required=True)
    p.add_argument('-n', '--dim', dest='n', type=int, default=None)
    p.add_argument('--n-min', type=int, default=None)
    p.add_argument('--n-max', type=int, default=None)
    p.add_argument('--pattern', default=None)
    p.add_argument('--format', choices=('csv', 'json'), default='csv')
    p.set_defaults(func=cmd_sweep)

    return parser


def _run(args):
    try:
        return args.func(args)
    except (LabelError, SizeLimitError, OSError) as e:
        logger.error(str(e))
        return EXIT_INPUT
    except DaisyCubeError as e:
        logger.error(str(e))
        return EXIT_PROPERTY


def main(argv=None):
    """
    Entry point of the ``daisycube`` console script.

    Parameters
    ----------
    argv : list of str (optional)
        Arguments without the program name; defaults to ``sys.argv[1:]``.

    Returns
    -------
    status : int
        Process exit code.
    """
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code

    if args.verbose:
        logger.setLevel('DEBUG')
    elif args.quiet:
        logger.setLevel('ERROR')

    if args.max_vertices is None:
        return _run(args)

    max_dim = max(conf.max_dimension, args.max_vertices.bit_length() - 1)
    with conf.set_temp('max_vertices', args.max_vertices), \
            conf.set_temp('max_dimension', max_dim):
        return _run(args)


if __name__ == '__main__':
    sys.exit(main())
