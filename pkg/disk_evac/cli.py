"""
Command line for the evacuation engine.

    evac evaluate --params paper --exit-arc 0.629973871925
    evac worst-case --params paper --grid 1000000
    evac verify
    evac optimize --params seed.json --config search.json --out best.json --log run.csv
    evac export --what trajectory --format csv --resolution 1e-3

Exit codes: 0 ok, 1 a verify check failed, 2 bad parameters, 3 a meeting or
special point could not be solved, 4 output could not be written.
"""
import argparse
import csv
import dataclasses
import json
import logging
import math
import sys

import numpy as np

from . import BlockWriter, EnvironmentVarAction, LogLevelAction, rst
from .analysis import SpecialPointError, angles, partition, worst_case
from .geom import DegenerateGeometry, Robot
from .meeting import MeetingError, evac_time
from .optimize import SearchConfig, load_config, pattern_search
from .strategy import (
    BUILTIN,
    InvalidParams,
    StrategyParams,
    Variant,
    build_trajectory,
    dump,
    ensure_valid,
    load,
)
from . import verify

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_BAD_PARAMS = 2
EXIT_SOLVER = 3
EXIT_IO = 4


def load_params(value: str) -> StrategyParams:
    """A builtin name (`paper`, `baseline`) or the path of a params JSON file."""
    if value in BUILTIN:
        return BUILTIN[value]
    try:
        with open(value) as fo:
            return load(fo)
    except OSError as ex:
        raise InvalidParams(['cannot read "{0}" ({1})'.format(value, ex.strerror)])


def fmt(v):
    return '%.17g' % v


def write_records(out, records, columns, format):
    if format == 'json':
        json.dump(records, out, indent=4)
        out.write('\n')
        return
    writer = csv.writer(out, lineterminator='\n')
    writer.writerow(columns)
    for r in records:
        writer.writerow([fmt(r[c]) if isinstance(r[c], float) else r[c] for c in columns])


# exports

def trajectory_records(params: StrategyParams, resolution: float):
    """Samples of both robots up to the end of the search, joints included."""
    end = 1.0 + math.pi + 2.0 * params.total_depth
    records = []
    for robot in (Robot.R1, Robot.R2):
        traj = build_trajectory(params, robot)
        joints = [s.start_time for s in traj.segments if s.start_time <= end]
        ts = np.unique(np.concatenate([np.arange(0.0, end, resolution), joints, [end]]))
        for t, (x, y) in zip(ts, traj.positions(ts)):
            records.append({'t': float(t), 'robot': robot.value, 'x': float(x), 'y': float(y)})
    records.sort(key=lambda r: (r['t'], r['robot']))
    return records


def profile_records(params: StrategyParams, resolution: float):
    xs = np.unique(np.concatenate([
        np.arange(0.0, math.pi, resolution), [math.pi], [c.p for c in params.cuts],
    ]))
    records = [
        {'x': float(x), 'evac': evac_time(params, float(x)).evac, 'variant': Variant.BEFORE_CUT.value}
        for x in xs
    ]
    for c in params.cuts:
        records.append({
            'x': c.p,
            'evac': evac_time(params, c.p, Variant.AFTER_CUT).evac,
            'variant': Variant.AFTER_CUT.value,
        })
    records.sort(key=lambda r: (r['x'], r['variant']))
    return records


EXPORTS = {
    'trajectory': (lambda params, args: trajectory_records(params, args.resolution), ['t', 'robot', 'x', 'y']),
    'profile': (lambda params, args: profile_records(params, args.resolution), ['x', 'evac', 'variant']),
    'partition': (
        lambda params, args: [p.as_dict() for p in partition(params)],
        ['from', 'to', 'x_from', 'x_to', 'phase', 'cut'],
    ),
}


# commands

def evaluate_cmd(args, out):
    params = load_params(args.params)
    if args.after_cut is not None:
        if not 1 <= args.after_cut <= params.k:
            raise InvalidParams(['no cut {0}, strategy has {1}'.format(args.after_cut, params.k)])
        x, variant = params.cuts[args.after_cut - 1].p, Variant.AFTER_CUT
    elif args.exit_arc is not None:
        x, variant = args.exit_arc, Variant.BEFORE_CUT
    else:
        raise InvalidParams(['one of --exit-arc or --after-cut is required'])
    if not 0.0 <= x <= math.pi:
        raise InvalidParams(['exit arc {0!r} not in [0, pi]'.format(x)])
    m = evac_time(params, x, variant)
    try:
        report = angles(params, x, variant, meeting=m).as_dict()
    except DegenerateGeometry:
        report = None
    record = {
        'x': x,
        'variant': variant.value,
        't0': m.t0,
        't': m.t,
        'M': list(m.M.as_tuple()),
        'evac': m.evac,
        'meeting_phase': m.meeting_phase.value,
        'angles': report,
    }
    json.dump(record, out, indent=4)
    out.write('\n')
    logger.info('evac %s at x=%s (%s)', m.evac, x, variant.value)
    return EXIT_OK


def worst_case_cmd(args, out):
    params = load_params(args.params)
    report = worst_case(params, grid=args.grid, scan_grid=args.scan, threads=args.threads)
    if args.format == 'rst':
        rst.report.generate(
            BlockWriter(out), params, report, parts=partition(params) if params.k else None,
        )
    elif args.format == 'csv':
        write_records(
            out,
            [
                dict(c.as_dict(), criterion=c.angles.criterion if c.angles else '')
                for c in report.candidates
            ],
            ['label', 'x', 'variant', 'reason', 'evac', 'criterion'],
            'csv',
        )
    else:
        json.dump(report.as_dict(), out, indent=4)
        out.write('\n')
    logger.info('certified worst case %s', report.certified_max)
    return EXIT_OK


def verify_cmd(args, out):
    params = load_params(args.params)
    checks = verify.run(params, grid=args.grid, scan_grid=args.scan, threads=args.threads)
    if args.format == 'rst':
        rst.checks.generate(BlockWriter(out), checks)
    else:
        write_records(
            out,
            [c.as_dict() for c in checks],
            ['name', 'expected', 'computed', 'tolerance', 'source', 'pass'],
            args.format,
        )
    failed = [c.name for c in checks if not c.passed]
    if failed:
        logger.warning('%s of %s checks failed: %s', len(failed), len(checks), ', '.join(failed))
        return EXIT_VERIFY_FAILED
    return EXIT_OK


def optimize_cmd(args, out):
    seed = load_params(args.params)
    if args.config:
        with open(args.config) as fo:
            try:
                config = load_config(fo)
            except ValueError as ex:
                raise InvalidParams(['search config "{0}": {1}'.format(args.config, ex)])
    else:
        config = SearchConfig()
    config = dataclasses.replace(config, threads=args.threads)
    result = pattern_search(seed, config)
    dump(result.params, out)
    if args.log:
        with open(args.log, 'w') as fo:
            result.write_log(fo)
    logger.info(
        'objective %s after %s evals (certified %s)', result.value, result.evals, result.certified,
    )
    return EXIT_OK


def export_cmd(args, out):
    params = ensure_valid(load_params(args.params))
    build, columns = EXPORTS[args.what]
    write_records(out, build(params, args), columns, args.format)
    return EXIT_OK


# main

def _common_parser(suppress=False):
    # the sub-command copies leave options given before the sub-command alone
    def default(value):
        return argparse.SUPPRESS if suppress else value

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        '-l', '--log-level',
        choices=['debug', 'info', 'warn', 'error'],
        default=default(logging.WARNING),
        action=LogLevelAction,
    )
    common.add_argument(
        '-p', '--params',
        metavar='PATH',
        default=default('paper'),
        help='PATH to params JSON or a builtin ({0}). Defaults to paper.'.format(
            ', '.join(sorted(BUILTIN))),
    )
    common.add_argument(
        '-o', '--out',
        metavar='PATH',
        default=default(None),
        help='PATH to write to. Defaults to stdout.',
    )
    common.add_argument(
        '--threads',
        metavar='N',
        type=int,
        env_var='EVAC_THREADS',
        default=default('1'),
        action=EnvironmentVarAction,
        help='Worker threads for scans. Defaults to $EVAC_THREADS or 1.',
    )
    return common


def create_arg_parser():
    parents = [_common_parser(suppress=True)]
    parser = argparse.ArgumentParser(prog='evac', parents=[_common_parser()])
    sub_parsers = parser.add_subparsers(title='sub-commands', dest='name')
    sub_parsers.required = True

    # evaluate
    command = sub_parsers.add_parser('evaluate', parents=parents)
    command.add_argument('-x', '--exit-arc', type=float, default=None, metavar='X')
    command.add_argument('--after-cut', type=int, default=None, metavar='I')
    command.set_defaults(command=evaluate_cmd, format='json')

    # worst-case
    command = sub_parsers.add_parser('worst-case', parents=parents)
    command.add_argument('-g', '--grid', type=int, default=10000)
    command.add_argument('--scan', type=int, default=100000, help='Dense scan size, 0 disables.')
    command.add_argument('-f', '--format', choices=['json', 'csv', 'rst'], default='json')
    command.set_defaults(command=worst_case_cmd)

    # verify
    command = sub_parsers.add_parser('verify', parents=parents)
    command.add_argument('-g', '--grid', type=int, default=10000)
    command.add_argument('--scan', type=int, default=100000)
    command.add_argument('-f', '--format', choices=['json', 'csv', 'rst'], default='csv')
    command.set_defaults(command=verify_cmd)

    # optimize
    command = sub_parsers.add_parser('optimize', parents=parents)
    command.add_argument('-c', '--config', metavar='PATH', default=None)
    command.add_argument('--log', metavar='PATH', default=None, help='PATH for the CSV run log.')
    command.set_defaults(command=optimize_cmd, format='json')

    # export
    command = sub_parsers.add_parser('export', parents=parents)
    command.add_argument(
        '-w', '--what',
        choices=sorted(EXPORTS),
        default='trajectory',
    )
    command.add_argument('-f', '--format', choices=['json', 'csv'], default='csv')
    command.add_argument('-r', '--resolution', type=float, default=1e-3)
    command.set_defaults(command=export_cmd)

    return parser


def _open_out(path):
    if path is None:
        return sys.stdout, False
    return open(path, 'w'), True


def main(argv=None):
    parser = create_arg_parser()
    args = parser.parse_args(argv)

    logger = logging.getLogger()
    if not logger.handlers:
        formatter = logging.Formatter('%(asctime)s : %(name)s : %(message)s')
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(formatter)
        logger.addHandler(handler)
    logger.setLevel(args.log_level)

    try:
        out, close = _open_out(args.out)
    except OSError as ex:
        logger.error('cannot write "%s": %s', args.out, ex)
        return EXIT_IO
    try:
        return args.command(args, out)
    except InvalidParams as ex:
        logger.error('%s', ex)
        return EXIT_BAD_PARAMS
    except (MeetingError, SpecialPointError) as ex:
        logger.error('%s', ex)
        return EXIT_SOLVER
    except OSError as ex:
        logger.error('%s', ex)
        return EXIT_IO
    finally:
        if close:
            out.close()


if __name__ == '__main__':
    sys.exit(main())
