#================================================================================
#    This file is part of pyEulerian.
#    The software package is released under the BSD 2-Clause (FreeBSD) License.
#
#    Copyright (c) by the pyEulerian developers
#================================================================================

# Command-line front end.
#
#   triangle    rows of the classical, general or q triangle, or one entry (--n, --k)
#   qtriangle   triangle --kind q
#   poly        A_n(t), T_n(t,a,d) or A_n(t,q), optionally evaluated at --t
#   powersum    sum_{i=1}^m t^i (a+(i-1)d)^n
#   verify      run a verification suite and print the report
#
# Machine output goes to the output stream only, diagnostics go through
# logging to stderr. Exit codes: 0 success, 1 a verification failed,
# 2 usage error, 3 enumeration bound exceeded.

import sys
import csv
import json
import logging
import argparse
from fractions import Fraction
from .Core.tools import ArgumentError, ResourceError, parse_rat, format_rat
from .Core.poly import Poly
from .Core.classical import classical_triangle, classical_number_closed, classical_poly
from .Core.general import Progression, general_triangle, general_number_closed, general_poly
from .Core.general import general_power_sum_check
from .Core.qeuler import q_triangle, q_poly, q_poly_at
from .Validation.oracle import direct_weighted_sum
from .Validation.conf import verify_conf, DEFAULT_GRID
from .Validation.suite import verify_suite, SUITES

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3

KINDS = ('classical', 'general', 'q')
FORMATS = ('json', 'csv', 'plain')


def _rat(text):
    try:
        return parse_rat(text)
    except ArgumentError as e:
        raise argparse.ArgumentTypeError(str(e))



def _grid(text):
    '''"a:d;a:d" to a tuple of (a, d) Fractions.'''
    pairs = []
    for item in text.split(';'):
        if item.count(':') != 1:
            raise argparse.ArgumentTypeError('grid entries are "a:d", got %r' % item)
        a, d = item.split(':')
        pairs.append((_rat(a), _rat(d)))
    return tuple(pairs)



def build_parser():
    parser = argparse.ArgumentParser(prog='pyEulerian',
                                     description='Exact Eulerian numbers, polynomials and identity checks.')
    parser.add_argument('-v', '--verbose', action='count', default=0,
                        help='log INFO (-v) or DEBUG (-vv) messages to stderr')
    commands = parser.add_subparsers(dest='command', metavar='command')
    commands.required = True

    p = commands.add_parser('triangle', help='rows of a triangle, or a single entry')
    p.add_argument('--kind', choices=KINDS, default='classical')
    _add_triangle_args(p, general=True)
    p.set_defaults(func=_triangle_command)

    p = commands.add_parser('qtriangle', help='rows of the q-Eulerian triangle')
    _add_triangle_args(p, general=False)
    p.set_defaults(func=_triangle_command, kind='q', a=None, d=None)

    p = commands.add_parser('poly', help='an Eulerian polynomial as its coefficient list')
    p.add_argument('--kind', choices=KINDS, default='classical')
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--a', type=_rat)
    p.add_argument('--d', type=_rat)
    p.add_argument('--t', type=_rat, help='also evaluate at t')
    p.add_argument('--x', type=_rat, help='specialise q (kind q)')
    p.add_argument('--format', choices=FORMATS, default='plain')
    p.set_defaults(func=_poly_command)

    p = commands.add_parser('powersum', help='sum_{i=1}^m t^i (a+(i-1)d)^n')
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--m', type=int, required=True)
    p.add_argument('--a', type=_rat, default=Fraction(1))
    p.add_argument('--d', type=_rat, default=Fraction(1))
    p.add_argument('--t', type=_rat, default=Fraction(1))
    p.add_argument('--format', choices=FORMATS, default='plain')
    p.set_defaults(func=_powersum_command)

    p = commands.add_parser('verify', help='run a verification suite')
    p.add_argument('--suite', choices=('all',) + SUITES, default='all')
    p.add_argument('--max-n', dest='max_n', type=int)
    p.add_argument('--max-m', dest='max_m', type=int, default=30)
    p.add_argument('--order', type=int, default=10)
    p.add_argument('--grid', type=_grid, default=DEFAULT_GRID, help='progressions as "a:d;a:d"')
    p.add_argument('--slow', action='store_true', help='raise the enumeration bounds to 10 (oracle) and 7 (q)')
    p.add_argument('--format', choices=FORMATS, default='plain')
    p.set_defaults(func=_verify_command)
    return parser



def _add_triangle_args(p, general):
    p.add_argument('--max-n', dest='max_n', type=int, default=5)
    p.add_argument('--n', type=int, help='row of a single entry')
    p.add_argument('--k', type=int, help='column of a single entry')
    if general:
        p.add_argument('--a', type=_rat)
        p.add_argument('--d', type=_rat)
    p.add_argument('--x', type=_rat, help='evaluate q-entries at q = x')
    p.add_argument('--format', choices=FORMATS, default='plain')



def _progression(args):
    if args.a is None or args.d is None:
        raise ArgumentError('kind general needs both --a and --d')
    return Progression(args.a, args.d)



#-----------------------------------------------------------------------------
# output
#-----------------------------------------------------------------------------
def _cell(value):
    # a Rat, or a q-polynomial written as its coefficient list joined by ';'
    if isinstance(value, Poly):
        return ';'.join(value.to_strings()) or '0'
    return format_rat(value)



def _json_value(value):
    if isinstance(value, Poly):
        return value.to_strings()
    if isinstance(value, (list, tuple)):
        return [_json_value(v) for v in value]
    return format_rat(value)



def write_json(out, document):
    out.write(json.dumps(document, separators=(',', ':')) + '\n')



def write_rows(out, rows, fmt):
    if fmt == 'csv':
        writer = csv.writer(out, lineterminator='\n')
        for row in rows:
            writer.writerow([_cell(v) for v in row])
    else:
        for row in rows:
            out.write(' '.join(_cell(v) for v in row) + '\n')



#-----------------------------------------------------------------------------
# commands
#-----------------------------------------------------------------------------
def _triangle_command(args, out):
    single = args.n is not None or args.k is not None
    if single and (args.n is None or args.k is None):
        raise ArgumentError('a single entry needs both --n and --k')
    if single:
        return _entry(args, out)
    if args.max_n < 0 or (args.kind == 'q' and args.max_n < 1):
        raise ArgumentError('--max-n out of range: %d' % args.max_n)

    document = {'kind': args.kind, 'max_n': args.max_n}
    if args.kind == 'classical':
        tri = classical_triangle(args.max_n)
        rows = [tri.row(n) for n in range(1, args.max_n + 1)]
    elif args.kind == 'general':
        prog = _progression(args)
        tri = general_triangle(prog, args.max_n)
        rows = [tri.row(n) for n in range(args.max_n + 1)]
        document['a'] = format_rat(prog.a)
        document['d'] = format_rat(prog.d)
    else:
        tri = q_triangle(args.max_n)
        rows = [tri.rows[n] for n in range(1, args.max_n + 1)]
        if args.x is not None:
            rows = tri.at(args.x)
            document['x'] = format_rat(args.x)

    if args.format == 'json':
        document['rows'] = [_json_value(list(r)) for r in rows]
        write_json(out, document)
    else:
        write_rows(out, rows, args.format)
    return EXIT_OK



def _entry(args, out):
    n, k = args.n, args.k
    document = {'kind': args.kind, 'n': n}
    status = EXIT_OK
    if args.kind == 'classical':
        value = classical_triangle(max(n, 0)).entry(n, k)
        if n >= 1 and classical_number_closed(n, k) != value:
            logger.error('closed form disagrees with the recurrence at (%d, %d)', n, k)
            status = EXIT_FAIL
    elif args.kind == 'general':
        prog = _progression(args)
        value = general_triangle(prog, max(n, 0)).entry(n, k)
        if general_number_closed(n, k, prog) != value:
            logger.error('closed form disagrees with the recurrence at (%d, %d)', n, k)
            status = EXIT_FAIL
        document['a'] = format_rat(prog.a)
        document['d'] = format_rat(prog.d)
    else:
        value = q_triangle(max(n, 1)).entry(n, k)
        if args.x is not None:
            value = value(args.x)
            document['x'] = format_rat(args.x)
    document['k'] = k
    if args.format == 'json':
        document['value'] = _json_value(value)
        write_json(out, document)
    else:
        out.write(_cell(value) + '\n')
    return status



def _poly_command(args, out):
    n = args.n
    document = {'kind': args.kind, 'n': n}
    if args.kind == 'classical':
        poly = classical_poly(n)
    elif args.kind == 'general':
        prog = _progression(args)
        poly = general_poly(n, prog)
        document['a'] = format_rat(prog.a)
        document['d'] = format_rat(prog.d)
    else:
        poly = q_poly(n)
        if args.x is not None:
            poly = q_poly_at(poly, args.x)
            document['x'] = format_rat(args.x)
        elif args.t is not None:
            raise ArgumentError('poly --kind q --t needs a value for q (--x)')

    if isinstance(poly, Poly):
        coefficients = list(poly.coefficients) or [Fraction(0)]
    else:
        coefficients = list(poly)
    value = poly(args.t) if args.t is not None else None

    if args.format == 'json':
        document['coefficients'] = _json_value(coefficients)
        if value is not None:
            document['t'] = format_rat(args.t)
            document['value'] = format_rat(value)
        write_json(out, document)
    elif args.format == 'csv':
        write_rows(out, [coefficients] + ([[value]] if value is not None else []), 'csv')
    else:
        write_rows(out, [coefficients], 'plain')
        if isinstance(poly, Poly):
            out.write(str(poly) + '\n')
        else:
            for k, entry in enumerate(poly):
                out.write('t^%d: %s\n' % (k, entry))
        if value is not None:
            out.write(format_rat(value) + '\n')
    return EXIT_OK



def _powersum_command(args, out):
    if args.n < 0 or args.m < 0:
        raise ArgumentError('--n and --m must be nonnegative')
    prog = Progression(args.a, args.d)
    value = direct_weighted_sum(prog, args.n, args.m)(args.t)
    status = EXIT_OK
    if args.t == 1 and args.n >= 1 and args.m >= 1:
        check = general_power_sum_check(prog, args.n, args.m)
        if not check:
            logger.error('%s', check)
            status = EXIT_FAIL
    if args.format == 'json':
        write_json(out, {'kind': 'general', 'n': args.n, 'a': format_rat(prog.a), 'd': format_rat(prog.d),
                         'm': args.m, 't': format_rat(args.t), 'value': format_rat(value)})
    else:
        out.write(format_rat(value) + '\n')
    return status



def _verify_command(args, out):
    conf = verify_conf(max_n=args.max_n, max_m=args.max_m, order=args.order,
                       grid=args.grid, slow=args.slow)
    report = verify_suite(args.suite, conf)
    if args.format == 'json':
        write_json(out, report.to_dict())
    elif args.format == 'csv':
        writer = csv.writer(out, lineterminator='\n')
        for record in report.records:
            row = record.to_dict()
            params = ';'.join('%s=%s' % kv for kv in row['params'].items())
            writer.writerow([row['identity'], params, row['status'], row.get('index', ''),
                             row.get('lhs', ''), row.get('rhs', '')])
    else:
        out.write(str(report) + '\n')
    if report.partial:
        return EXIT_RESOURCE
    return EXIT_OK if report.failed == 0 else EXIT_FAIL



def _setup_logging(verbose):
    level = logging.WARNING
    if verbose == 1:
        level = logging.INFO
    elif verbose >= 2:
        level = logging.DEBUG
    logging.basicConfig(stream=sys.stderr, level=level, format='%(levelname)s %(name)s: %(message)s')



def run(argv=None, out=None):
    '''
    Parse argv and run one command.

    :param argv: argument list without the program name (sys.argv[1:] if None)
    :param out: text stream for the machine output (sys.stdout if None)
    :return: exit code
    '''
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    _setup_logging(args.verbose)
    try:
        return args.func(args, out)
    except ArgumentError as e:
        logger.error('%s', e)
        return EXIT_USAGE
    except ResourceError as e:
        logger.error('%s', e)
        return EXIT_RESOURCE



def main():
    sys.exit(run())
