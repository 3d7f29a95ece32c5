import sys
import time
import logging
import argparse
from typing import Any, NamedTuple

import pandas as pd
import sympy

from .._base.errors import CoxlabError
from ..factorizations import (
    dihedral_reflection_tower, enumerate_series, finer_formula_Bn, finer_formula_Gr1n,
    frobenius_crosscheck_Sn, gt_crosscheck_Sn, verify_dihedral, verify_main_theorem,
    verify_reduced_count)
from ..groups import build_group
from ..laplacians import rrt_check
from ..lattices import (
    enumerate_flats, verify_coxeter_identity, verify_laplacian_recursion, verify_matrix_forest)
from ..scalars import parse_weights
from ..symfuncs import (
    CharacterTable, Partition, lr_coefficient, mn_character, verify_hook_restriction,
    verify_quasihook_restriction)
from ..towers import (
    WeightSystem, all_standard_towers, jm_spectrum_check, standard_tower, tower_spectrum)
from ..utils import (
    VerificationReport, budget_override, dump, enable_logging, merge_reports, to_json)
from ..zonotopes import (
    baumeister_wegener_check, shephard_sum, unimodular_check, verify_volume_theorem_E6,
    root_catalog, volume_string)


__all__ = (
    'CommandResult',
    'UsageError',
    'build_parser',
    'main',
    'run',
)


EXIT_CODES = {'ok': 0, 'discrepancy': 1, 'error': 2}


class UsageError(CoxlabError):
    pass


class CommandResult(NamedTuple):
    r"""

    The outcome of a single command.

    Parameters
    ----------
    status : {'ok', 'discrepancy', 'error'}

        The status, which determines the exit code (0, 1 or 2).

    payload : object

        The library result: a :class:`VerificationReport`, a :class:`pandas.DataFrame` for
        tables, or any object that :func:`coxlab.utils.to_json` serializes.

    timing : float

        Wall time in seconds.

    """
    status: str
    payload: Any
    timing: float

    @property
    def exit_code(self):
        return EXIT_CODES[self.status]

    def render(self):
        r""" the text written to stdout: CSV for tables, JSON otherwise """
        if isinstance(self.payload, pd.DataFrame):
            return self.payload.to_csv()
        return to_json(self.payload)

    def to_json(self):
        return {'status': self.status, 'payload': self.payload, 'timing': self.timing}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _partition(text):
    try:
        return Partition([int(x) for x in text.split(',') if x.strip()])
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"malformed partition {text!r}: {e}")


def _weights(text):
    try:
        return parse_weights(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))


def _chain(text):
    try:
        return tuple(int(x) for x in text.split(',') if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"malformed divisor chain: {text!r}")


# group-based commands


def _group(args):
    return build_group(args.group, enumerate=False)


def _towers(args, G):
    if getattr(args, 'all_standard_towers', False):
        return all_standard_towers(G)
    return [standard_tower(G, args.tower)]


def cmd_group(args):
    G = _group(args)
    card = G.card()
    if args.coxeter_class:
        C = G.coxeter_class()
        card['coxeter_class'] = {'size': C.size, 'representative': repr(G.coxeter_element())}
    return card


def cmd_tower_spectrum(args):
    G = _group(args)
    T = standard_tower(G, args.tower)
    return {'tower': T, 'spectrum': tower_spectrum(G, T)}


def cmd_factor_series(args):
    G = _group(args)
    T = standard_tower(G, args.tower)
    return enumerate_series(G, T.weight_system(args.weights), args.target, L=args.length)


def cmd_lattice(args):
    lattice = enumerate_flats(_group(args))
    return lattice.to_frame() if args.emit == 'csv' else lattice


# verifications


def verify_mainthm(args):
    G = _group(args)
    reports = [verify_main_theorem(G, T, L=args.length) for T in _towers(args, G)]
    if len(reports) == 1:
        return reports[0]
    return merge_reports(f"mainthm[{G.descriptor}|all]", reports)


def verify_reduced(args):
    G = _group(args)
    return verify_reduced_count(G, standard_tower(G, args.tower), args.weights)


def verify_matrix_forest_cmd(args):
    G = _group(args)
    reports = [verify_matrix_forest(G, T) for T in _towers(args, G)]
    if len(reports) == 1:
        return reports[0]
    return merge_reports(f"matrix_forest[{G.descriptor}|all]", reports)


def verify_coxeter_identity_cmd(args):
    return verify_coxeter_identity(_group(args), norms=args.norms)


def verify_recursion(args):
    return verify_laplacian_recursion(_group(args))


def verify_frobenius(args):
    return frobenius_crosscheck_Sn(args.n, L=args.length)


def verify_gt(args):
    return gt_crosscheck_Sn(args.n, L=args.length)


def verify_finer_bn(args):
    return finer_formula_Bn(args.n, args.weights, L=args.length)


def verify_finer_gr1n(args):
    return finer_formula_Gr1n(args.r, args.n, args.weights, L=args.length)


def verify_dihedral_cmd(args):
    if args.chain:
        return dihedral_reflection_tower(args.m, args.chain, L=args.length)
    return verify_dihedral(args.m, args.weights, L=args.length or 6)


def verify_hook(args):
    return verify_hook_restriction(args.n, args.k, args.a)


def verify_quasihook(args):
    return verify_quasihook_restriction(args.n, args.k, args.a)


def verify_jm(args):
    G = _group(args)
    reports = [jm_spectrum_check(G, T, rep=args.rep) for T in _towers(args, G)]
    if len(reports) == 1:
        return reports[0]
    return merge_reports(f"jm_spectrum[{G.descriptor}|all]", reports)


def verify_rrt(args):
    G = _group(args)
    return rrt_check(G, WeightSystem.per_reflection(G, args.weights))


# root systems and characters


def cmd_zonotope(args):
    if args.check == 'theorem':
        if args.type != 'E6':
            raise UsageError("--check theorem is only available for --type E6")
        return verify_volume_theorem_E6()
    if args.check == 'unimodular':
        return unimodular_check(args.type)
    if args.check == 'baumeister-wegener':
        return baumeister_wegener_check(args.type)
    cat = root_catalog(args.type)
    total = shephard_sum(cat)
    return {'shephard_sum': total, 'volume': volume_string(
        total * sympy.sqrt(sympy.Integer(int(cat.gram_det()))))}


def cmd_mn(args):
    return {'lambda': list(args.lam), 'mu': list(args.mu), 'value': mn_character(args.lam, args.mu)}


def cmd_lr(args):
    return {'lambda': list(args.lam), 'alpha': list(args.alpha), 'beta': list(args.beta),
            'value': lr_coefficient(args.lam, args.alpha, args.beta)}


def cmd_chartable(args):
    table = CharacterTable(args.n)
    return table.to_frame() if args.format == 'csv' else table


# parser


def _add_group(p, tower=True, all_towers=False):
    p.add_argument('--group', required=True, help="group descriptor, e.g. B3, I2(5), G(3,1,2)")
    if tower:
        p.add_argument('--tower', default=None,
                       help="generator ordering of the standard tower, e.g. 1,3,2")
    if all_towers:
        p.add_argument('--all-standard-towers', action='store_true',
                       help="check every generator ordering")


def _add_length(p, default=None):
    p.add_argument('--length', type=int, default=default, help="truncation order of the series")


def _add_hook(p):
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--k', type=int, required=True)
    p.add_argument('--a', type=int, required=True)


def _add_verify(subparsers):
    verify = subparsers.add_parser('verify', help="check an identity, exit 1 on a discrepancy")
    checks = verify.add_subparsers(dest='check', metavar='CHECK')
    checks.required = True

    p = checks.add_parser('mainthm', help="product formula for tower weights")
    _add_group(p, all_towers=True)
    _add_length(p)
    p.set_defaults(func=verify_mainthm)

    p = checks.add_parser('reduced', help="reduced factorization count")
    _add_group(p)
    p.add_argument('--weights', type=_weights, default=None)
    p.set_defaults(func=verify_reduced)

    p = checks.add_parser('matrix-forest', help="char poly as a sum over flats")
    _add_group(p, all_towers=True)
    p.set_defaults(func=verify_matrix_forest_cmd)

    p = checks.add_parser('coxeter-identity', help="(h + x)^n as a sum over flats")
    _add_group(p, tower=False)
    p.add_argument('--norms', choices=('full', 'one', 'minus_one'), default='full')
    p.set_defaults(func=verify_coxeter_identity_cmd)

    p = checks.add_parser('recursion', help="Laplacian recursion over flats")
    _add_group(p, tower=False)
    p.set_defaults(func=verify_recursion)

    p = checks.add_parser('frobenius', help="character-theoretic evaluation for S_n")
    p.add_argument('--n', type=int, required=True)
    _add_length(p)
    p.set_defaults(func=verify_frobenius)

    p = checks.add_parser('gt', help="Gelfand-Tsetlin spectrum for S_n")
    p.add_argument('--n', type=int, required=True)
    _add_length(p)
    p.set_defaults(func=verify_gt)

    p = checks.add_parser('finer-bn', help="fully weighted formula for B_n")
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--weights', type=_weights, default=None)
    _add_length(p)
    p.set_defaults(func=verify_finer_bn)

    p = checks.add_parser('finer-gr1n', help="hyperplane-weighted formula for G(r,1,n)")
    p.add_argument('--r', type=int, required=True)
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--weights', type=_weights, default=None)
    _add_length(p)
    p.set_defaults(func=verify_finer_gr1n)

    p = checks.add_parser('dihedral', help="closed form for I2(m)")
    p.add_argument('--m', type=int, required=True)
    p.add_argument('--weights', type=_weights, default=None)
    p.add_argument('--chain', type=_chain, default=None, help="divisor chain, e.g. 2,6,12")
    _add_length(p)
    p.set_defaults(func=verify_dihedral_cmd)

    p = checks.add_parser('hook-restriction', help="restriction of a hook to S_a x S_(n-a)")
    _add_hook(p)
    p.set_defaults(func=verify_hook)

    p = checks.add_parser('quasihook-restriction', help="restriction of a quasi-hook")
    _add_hook(p)
    p.set_defaults(func=verify_quasihook)

    p = checks.add_parser('jm-spectrum', help="integrality of the Jucys-Murphy spectra")
    _add_group(p, all_towers=True)
    p.add_argument('--rep', choices=('reflection', 'regular'), default='reflection')
    p.set_defaults(func=verify_jm)

    p = checks.add_parser('rrt', help="L = R Omega R* G")
    _add_group(p, tower=False)
    p.add_argument('--weights', type=_weights, default=None)
    p.set_defaults(func=verify_rrt)


def build_parser():
    r"""

    Build the argument parser of the ``coxlab`` command.

    Returns
    -------
    parser : argparse.ArgumentParser

        The parser. Usage errors raise :class:`UsageError` instead of exiting.

    """
    parser = _Parser(
        prog='coxlab', description="Weighted reflection factorizations in well-generated groups.")
    parser.add_argument('-v', '--verbose', action='store_true', help="log to stderr")
    parser.add_argument('--dump', metavar='PATH', default=None,
                        help="also write the result to PATH (lz4-compressed pickle)")
    parser.add_argument('--group-cap', type=int, default=None,
                        help="maximal group order (env: COXLAB_GROUP_CAP)")
    parser.add_argument('--budget-mb', type=int, default=None,
                        help="memory budget in MiB (env: COXLAB_BUDGET_MB)")
    parser.add_argument('--subset-cap', type=int, default=None,
                        help="maximal number of enumerated subsets (env: COXLAB_SUBSET_CAP)")
    subparsers = parser.add_subparsers(dest='command', metavar='COMMAND')
    subparsers.required = True

    p = subparsers.add_parser('group', help="summary data of a group")
    _add_group(p, tower=False)
    p.add_argument('--coxeter-class', action='store_true', help="include the Coxeter class")
    p.set_defaults(func=cmd_group)

    p = subparsers.add_parser('tower-spectrum', help="eigenvalues of the tower Laplacian")
    _add_group(p)
    p.set_defaults(func=cmd_tower_spectrum)

    p = subparsers.add_parser('factor-series', help="brute-force factorization series")
    _add_group(p)
    p.add_argument('--weights', type=_weights, default=None, help="numeric tower weights")
    p.add_argument('--target', choices=('class', 'element'), default='class')
    _add_length(p)
    p.set_defaults(func=cmd_factor_series)

    _add_verify(subparsers)

    p = subparsers.add_parser('lattice', help="intersection lattice of a reflection arrangement")
    _add_group(p, tower=False)
    p.add_argument('--emit', choices=('json', 'csv'), default='json')
    p.set_defaults(func=cmd_lattice)

    p = subparsers.add_parser('zonotope', help="root zonotope volume")
    p.add_argument('--type', required=True, help="Cartan type, e.g. E6")
    p.add_argument('--check', choices=('theorem', 'unimodular', 'baumeister-wegener'),
                   default=None)
    p.set_defaults(func=cmd_zonotope)

    p = subparsers.add_parser('mn', help="character value by the Murnaghan-Nakayama rule")
    p.add_argument('--lambda', dest='lam', type=_partition, required=True)
    p.add_argument('--mu', type=_partition, required=True)
    p.set_defaults(func=cmd_mn)

    p = subparsers.add_parser('lr', help="Littlewood-Richardson coefficient")
    p.add_argument('--lambda', dest='lam', type=_partition, required=True)
    p.add_argument('--alpha', type=_partition, required=True)
    p.add_argument('--beta', type=_partition, required=True)
    p.set_defaults(func=cmd_lr)

    p = subparsers.add_parser('chartable', help="character table of S_n")
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--format', choices=('json', 'csv'), default='json')
    p.set_defaults(func=cmd_chartable)
    return parser


def run(argv=None):
    r"""

    Parse the arguments and dispatch to the library.

    Parameters
    ----------
    argv : list of str, optional

        The arguments, without the program name. Defaults to :data:`sys.argv`.

    Returns
    -------
    result : CommandResult

        The status and the payload. Library errors do not propagate: they give status
        ``'error'`` with the error class and message as payload.

    """
    logger = logging.getLogger('coxlab.cli.run')
    tic = time.perf_counter()
    try:
        args = build_parser().parse_args(sys.argv[1:] if argv is None else argv)
        if args.verbose:
            enable_logging('coxlab', level=logging.INFO)
        with budget_override(
                group_cap=args.group_cap, budget_mb=args.budget_mb, subset_cap=args.subset_cap):
            payload = args.func(args)
    except (CoxlabError, ValueError) as e:
        logger.debug(f"{type(e).__name__}: {e}")
        return CommandResult(
            'error', {'error': type(e).__name__, 'message': str(e)}, time.perf_counter() - tic)
    status = payload.status if isinstance(payload, VerificationReport) else 'ok'
    result = CommandResult(status, payload, time.perf_counter() - tic)
    logger.info(f"{args.command}: {status} in {result.timing:.3f}s")
    if args.dump:
        dump(result, args.dump)
    return result


def main(argv=None):
    r"""

    Entry point of the ``coxlab`` command.

    Writes the payload to stdout (JSON, or CSV for tables) and exits with 0 if ok, 1 on a
    discrepancy and 2 on a usage or library error. Errors are written to stderr as
    ``coxlab: <ErrorClass>: <message>``.

    """
    result = run(argv)
    if result.status == 'error':
        print(f"coxlab: {result.payload['error']}: {result.payload['message']}", file=sys.stderr)
    else:
        print(result.render())
    return result.exit_code
