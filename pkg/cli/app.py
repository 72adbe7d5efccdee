# File: cli/app.py
"""Command-line surface: one subcommand per invocation.

Exit codes: 0 success (feasible / holds), 1 a certified violation,
2 usage or input errors, 3 numeric failures. Diagnostics go to stderr,
machine output to stdout or --out.
"""
import argparse
import os
import sys

from config.config import config
from utils.exceptions import (BadInput, ExactnessError, FreeRadError, InsufficientDepth, NumericFailure,
                              SingularMoments)
from utils.linalg import scale_of
from utils.logger import configure_logging, get_logger, log_ok
from utils.scalars import format_scalar, is_exact, parse_scalar, require_exact, scalar_to_json, to_scalar
from cli.io import load_payload, parse_measure, parse_radial_function
from cli.models import EXIT_OK, EXIT_VIOLATION, Command, CommandResult
from cli.utils import render_csv, render_json, render_text
from classify.bounds import linear_bound_report
from classify.decisions import decide_cnd, decide_pd, schoenberg
from moments.models import AtomicMeasure, RadialFunction, Role
from moments.quadrature import atoms_from_moments
from moments.synthesis import synthesize_phi, synthesize_psi
from moments.transforms import phi_to_moments, psi_to_moments
from oracle.convolution import laplacian, radial_convolve, sphere_measure, sphere_recurrence
from oracle.gram import gram_cnd, gram_pd
from oracle.models import ConvolutionCheck
from spherical.functions import psi_one, psi_table, s_from_z, spherical_closed_form, spherical_table
from spherical.models import SphericalParams
from words.models import Rank

logger = get_logger(__name__)

# entrywise agreement of float identities checked by convolve-check
IDENTITY_TOLERANCE = 1e-12


def _settings():
    name = os.getenv('FREERAD_CONFIG', 'default')
    if name not in config:
        raise BadInput(f"Unknown FREERAD_CONFIG profile {name!r}; expected one of {', '.join(config)}")
    return config[name]


def _tol(args, settings):
    return settings.TOLERANCE if args.tol is None else args.tol


def _rank(args, fallback=None):
    if args.rank is not None:
        return Rank.parse(args.rank)
    if fallback is not None:
        return fallback
    raise BadInput("--rank is required")


def _required(value, flag):
    if value is None:
        raise BadInput(f"{flag} is required")
    return value


def _scalar(args, text, flag):
    """Flag value in the selected backend: Fraction with --exact, float otherwise"""
    return to_scalar(parse_scalar(_required(text, flag)), exact=bool(args.exact))


def _backend(values, args):
    return tuple(to_scalar(v, exact=bool(args.exact)) for v in values)


def _ensure_exact(values, what, args):
    if args.exact:
        for value in values:
            require_exact(value, what)


def _load_function(args):
    """Radial function from --in, with --rank / --role / --depth applied and the backend selected"""
    f = parse_radial_function(load_payload(_required(args.source, '--in')))
    rank = _rank(args, f.rank)
    role = Role(args.role) if args.role else f.role
    values = f.values
    if args.depth is not None:
        if args.depth < 0:
            raise BadInput(f"--depth must be >= 0, got {args.depth}")
        if args.depth > f.depth:
            raise InsufficientDepth(f"--depth {args.depth} exceeds the {f.depth} provided lengths")
        values = values[:args.depth + 1]
    return RadialFunction(rank, _backend(values, args), role)


def _load_measure(args):
    measure = parse_measure(load_payload(_required(args.source, '--in')))
    return AtomicMeasure.from_pairs(zip(_backend(measure.nodes, args), _backend(measure.weights, args)))


def _table_result(f, summary, **extra):
    payload = f.to_dict()
    payload.update({key: scalar_to_json(value) for key, value in extra.items()})
    return CommandResult(payload, ('n', 'value'), list(enumerate(f.values)), tuple(summary))


def cmd_eval_spherical(args, settings):
    rank = _rank(args)
    s = _scalar(args, args.s, '--s')
    depth = _required(args.depth, '--depth')
    if args.closed_form:
        values = [spherical_closed_form(rank, n, s) for n in range(depth + 1)]
        _ensure_exact(values, f"The Chebyshev form at q = {rank.q} (not a perfect square)", args)
    else:
        values = spherical_table(SphericalParams(rank, s), depth)
    f = RadialFunction(rank, tuple(values), Role.PHI)
    return _table_result(f, [f"# phi_s on F_{rank}, s = {format_scalar(s)}"], s=s)


def cmd_eval_psi(args, settings):
    rank = _rank(args)
    s = _scalar(args, args.s, '--s')
    values = psi_table(SphericalParams(rank, s), _required(args.depth, '--depth'))
    f = RadialFunction(rank, tuple(values), Role.PSI)
    return _table_result(f, [f"# psi_s on F_{rank}, s = {format_scalar(s)}"], s=s)


def cmd_psi_one(args, settings):
    rank = _rank(args)
    depth = _required(args.depth, '--depth')
    f = RadialFunction(rank, _backend([psi_one(rank, n) for n in range(depth + 1)], args), Role.PSI)
    return _table_result(f, [f"# psi_1 on F_{rank}"])


def cmd_synthesize_phi(args, settings):
    measure = _load_measure(args)
    f = synthesize_phi(_rank(args), measure, _required(args.depth, '--depth'))
    return _table_result(f, [f"# phi from {len(measure)} atoms, mass {format_scalar(measure.total_mass)}"])


def cmd_synthesize_psi(args, settings):
    measure = _load_measure(args)
    f = synthesize_psi(_rank(args), measure, _required(args.depth, '--depth'))
    return _table_result(f, [f"# psi from {len(measure)} atoms, mass {format_scalar(measure.total_mass)}"])


def _verdict_result(verdict):
    summary = [f"status: {verdict.status.value}", f"depth: {verdict.depth}"]
    witness = verdict.moment_verdict.witness
    if witness is not None:
        summary.append(f"witness: {witness.name} min eigenvalue {witness.min_eig:.6g}")
    rows = list(enumerate(verdict.moments.values)) if verdict.moments is not None else None
    status = EXIT_VIOLATION if verdict.certified_not else EXIT_OK
    return CommandResult(verdict.to_dict(), ('k', 'moment'), rows, tuple(summary), status)


def cmd_decide_pd(args, settings):
    return _verdict_result(decide_pd(_load_function(args), _tol(args, settings)))


def cmd_decide_cnd(args, settings):
    return _verdict_result(decide_cnd(_load_function(args), _tol(args, settings)))


def cmd_atoms(args, settings):
    """Gauss quadrature for the measure behind a phi or psi table, shrinking k until the Hankel matrix is definite"""
    f = _load_function(args)
    moments = phi_to_moments(f) if f.role is Role.PHI else psi_to_moments(f)
    k = args.k if args.k is not None else len(moments) // 2
    if k < 1:
        raise BadInput(f"--k must be >= 1, got {k}")

    measure = AtomicMeasure(())
    while k > 0:
        try:
            measure = atoms_from_moments(moments, k, _tol(args, settings))
            break
        except SingularMoments as e:
            logger.info(f"{e.message}; retrying with {k - 1} atoms")
            k -= 1
    _ensure_exact(measure.nodes + measure.weights, "Quadrature with irrational nodes", args)

    payload = measure.to_dict()
    payload.update({'k': k, 'role': f.role.value, 'moments': [scalar_to_json(m) for m in moments]})
    rows = [(atom.node, atom.weight) for atom in measure.atoms]
    summary = [f"# {k} atoms, mass {format_scalar(measure.total_mass)}"]
    return CommandResult(payload, ('s', 'w'), rows, tuple(summary))


def _oracle_function(args, rank, radius, role):
    if args.source:
        return _load_function(args)
    s = _scalar(args, args.s, '--in or --s')
    params = SphericalParams(rank, s)
    table = spherical_table(params, 2 * radius) if role is Role.PHI else psi_table(params, 2 * radius)
    return RadialFunction(rank, tuple(table), role)


def _gram_result(report):
    summary = [
        f"verdict: {report.verdict.value}",
        f"dim: {report.dim}",
        f"min eigenvalue: {report.min_eig:.6g}"
    ]
    return CommandResult(
        report.to_dict(), ('radius', 'dim', 'min_eig'),
        [(report.radius, report.dim, report.min_eig)], tuple(summary),
        EXIT_OK if report.holds else EXIT_VIOLATION
    )


def cmd_oracle_gram(args, settings):
    rank = _rank(args)
    radius = _required(args.radius, '--radius')
    f = _oracle_function(args, rank, radius, Role.PHI)
    return _gram_result(gram_pd(rank, radius, f, _tol(args, settings), args.cap))


def cmd_oracle_cnd(args, settings):
    rank = _rank(args)
    radius = _required(args.radius, '--radius')
    f = _oracle_function(args, rank, radius, Role.PSI)
    return _gram_result(gram_cnd(rank, radius, f, _tol(args, settings), args.cap))


def _compare(name, expected, actual, exact):
    errors = [abs(float(a - e)) for a, e in zip(actual, expected)]
    max_error = max(errors, default=0.0)
    if exact:
        passed = len(actual) == len(expected) and all(a == e for a, e in zip(actual, expected))
    else:
        passed = len(actual) == len(expected) and max_error <= IDENTITY_TOLERANCE * scale_of(expected)
    return ConvolutionCheck(name, tuple(expected), tuple(actual), max_error, passed)


def cmd_convolve_check(args, settings):
    """mu_1 * mu_n against the sphere recurrence, and L phi_s = s phi_s with --s"""
    rank = _rank(args).require_finite("convolve-check")
    radius = _required(args.radius, '--radius')
    if radius < 2 and args.s is None:
        raise BadInput("convolve-check needs --radius >= 2 (or --s with --radius >= 1)")

    checks = []
    unit = sphere_measure(rank, 1)
    for n in range(1, radius):
        actual = radial_convolve(rank, n + 1, unit, sphere_measure(rank, n), args.cap)
        expected = sphere_recurrence(rank, n)
        if not args.exact:
            actual, expected = _backend(actual, args), _backend(expected, args)
        checks.append(_compare(f"mu_1 * mu_{n}", expected, actual, bool(args.exact)))

    if args.s is not None:
        s = _scalar(args, args.s, '--s')
        table = spherical_table(SphericalParams(rank, s), radius)
        actual = laplacian(rank, radius, table, args.cap)
        expected = tuple(s * v for v in table[:radius])
        checks.append(_compare(f"L phi_s (s = {format_scalar(s)})", expected, actual, is_exact(s)))

    summary = [f"{check.name}: {'ok' if check.passed else 'MISMATCH'} (max error {check.max_error:.3g})" for check in checks]
    passed = all(check.passed for check in checks)
    payload = {'rank': rank.to_json(), 'radius': radius, 'checks': [check.to_dict() for check in checks], 'passed': passed}
    rows = [(check.name, check.max_error, check.passed) for check in checks]
    return CommandResult(payload, ('check', 'max_error', 'passed'), rows, tuple(summary),
                         EXIT_OK if passed else EXIT_VIOLATION)


def cmd_bound(args, settings):
    report = linear_bound_report(_load_function(args))
    summary = [f"c: {format_scalar(report.c)}", f"a: {format_scalar(report.a)}", f"holds: {str(report.holds).lower()}"]
    if report.violations:
        summary.append(f"violated at n = {', '.join(str(n) for n in report.violations)}")
    return CommandResult(report.to_dict(), ('n', 'margin'), list(enumerate(report.margins)), tuple(summary),
                         EXIT_OK if report.holds else EXIT_VIOLATION)


def cmd_schoenberg(args, settings):
    if args.exact:
        raise ExactnessError("exp(-t psi) is irrational in general; schoenberg is not available with --exact")
    t = _scalar(args, args.t, '--t')
    f = schoenberg(_load_function(args), t)
    return _table_result(f, [f"# exp(-t psi), t = {format_scalar(t)}"], t=t)


def cmd_s_from_z(args, settings):
    rank = _rank(args)
    z = _scalar(args, args.z, '--z')
    s = s_from_z(rank, z)
    _ensure_exact([s], "s(z) for non-integer z", args)
    payload = {'rank': rank.to_json(), 'z': scalar_to_json(z), 's': scalar_to_json(s)}
    return CommandResult(payload, ('z', 's'), [(z, s)], (f"s: {format_scalar(s)}",))


COMMANDS = {
    'eval-spherical': (cmd_eval_spherical, "spherical function values phi_s(0..depth)"),
    'eval-psi': (cmd_eval_psi, "psi_s(0..depth) = (1 - phi_s)/(1 - s)"),
    'psi-one': (cmd_psi_one, "psi_1(0..depth) in closed form"),
    'synthesize-phi': (cmd_synthesize_phi, "phi = int phi_s dmu from an atomic measure"),
    'synthesize-psi': (cmd_synthesize_psi, "psi = int psi_s dnu from an atomic measure"),
    'decide-pd': (cmd_decide_pd, "positive definiteness of a radial function at finite depth"),
    'decide-cnd': (cmd_decide_cnd, "conditional negative definiteness at finite depth"),
    'atoms': (cmd_atoms, "atomic representing measure by Gauss quadrature"),
    'oracle-gram': (cmd_oracle_gram, "Gram matrix test on a Cayley ball"),
    'oracle-cnd': (cmd_oracle_cnd, "Schoenberg kernel test on a Cayley ball"),
    'convolve-check': (cmd_convolve_check, "radial algebra identities by literal convolution"),
    'bound': (cmd_bound, "linear growth bound psi(n) <= c n"),
    'schoenberg': (cmd_schoenberg, "exp(-t psi) from a psi table"),
    's-from-z': (cmd_s_from_z, "eigenvalue s for the parameter z"),
}


def create_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--rank', help="finite rank r >= 1 or 'inf'")
    common.add_argument('--depth', type=int)
    common.add_argument('--s', help="eigenvalue; 'p/q' is exact")
    common.add_argument('--tol', type=float, help="PSD tolerance (default FREERAD_TOL or 1e-9)")
    common.add_argument('--radius', type=int)
    common.add_argument('--exact', action='store_true', help="rational backend")
    output = common.add_mutually_exclusive_group()
    output.add_argument('--json', action='store_true')
    output.add_argument('--csv', action='store_true')
    common.add_argument('--in', dest='source', metavar='FILE', help="input payload ('-' for stdin)")
    common.add_argument('--out', dest='target', metavar='FILE')
    common.add_argument('--k', type=int, help="number of atoms for 'atoms'")
    common.add_argument('--t', help="Schoenberg parameter t > 0")
    common.add_argument('--z')
    common.add_argument('--closed-form', action='store_true', help="evaluate through the Chebyshev form")
    common.add_argument('--role', choices=('phi', 'psi'))
    common.add_argument('--cap', type=int, help="ball size cap (default FREERAD_BALL_CAP)")

    parser = argparse.ArgumentParser(
        prog='freerad',
        description="Radial positive definite and conditionally negative definite functions on free groups"
    )
    subparsers = parser.add_subparsers(dest='command', required=True)
    for name, (handler, help_text) in COMMANDS.items():
        sub = subparsers.add_parser(name, parents=[common], help=help_text)
        sub.set_defaults(handler=handler)
    return parser


def _render(result, args):
    if args.json:
        return render_json(result.payload)
    if args.csv:
        if result.rows is None:
            raise BadInput(f"{args.command} has no tabular output for --csv")
        return render_csv(result.header, result.rows)
    return render_text(result.summary, result.rows)


def _emit(text, args):
    if not args.target:
        sys.stdout.write(text)
        return
    try:
        with open(args.target, 'w', encoding='utf-8') as handle:
            handle.write(text)
    except OSError as e:
        raise BadInput(f"Cannot write {args.target}: {e.strerror}") from e


def run(argv=None):
    """Parse argv, run one subcommand and return its exit code"""
    profile = config.get(os.getenv('FREERAD_CONFIG', 'default'), config['default'])
    configure_logging(profile.LOG_LEVEL)

    try:
        args = create_parser().parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else 2

    try:
        settings = _settings()
        logger.debug(f"command: {Command.from_args(args).to_dict()}")
        result = args.handler(args, settings)
        _emit(_render(result, args), args)
    except FreeRadError as e:
        logger.error(str(e))
        return e.exit_code
    except ArithmeticError as e:
        logger.error(f"{type(e).__name__}: {e}")
        return NumericFailure.exit_code

    if result.status == EXIT_OK:
        log_ok(logger, f"{args.command} finished")
    else:
        logger.info(f"{args.command}: violation certified")
    return result.status
