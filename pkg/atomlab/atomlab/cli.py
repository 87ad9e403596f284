'''
atomlab: atoms of finite-field power-series rings

Usage:
    atomlab check --spec=FILE [options]
    atomlab atoms --spec=FILE [--oracle] [options]
    atomlab structure --spec=FILE [--oracle] [options]
    atomlab verify --spec=FILE [--oracle] [options]
    atomlab sweep [--family=F] [--max-pm=N] [--count=N] [--enumerate] [options]
    atomlab find --count=N [--max-pm=N] [--exhaustive] [options]
    atomlab compose --count=N [--limit=L] [options]
    atomlab (-h | --help)
    atomlab --version

Options:
    --spec=FILE      Ring spec file (see `atomlab.specfile`)
    --oracle         Cross-check enumeration with the brute-force oracle
    --family=F       Family 1, 2 or 3 [default: all]
    --max-pm=N       Largest p^m to consider
    --count=N        Atom count to find or compose; for sweep, keep
                     totals below N (100 when not given)
    --enumerate      Cross-check sweep predictions by enumeration
    --exhaustive     Also search every small graded spec
    --limit=L        Stop after L decompositions
    --format=FMT     text or machine [default: text]
    --cap=N          Element-count cap on |F| and |F|^n
    --config=FILE    YAML settings file
    --seedless       No-op: runs are always deterministic; only logged
    --verbose        Log progress to stderr
    -h --help        Show this screen
    --version        Show version

Exit codes:
    0  success, all properties hold
    1  a property or cross-check failed
    2  usage, parse or validation error
    3  a size cap was exceeded
'''

import sys

import docopt

import atomlab.atoms
import atomlab.exceptions
import atomlab.log_event
import atomlab.report
import atomlab.search
import atomlab.settings
import atomlab.specfile
import atomlab.structure
import atomlab.verify

from atomlab.log_event import debug_log

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_CAP = 3

DEFAULT_SWEEP_LIMIT = 100


class UsageError(Exception):
    '''
    A flag has a value docopt cannot check, e.g. a non-integer count.
    '''


def _int_option(args, name, minimum=1):
    value = args[name]
    if value is None:
        return None
    try:
        parsed = int(value)
    except ValueError:
        raise UsageError(f"{name} must be an integer, got {value!r}") from None
    if parsed < minimum:
        raise UsageError(f"{name} must be at least {minimum}, got {parsed}")
    return parsed


def _configure(args):
    atomlab.settings.load_settings(args['--config'] or atomlab.settings.CLI_SETTINGS)
    atomlab.log_event.initialize_logging()
    if args['--verbose']:
        atomlab.log_event.initialize_logging({'logging': {'debug_log_level': 'SIMPLE'}})
    cap = _int_option(args, '--cap')
    if cap is not None:
        atomlab.settings.override_limit('field_size_cap', cap)
        atomlab.settings.override_limit('oracle_cap', cap)
    if args['--seedless']:
        debug_log("seedless: deterministic run")


# Commands. Each returns (report document, exit code).

def cmd_check(args):
    spec = atomlab.specfile.load_spec(args['--spec'])
    return atomlab.report.document('check', atomlab.report.check_result(spec), spec), EXIT_OK


def _oracle_mismatch(spec, inventory):
    oracle = atomlab.atoms.brute_force_atoms(spec)
    if oracle != inventory:
        print(
            f"oracle disagrees: oracle total {oracle.total}, enumerated {inventory.total}",
            file=sys.stderr
        )
        return True
    return False


def cmd_atoms(args):
    spec = atomlab.specfile.load_spec(args['--spec'])
    inventory = atomlab.atoms.enumerate_atoms(spec)
    code = EXIT_OK
    if args['--oracle'] and _oracle_mismatch(spec, inventory):
        code = EXIT_VIOLATION
    return atomlab.report.document('atoms', atomlab.report.atoms_result(inventory), spec), code


def cmd_structure(args):
    spec = atomlab.specfile.load_spec(args['--spec'])
    report = atomlab.structure.structure_report(spec)
    profile = atomlab.structure.universality_profile(spec, report.least_universal)
    transversal = atomlab.structure.v_transversal(spec)
    code = EXIT_OK
    if args['--oracle'] and _oracle_mismatch(spec, atomlab.atoms.enumerate_atoms(spec)):
        code = EXIT_VIOLATION
    result = atomlab.report.structure_result(report, profile, transversal, spec.tower)
    return atomlab.report.document('structure', result, spec), code


def cmd_verify(args):
    spec = atomlab.specfile.load_spec(args['--spec'])
    results = atomlab.verify.verify_spec(spec, oracle=args['--oracle'])
    inventory = atomlab.atoms.enumerate_atoms(spec)
    code = EXIT_VIOLATION if atomlab.verify.failures(results) else EXIT_OK
    return atomlab.report.document('verify', atomlab.report.verify_result(results, inventory), spec), code


def _family(args):
    value = args['--family']
    if value in (None, 'all'):
        return None
    if value not in ('1', '2', '3'):
        raise UsageError(f"--family must be 1, 2, 3 or all, got {value!r}")
    return int(value)


def cmd_sweep(args):
    limit = _int_option(args, '--count') or DEFAULT_SWEEP_LIMIT
    bounds = atomlab.search.SweepBounds(max_pm=_int_option(args, '--max-pm'), limit=limit)
    entries = atomlab.search.sweep(_family(args), bounds, enumerate_points=args['--enumerate'])
    mismatched = any(entry.status == atomlab.search.STATUS_MISMATCH for entry in entries)
    code = EXIT_VIOLATION if mismatched else EXIT_OK
    return atomlab.report.document('sweep', atomlab.report.sweep_result(entries)), code


def cmd_find(args):
    count = _int_option(args, '--count')
    max_pm = _int_option(args, '--max-pm')
    bounds = None
    if max_pm is not None:
        bounds = atomlab.search.SweepBounds(max_pm=max_pm, limit=count + 1)
    found = atomlab.search.find_with_atom_count(count, bounds, exhaustive=args['--exhaustive'])
    return atomlab.report.document('find', atomlab.report.find_result(found)), EXIT_OK


def cmd_compose(args):
    count = _int_option(args, '--count')
    decompositions = atomlab.search.compose_nonlocal(count, limit=_int_option(args, '--limit'))
    return atomlab.report.document('compose', atomlab.report.compose_result(count, decompositions)), EXIT_OK


COMMANDS = {
    'check': cmd_check,
    'atoms': cmd_atoms,
    'structure': cmd_structure,
    'verify': cmd_verify,
    'sweep': cmd_sweep,
    'find': cmd_find,
    'compose': cmd_compose,
}


def main(argv=None):
    '''
    Run one command and return its exit code.
    '''
    try:
        args = docopt.docopt(__doc__, argv=argv, version=atomlab.report.package_version())
    except docopt.DocoptExit as e:
        print(str(e), file=sys.stderr)
        return EXIT_USAGE

    output_format = args['--format']
    try:
        if output_format not in ('text', 'machine'):
            raise UsageError(f"--format must be text or machine, got {output_format!r}")
        _configure(args)
        command = next(name for name in COMMANDS if args[name])
        doc, code = COMMANDS[command](args)
    except atomlab.exceptions.CapExceeded as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CAP
    except (atomlab.exceptions.SpecError, atomlab.settings.SettingsException, UsageError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except atomlab.exceptions.InternalInconsistency as e:
        print(atomlab.log_event.encode_json_line(e.to_dict()), file=sys.stderr)
        return EXIT_VIOLATION

    sys.stdout.write(atomlab.report.render(doc, output_format))
    return code


def run():
    sys.exit(main())
