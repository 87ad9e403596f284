'''
Reports
=======

Every command produces a report document: a dictionary with a fixed
envelope

    {
       "command": "atoms",
       "result": {...},
       "schema": "atomlab.report",
       "schema_version": 1,
       "spec": "p=2\\nm=1\\n...",
       "version": "0.3.0"
    }

and a per-command `result`. The machine format is the document encoded
with `encode_json_block`; the text format is rendered from the same
dictionary, so a machine report can be parsed back and re-rendered in
either form. `report_schema.json` defines the document, envelope and
per-command results; `docs/report_schema.md` describes the fields.
'''

import importlib.metadata
import json
import os.path

import jsonschema
import recordclass

import atomlab.exceptions
import atomlab.specfile

from atomlab.log_event import encode_json_block

SCHEMA = 'atomlab.report'
SCHEMA_VERSION = 1

schema_path = os.path.join(os.path.dirname(os.path.realpath(__file__)), 'report_schema.json')

with open(schema_path, 'r') as f:
    REPORT_SCHEMA = json.load(f)

COMMANDS = ('check', 'atoms', 'structure', 'verify', 'sweep', 'find', 'compose')


def package_version():
    '''
    The installed version, or the VERSION file next to the package when
    running from a checkout.
    '''
    try:
        return importlib.metadata.version('atomlab')
    except importlib.metadata.PackageNotFoundError:
        path = os.path.join(os.path.dirname(__file__), os.pardir, 'VERSION')
        if os.path.exists(path):
            with open(path) as f:
                return f.read().strip()
        return 'unknown'


def document(command, result, spec=None):
    if command not in COMMANDS:
        raise ValueError(f"Unknown command {command!r}")
    return {
        'schema': SCHEMA,
        'schema_version': SCHEMA_VERSION,
        'version': package_version(),
        'command': command,
        'spec': atomlab.specfile.render_spec(spec) if spec is not None else None,
        'result': result,
    }


def render_machine(doc):
    return encode_json_block(doc) + "\n"


def validate_report(doc):
    '''
    Check a report document against `report_schema.json`.
    '''
    try:
        jsonschema.validate(doc, REPORT_SCHEMA)
    except jsonschema.ValidationError as e:
        raise atomlab.exceptions.ReportError(
            f"Not a valid atomlab report: {e.message}", e.absolute_path
        ) from None
    return doc


def parse_report(text):
    '''
    Parse and validate a machine report.

    >>> parse_report('{"schema": "other"}')  # doctest: +IGNORE_EXCEPTION_DETAIL
    Traceback (most recent call last):
    ...
    atomlab.exceptions.ReportError: Not a valid atomlab report
    '''
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise atomlab.exceptions.ReportError(f"Not JSON: {e}") from None
    return validate_report(doc)


# Result builders

def check_result(spec):
    tower = spec.tower
    return {
        'valid': True,
        'field_size': tower.order,
        'residue_field_size': tower.k_order,
        'conductor': spec.n,
        'subspace_dims': [space.dim for space in spec.V],
    }


def atoms_result(inventory):
    result = inventory.to_dict()
    result['layer1'] = inventory.layer1
    result['in_m2'] = inventory.in_m2
    return result


def structure_result(report, profile, transversal, tower):
    result = report.to_dict()
    result['universality_profile'] = {
        str(k): {'weakly_universal': weak, 'universal': strong}
        for k, (weak, strong) in profile.items()
    }
    result['v_transversal'] = [[tower.format(c) for c in window] for window in transversal]
    return result


def verify_result(results, inventory):
    return {
        'passed': all(r.passed for r in results),
        'counts': {
            'layer1': inventory.layer1,
            'in_m2': inventory.in_m2,
            'total': inventory.total,
        },
        'properties': [recordclass.asdict(r) for r in results],
    }


def sweep_result(entries):
    return {'entries': [entry.to_dict() for entry in entries]}


def _point_dict(point):
    return {
        'family': point.family, 'p': point.p, 'm': point.m, 'k': point.k, 'l': point.l,
        'ring': point.describe(),
    }


def find_result(found):
    return {
        'count': found.count,
        'status': found.status,
        'reason': found.reason,
        'points': [_point_dict(point) for point in found.points],
        'graded': [atomlab.specfile.render_spec(spec) for spec in found.graded],
    }


def compose_result(count, decompositions):
    return {
        'count': count,
        'decompositions': [list(primes) for primes in decompositions],
    }


# Text rendering

def _table(rows):
    '''
    Left-aligned columns, two spaces apart.

    >>> print(_table([["a", "bb"], ["ccc", "d"]]))
    a    bb
    ccc  d
    '''
    widths = [max(len(str(row[i])) for row in rows) for i in range(len(rows[0]))]
    lines = []
    for row in rows:
        cells = [str(cell).ljust(width) for cell, width in zip(row, widths)]
        lines.append("  ".join(cells).rstrip())
    return "\n".join(lines)


def summary_line(result):
    '''
    >>> summary_line({'total': 8, 'layer_counts': {'1': 6, '2': 2}})
    'total=8, layer1=6, layer2=2'
    '''
    parts = [f"total={result['total']}"]
    for k in sorted(result['layer_counts'], key=int):
        parts.append(f"layer{k}={result['layer_counts'][k]}")
    return ", ".join(parts)


def _window(cells):
    return "[" + ", ".join(cells) + "]"


def _text_check(result):
    rows = [
        ["valid", "yes" if result['valid'] else "no"],
        ["|F|", result['field_size']],
        ["|K|", result['residue_field_size']],
        ["n", result['conductor']],
        ["dim V_i", " ".join(str(d) for d in result['subspace_dims']) or "-"],
    ]
    return [_table(rows)]


def _text_atoms(result):
    lines = [summary_line(result)]
    rows = [["layer", "order", "window"]]
    rows += [[a['layer'], a['order'], _window(a['window'])] for a in result['atoms']]
    lines.append(_table(rows))
    return lines


def _text_structure(result):
    invariants = result['divisibility_invariants']
    rows = [
        ["dim M/M^2", result['dim_m_over_m2']],
        ["|K|", result['residue_field_size']],
        ["|V|", result['v_order']],
        ["least universal power", result['least_universal']],
        ["least weakly universal power", result['least_weakly_universal']],
        ["M maximal in [M:M]", result['m_maximal_in_multiplier']],
        ["M principal in [M:M]", result['m_principal_in_multiplier']],
        ["dim U_j", " ".join(str(d) for d in result['multiplier_dims'])],
        ["G(R) torsion order", invariants['cardinality']],
    ]
    lines = [_table(rows), "", "universality"]
    profile = [["k", "weakly", "universal"]]
    for k in sorted(result['universality_profile'], key=int):
        entry = result['universality_profile'][k]
        profile.append([k, entry['weakly_universal'], entry['universal']])
    lines.append(_table(profile))
    lines += ["", "V transversal"]
    lines += [_window(cells) for cells in result['v_transversal']]
    return lines


def _text_verify(result):
    counts = result['counts']
    verdict = "PASS" if result['passed'] else "FAIL"
    lines = [
        f"{verdict} (layer1, in_m2, total) = "
        f"({counts['layer1']}, {counts['in_m2']}, {counts['total']})"
    ]
    rows = []
    for prop in result['properties']:
        rows.append(["ok" if prop['passed'] else "FAIL", prop['name'], prop['detail']])
    if rows:
        lines.append(_table(rows))
    return lines


def _text_sweep(result):
    rows = [["family", "ring", "predicted", "in M^2", "achieved", "status"]]
    for entry in result['entries']:
        achieved = entry['achieved'] if entry['achieved'] is not None else "-"
        rows.append([
            entry['family'], entry['ring'], entry['predicted']['total'],
            entry['predicted']['in_m2'], achieved, entry['status'],
        ])
    return [_table(rows)]


def _text_find(result):
    lines = [f"{result['count']}: {result['status']}"]
    if result['reason']:
        lines.append(result['reason'])
    for point in result['points']:
        lines.append(f"family {point['family']}: {point['ring']}")
    for text in result['graded']:
        lines.append("graded: " + text.strip().replace("\n", " "))
    return lines


def _text_compose(result):
    if not result['decompositions']:
        return [f"{result['count']}: no decomposition"]
    lines = []
    for primes in result['decompositions']:
        terms = " + ".join(f"({p}+1)" for p in primes)
        lines.append(f"{result['count']} = {terms}")
    return lines


TEXT_RENDERERS = {
    'check': _text_check,
    'atoms': _text_atoms,
    'structure': _text_structure,
    'verify': _text_verify,
    'sweep': _text_sweep,
    'find': _text_find,
    'compose': _text_compose,
}


def render_text(doc):
    lines = TEXT_RENDERERS[doc['command']](doc['result'])
    return "\n".join(lines) + "\n"


def render(doc, output_format):
    if output_format == 'machine':
        return render_machine(doc)
    if output_format == 'text':
        return render_text(doc)
    raise ValueError(f"Unknown format {output_format!r}; expected text or machine")
