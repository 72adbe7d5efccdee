# File: cli/utils.py
import csv
import io
import json
import numbers

from utils.scalars import format_scalar

ROLES = ('phi', 'psi')


def _check_number(value, pointer):
    """Numbers or 'p/q' strings; decimal strings are refused so floats keep one spelling"""
    if isinstance(value, bool):
        return False, pointer, "Booleans are not numbers"
    if isinstance(value, numbers.Real):
        return True, None, None
    if isinstance(value, str):
        text = value.strip()
        if '/' in text or text.lstrip('-').isdigit():
            return True, None, None
        return False, pointer, f"Expected a JSON number or a 'p/q' string, got {value!r}"
    return False, pointer, f"Expected a number, got {type(value).__name__}"


def validate_radial_function(data):
    """Validate a radial function payload {"rank", "role", "values"}"""
    if not isinstance(data, dict):
        return False, '', "Payload must be a JSON object"

    if 'rank' not in data:
        return False, '/rank', "Missing required field: rank"
    rank = data['rank']
    if isinstance(rank, bool) or not (isinstance(rank, int) or rank in ('inf', 'infinity')):
        return False, '/rank', f"Rank must be an integer or 'infinity', got {rank!r}"

    if 'role' in data and data['role'] not in ROLES:
        return False, '/role', f"Role must be one of {', '.join(ROLES)}"

    values = data.get('values')
    if not isinstance(values, list) or not values:
        return False, '/values', "values must be a non-empty array"
    for i, value in enumerate(values):
        is_valid, pointer, message = _check_number(value, f'/values/{i}')
        if not is_valid:
            return is_valid, pointer, message

    return True, None, None


def validate_measure(data):
    """Validate an atomic measure payload {"atoms": [{"s", "w"}, ...]}"""
    if not isinstance(data, dict):
        return False, '', "Payload must be a JSON object"

    atoms = data.get('atoms')
    if not isinstance(atoms, list):
        return False, '/atoms', "atoms must be an array"
    for i, atom in enumerate(atoms):
        if not isinstance(atom, dict):
            return False, f'/atoms/{i}', "Each atom must be an object with fields s and w"
        for field in ('s', 'w'):
            if field not in atom:
                return False, f'/atoms/{i}/{field}', f"Missing required field: {field}"
            is_valid, pointer, message = _check_number(atom[field], f'/atoms/{i}/{field}')
            if not is_valid:
                return is_valid, pointer, message

    return True, None, None


def render_json(payload):
    return json.dumps(payload, indent=2) + '\n'


def render_csv(header, rows):
    """Rows of scalars as CSV with exact values kept as 'p/q'"""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(header)
    for row in rows:
        writer.writerow([format_scalar(v) if isinstance(v, numbers.Number) else v for v in row])
    return buffer.getvalue()


def render_text(summary, rows=None):
    lines = list(summary)
    for row in rows or ():
        lines.append(' '.join(format_scalar(v) if isinstance(v, numbers.Number) else str(v) for v in row))
    return '\n'.join(lines) + '\n'
