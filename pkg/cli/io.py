# File: cli/io.py
"""JSON payloads for radial functions and atomic measures.

Rationals are written as "p/q" strings and floats as JSON numbers (shortest
round-tripping repr), so parse(serialize(x)) == x on both backends.
"""
import json
import sys

from utils.exceptions import BadInput, SchemaError
from utils.scalars import scalar_from_json
from cli.utils import validate_measure, validate_radial_function
from moments.models import AtomicMeasure, RadialFunction, Role


def read_text(source):
    """Text of a path, '-' for stdin, or an open stream"""
    if hasattr(source, 'read'):
        return source.read()
    if source == '-':
        return sys.stdin.read()
    try:
        with open(source, 'r', encoding='utf-8') as handle:
            return handle.read()
    except OSError as e:
        raise BadInput(f"Cannot read {source}: {e.strerror}") from e


def load_payload(source):
    text = read_text(source)
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise SchemaError(f"Invalid JSON: {e.msg} (line {e.lineno}, column {e.colno})", '') from e


def parse_radial_function(data):
    is_valid, pointer, message = validate_radial_function(data)
    if not is_valid:
        raise SchemaError(message, pointer)
    try:
        values = tuple(scalar_from_json(v) for v in data['values'])
    except BadInput as e:
        raise SchemaError(e.message, '/values') from e
    try:
        return RadialFunction(data['rank'], values, Role(data.get('role', 'phi')))
    except BadInput as e:
        raise SchemaError(e.message, '/rank') from e


def parse_measure(data):
    is_valid, pointer, message = validate_measure(data)
    if not is_valid:
        raise SchemaError(message, pointer)
    pairs = []
    for i, atom in enumerate(data['atoms']):
        try:
            pairs.append((scalar_from_json(atom['s']), scalar_from_json(atom['w'])))
        except BadInput as e:
            raise SchemaError(e.message, f'/atoms/{i}') from e
    try:
        return AtomicMeasure.from_pairs(pairs)
    except BadInput as e:
        raise SchemaError(e.message, '/atoms') from e


def parse_payload(data):
    """RadialFunction or AtomicMeasure, chosen by the payload's fields"""
    if isinstance(data, dict) and 'atoms' in data:
        return parse_measure(data)
    return parse_radial_function(data)


def serialize(obj):
    return json.dumps(obj.to_dict())


def io_roundtrip(source):
    """Load a payload from a path or stream and parse it"""
    return parse_payload(load_payload(source))


def dump_payload(obj, target):
    """Write obj.to_dict() as JSON to a path or stream"""
    text = serialize(obj) + '\n'
    if hasattr(target, 'write'):
        target.write(text)
        return
    with open(target, 'w', encoding='utf-8') as handle:
        handle.write(text)
