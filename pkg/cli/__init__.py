# File: cli/__init__.py
from .app import COMMANDS, create_parser, run
from .io import dump_payload, io_roundtrip, load_payload, parse_measure, parse_payload, parse_radial_function, serialize
from .models import Command, CommandResult

__all__ = [
    'COMMANDS', 'create_parser', 'run',
    'dump_payload', 'io_roundtrip', 'load_payload', 'parse_measure', 'parse_payload',
    'parse_radial_function', 'serialize',
    'Command', 'CommandResult'
]
