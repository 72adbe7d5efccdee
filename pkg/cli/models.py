# File: cli/models.py
from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple

EXIT_OK = 0
EXIT_VIOLATION = 1


@dataclass(frozen=True)
class Command:
    """One parsed invocation: subcommand, its flags and where input and output go"""
    name: str
    options: Dict[str, object] = field(default_factory=dict)
    source: Optional[str] = None
    target: Optional[str] = None

    @classmethod
    def from_args(cls, args):
        options = {
            key: value for key, value in vars(args).items()
            if key not in ('command', 'handler', 'source', 'target') and value not in (None, False)
        }
        return cls(args.command, options, args.source, args.target)

    def to_dict(self):
        return {
            'command': self.name,
            'options': dict(self.options),
            'in': self.source,
            'out': self.target
        }


@dataclass
class CommandResult:
    """Machine payload of a command plus its tabular and text renderings"""
    payload: dict
    header: Tuple[str, ...] = ('n', 'value')
    rows: Optional[list] = None
    summary: Tuple[str, ...] = ()
    status: int = EXIT_OK

    def to_dict(self):
        return self.payload
