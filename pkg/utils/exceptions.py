# File: utils/exceptions.py
"""Error hierarchy shared by every package.

Each error carries the exit code the command line maps it to: 2 for bad
input or refused requests, 3 for numeric failures that signal drift or a bug.
"""


class FreeRadError(Exception):
    exit_code = 2

    def __init__(self, message, pointer=None):
        super().__init__(message)
        self.message = message
        self.pointer = pointer

    def to_dict(self):
        """Convert error to dictionary"""
        return {
            'error': type(self).__name__,
            'message': self.message,
            'pointer': self.pointer
        }

    def __str__(self):
        if self.pointer is not None:
            return f"{self.message} (at {self.pointer or '/'})"
        return self.message


class BadInput(FreeRadError):
    pass


class SchemaError(FreeRadError):
    pass


class CapExceeded(FreeRadError):
    pass


class InsufficientDepth(FreeRadError):
    pass


class InsufficientRadius(FreeRadError):
    pass


class SingularMoments(FreeRadError):
    pass


class ExactnessError(FreeRadError):
    """Raised when the rational backend is asked for an irrational result."""


class NumericFailure(FreeRadError):
    exit_code = 3


class NonzeroRemainder(NumericFailure):
    pass


class ConditionLoss(NumericFailure):
    pass


class InternalDisagreement(NumericFailure):
    pass


class NotRadial(NumericFailure):
    pass
