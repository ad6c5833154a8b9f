"""Configuration and artifact exceptions raised by the benchmark front end."""

from typing import Iterable


class ConfigInvalidError(Exception):
    """Raised when a run, sweep or preset configuration does not validate."""

    def __init__(self, message: str, fields: Iterable[str] = ()):
        self.fields = tuple(fields)
        self.message = message
        super().__init__(self.message)


class GameSizeMismatchError(Exception):
    """Raised when a generated game does not reproduce its reference size triple."""

    def __init__(self, label: str, expected: tuple, actual: tuple):
        self.message = (
            f"{label}: expected (infosets, sequences, leaves) = {expected}, got {actual}"
        )
        super().__init__(self.message)
        self.expected = expected
        self.actual = actual


class SchemaMismatchError(Exception):
    """Raised when a CSV file does not carry the expected header."""

    pass
