from app.exceptions.config_exceptions import (
    ConfigInvalidError,
    GameSizeMismatchError,
    SchemaMismatchError,
)
from app.exceptions.game_exceptions import (
    GameError,
    GameFormatError,
    InvalidGameError,
    PerfectRecallViolationError,
    UnsupportedRankError,
)
from app.exceptions.perturbation_exceptions import EpsilonTooLargeError
from app.exceptions.solver_exceptions import DegenerateThetaError


__all__ = [
    "ConfigInvalidError",
    "DegenerateThetaError",
    "EpsilonTooLargeError",
    "GameError",
    "GameFormatError",
    "GameSizeMismatchError",
    "InvalidGameError",
    "PerfectRecallViolationError",
    "SchemaMismatchError",
    "UnsupportedRankError",
]
