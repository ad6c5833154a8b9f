from app.constants.exit_codes import (
    EXIT_CONFIG_ERROR,
    EXIT_FAILURE,
    EXIT_SIZE_MISMATCH,
)
from app.exceptions.config_exceptions import (
    ConfigInvalidError,
    GameSizeMismatchError,
    SchemaMismatchError,
)
from app.exceptions.game_exceptions import GameError
from app.exceptions.perturbation_exceptions import EpsilonTooLargeError


def exit_code_for(exc: BaseException) -> int:
    """Map an exception raised by a command to the CLI exit code."""
    if isinstance(exc, GameSizeMismatchError):
        return EXIT_SIZE_MISMATCH
    if isinstance(
        exc,
        (ConfigInvalidError, SchemaMismatchError, GameError, EpsilonTooLargeError),
    ):
        return EXIT_CONFIG_ERROR
    return EXIT_FAILURE
