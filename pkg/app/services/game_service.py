from dataclasses import replace
from pathlib import Path
from typing import Optional, Union

from app.core.efg.game_tree import GameTree
from app.core.efg.sequence_form import SolvableGame
from app.core.efg.serialization import read_game, write_game
from app.core.games.suite import generate
from app.core.logging_config import get_logger
from app.core.telemetry import instrument_method
from app.exceptions.config_exceptions import (
    ConfigInvalidError,
    GameSizeMismatchError,
)
from app.schemas.game import GameSizes, GameSpec

"""
Module providing the GameService class: generating, loading, sizing and
writing benchmark games.
"""


class GameService:
    def __init__(self):
        self.logger = get_logger("efpe")
        self.game_label: Optional[str] = None

    @instrument_method()
    def generate(self, spec: GameSpec) -> GameTree:
        self.game_label = spec.key
        tree = generate(spec)
        self.logger.info(f"generated {spec.display_name}: {tree.n_nodes} nodes")
        return tree

    def resolve(self, game: str) -> SolvableGame:
        """Build the solvable bundle for a benchmark key or a serialized game file."""
        path = Path(game)
        if self.is_file(game):
            try:
                tree = read_game(path)
            except OSError as exc:
                raise ConfigInvalidError(
                    f"cannot read game file {path}: {exc.strerror}", ["game"]
                ) from exc
            if not tree.name:
                tree = replace(tree, name=path.stem)
            return SolvableGame.from_tree(tree)
        return SolvableGame.from_tree(self.generate(self.spec_for(game)))

    @staticmethod
    def is_file(game: str) -> bool:
        path = Path(game)
        return bool(path.suffix) or path.exists()

    def spec_for(self, game: str) -> GameSpec:
        try:
            return GameSpec.from_key(game)
        except ValueError as exc:
            raise ConfigInvalidError(f"unknown game {game!r}", ["game"]) from exc

    def sizes(self, game: SolvableGame) -> GameSizes:
        infosets, sequences, leaves = game.sizes()
        return GameSizes(
            name=game.name, infosets=infosets, sequences=sequences, leaves=leaves
        )

    def verify_sizes(self, spec: GameSpec, game: SolvableGame) -> GameSizes:
        """Compare against the reference triple; ranks without one pass unchecked."""
        sizes = self.sizes(game)
        expected = spec.reference_sizes
        if expected is not None and sizes.as_tuple() != expected:
            raise GameSizeMismatchError(spec.key, expected, sizes.as_tuple())
        return sizes

    def write(self, tree: GameTree, path: Union[str, Path]) -> Path:
        written = write_game(tree, path)
        self.logger.info(f"wrote {tree.name or 'game'} to {written}")
        return written
