from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from pydantic import ValidationError

from app.core.efg.game_tree import GameTree
from app.core.efg.sequence_form import SolvableGame
from app.core.efg.serialization import dumps
from app.exceptions.config_exceptions import ConfigInvalidError
from app.schemas.game import GameSizes, GameSpec
from app.services.game_service import GameService


@dataclass
class GeneratedGame:
    spec: GameSpec
    tree: GameTree
    sizes: GameSizes
    path: Optional[Path] = None
    text: Optional[str] = None


class GenerateGameCommand:
    """
    Command to generate a benchmark game and write it in the serialization format.
    """

    def __init__(self, game_service: Optional[GameService] = None):
        self.game_service = game_service or GameService()

    def execute(
        self,
        family: str,
        rank: int,
        out: Optional[Path] = None,
        verify_sizes: bool = False,
    ) -> GeneratedGame:
        """
        Execute the command to generate one game.

        Args:
            family: Game family name (kuhn, leduc, goofspiel, liarsdice)
            rank: Number of card ranks or die faces
            out: File to write; the serialized text is returned instead when omitted
            verify_sizes: Check the reference (infosets, sequences, leaves) triple

        Returns:
            GeneratedGame: The tree, its sizes and where it went

        Raises:
            ConfigInvalidError: If the family or rank does not validate
            UnsupportedRankError: If the family cannot be built at that rank
            GameSizeMismatchError: If verification is requested and fails
        """
        try:
            spec = GameSpec(family=family, rank=rank)
        except ValidationError as exc:
            fields = [".".join(str(p) for p in error["loc"]) for error in exc.errors()]
            raise ConfigInvalidError(f"invalid game {family}{rank}", fields) from exc

        tree = self.game_service.generate(spec)
        game = SolvableGame.from_tree(tree)
        if verify_sizes:
            sizes = self.game_service.verify_sizes(spec, game)
        else:
            sizes = self.game_service.sizes(game)

        if out is None:
            return GeneratedGame(spec, tree, sizes, text=dumps(tree, spec.key))
        return GeneratedGame(spec, tree, sizes, path=self.game_service.write(tree, out))
