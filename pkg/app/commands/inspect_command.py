from typing import Optional

from app.schemas.game import GameSizes
from app.services.game_service import GameService


class InspectGameCommand:
    """
    Command to report a game's (infosets, sequences, leaves) triple.
    """

    def __init__(self, game_service: Optional[GameService] = None):
        self.game_service = game_service or GameService()

    def execute(self, game: str, verify_sizes: bool = False) -> GameSizes:
        """
        Execute the command to size a game.

        Args:
            game: A benchmark key such as ``leduc3`` or a serialized game file

        Returns:
            GameSizes: Infoset, sequence and leaf counts
        """
        solvable = self.game_service.resolve(game)
        if verify_sizes and not self.game_service.is_file(game):
            return self.game_service.verify_sizes(
                self.game_service.spec_for(game), solvable
            )
        return self.game_service.sizes(solvable)
