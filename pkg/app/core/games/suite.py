from typing import Callable, Dict

from app.constants.games import GameFamily
from app.core.efg.game_tree import GameTree
from app.core.games.goofspiel import goofspiel
from app.core.games.kuhn import kuhn
from app.core.games.leduc import leduc
from app.core.games.liars_dice import liars_dice
from app.schemas.game import GameSpec

GENERATORS: Dict[GameFamily, Callable[[int], GameTree]] = {
    GameFamily.KUHN: kuhn,
    GameFamily.LEDUC: leduc,
    GameFamily.GOOFSPIEL: goofspiel,
    GameFamily.LIARS_DICE: liars_dice,
}


def generate(spec: GameSpec) -> GameTree:
    return GENERATORS[spec.family](spec.rank)
