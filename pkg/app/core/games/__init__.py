from app.core.games.goofspiel import goofspiel
from app.core.games.kuhn import kuhn
from app.core.games.leduc import leduc
from app.core.games.liars_dice import liars_dice
from app.core.games.suite import GENERATORS, generate

__all__ = ["GENERATORS", "generate", "goofspiel", "kuhn", "leduc", "liars_dice"]
