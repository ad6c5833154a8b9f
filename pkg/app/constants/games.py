from enum import Enum
from typing import Dict, Tuple


class GameFamily(str, Enum):
    KUHN = "kuhn"
    LEDUC = "leduc"
    GOOFSPIEL = "goofspiel"
    LIARS_DICE = "liarsdice"


FAMILY_DISPLAY_NAMES: Dict[GameFamily, str] = {
    GameFamily.KUHN: "Kuhn Poker",
    GameFamily.LEDUC: "Leduc Poker",
    GameFamily.GOOFSPIEL: "Goofspiel",
    GameFamily.LIARS_DICE: "Liar's Dice",
}

MIN_RANK = 2
MAX_RANK = 6

# Goofspiel grows as (n!)^3 leaves; rank 6 does not fit in memory
FAMILY_MAX_RANK: Dict[GameFamily, int] = {
    GameFamily.KUHN: MAX_RANK,
    GameFamily.LEDUC: MAX_RANK,
    GameFamily.GOOFSPIEL: 5,
    GameFamily.LIARS_DICE: MAX_RANK,
}

CHANCE_PLAYER = 0
PLAYERS = (1, 2)

# (infosets, sequences, leaves) of the reference benchmark instances
REFERENCE_SIZES: Dict[Tuple[GameFamily, int], Tuple[int, int, int]] = {
    (GameFamily.KUHN, 3): (12, 26, 30),
    (GameFamily.LEDUC, 3): (288, 674, 1116),
    (GameFamily.LEDUC, 5): (780, 1822, 5500),
    (GameFamily.GOOFSPIEL, 3): (546, 668, 216),
    (GameFamily.GOOFSPIEL, 4): (34952, 42658, 13824),
    (GameFamily.LIARS_DICE, 5): (5120, 10232, 25575),
    (GameFamily.LIARS_DICE, 6): (24576, 49142, 147420),
}

# Short keys used by presets and the command line, e.g. "leduc3"
GAME_KEYS: Dict[str, Tuple[GameFamily, int]] = {
    f"{family.value}{rank}": (family, rank) for family, rank in REFERENCE_SIZES
}
