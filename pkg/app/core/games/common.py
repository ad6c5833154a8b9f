from app.constants.games import FAMILY_MAX_RANK, MIN_RANK, GameFamily
from app.exceptions.game_exceptions import UnsupportedRankError


def check_rank(family: GameFamily, rank: int) -> None:
    high = FAMILY_MAX_RANK[family]
    if not MIN_RANK <= rank <= high:
        raise UnsupportedRankError(family.value, rank, MIN_RANK, high)


def infoset_key(player: int, *observations: object) -> str:
    """Infoset key as written to game files, e.g. ``p1:2:kb``."""
    return ":".join([f"p{player}", *(str(o) for o in observations)])


def game_name(family: GameFamily, rank: int) -> str:
    return f"{family.value}{rank}"
