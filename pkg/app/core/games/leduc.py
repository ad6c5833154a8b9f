"""Leduc poker with n ranks and two suits per rank.

Each player antes 1 and gets a private card; a public card is revealed after
the first betting round. Rounds allow at most two raises (2 in round one, 4 in
round two). Pairing the public card wins, otherwise the higher rank wins.

Suits never affect payoffs and are not observed, so chance is modelled at rank
level with exact card-count probabilities.
"""

from typing import Optional, Tuple

from app.constants.games import GameFamily
from app.core.efg.game_tree import GameTree, GameTreeBuilder
from app.core.games.common import check_rank, game_name, infoset_key

ANTE = 1
RAISE_SIZES = (2, 4)
SUITS = 2

# In-round history -> (acting player, actions). Player 1 always opens a round.
_ROUND = {
    "": (1, ("c", "r")),
    "c": (2, ("c", "r")),
    "cr": (1, ("f", "c", "r")),
    "crr": (2, ("f", "c")),
    "r": (2, ("f", "c", "r")),
    "rr": (1, ("f", "c")),
}


def _showdown(rank1: int, rank2: int, public: int) -> int:
    """+1 if player 1 wins, -1 if player 2 wins, 0 on a split."""
    if rank1 == public and rank2 != public:
        return 1
    if rank2 == public and rank1 != public:
        return -1
    return (rank1 > rank2) - (rank1 < rank2)


def _apply(action: str, mover: int, pot: Tuple[int, int], raise_size: int) -> Tuple[int, int]:
    """Contributions after `mover` plays `action`."""
    own, other = (pot[0], pot[1]) if mover == 1 else (pot[1], pot[0])
    if action == "c":
        own = other
    elif action == "r":
        own = other + raise_size
    return (own, other) if mover == 1 else (other, own)


def leduc(n: int) -> GameTree:
    check_rank(GameFamily.LEDUC, n)
    builder = GameTreeBuilder(name=game_name(GameFamily.LEDUC, n))
    deck = SUITS * n

    def betting(
        rank1: int,
        rank2: int,
        public: Optional[int],
        first: str,
        history: str,
        pot: Tuple[int, int],
    ) -> int:
        round_index = 0 if public is None else 1
        player, actions = _ROUND[history]
        card = rank1 if player == 1 else rank2
        if public is None:
            key = infoset_key(player, card, history)
        else:
            key = infoset_key(player, card, public, first, history)
        node = builder.decision(player, key, actions)
        for action in actions:
            if action == "f":
                child = builder.terminal(float(-pot[0] if player == 1 else pot[1]))
            else:
                after = _apply(action, player, pot, RAISE_SIZES[round_index])
                extended = history + action
                if extended in _ROUND:
                    child = betting(rank1, rank2, public, first, extended, after)
                elif public is None:
                    child = deal_public(rank1, rank2, extended, after)
                else:
                    child = builder.terminal(
                        float(_showdown(rank1, rank2, public) * after[0])
                    )
            builder.edge(node, action, child)
        return node

    def deal_public(rank1: int, rank2: int, first: str, pot: Tuple[int, int]) -> int:
        remaining = deck - 2
        outcomes = []
        for public in range(n):
            count = SUITS - (rank1 == public) - (rank2 == public)
            if count > 0:
                outcomes.append((public, count / remaining))
        node = builder.chance([(f"pub{public}", p) for public, p in outcomes])
        for public, _ in outcomes:
            child = betting(rank1, rank2, public, first, "", pot)
            builder.edge(node, f"pub{public}", child)
        return node

    root = builder.chance([(f"p1card{r}", 1.0 / n) for r in range(n)])
    for rank1 in range(n):
        deal2 = [
            (rank2, (SUITS - (rank1 == rank2)) / (deck - 1)) for rank2 in range(n)
        ]
        node = builder.chance([(f"p2card{r}", p) for r, p in deal2])
        builder.edge(root, f"p1card{rank1}", node)
        for rank2, _ in deal2:
            child = betting(rank1, rank2, None, "", "", (ANTE, ANTE))
            builder.edge(node, f"p2card{rank2}", child)
    return builder.build(root)
