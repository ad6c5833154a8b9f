"""Kuhn poker with n card ranks.

Both players ante 1 and receive one private card. Player 1 checks or bets 1;
after a check player 2 checks or bets; a bet is answered by fold or call.
Showdowns pay the pot to the higher card.
"""

from app.constants.games import GameFamily
from app.core.efg.game_tree import GameTree, GameTreeBuilder
from app.core.games.common import check_rank, game_name, infoset_key

ANTE = 1
BET = 1

# history -> (acting player, actions); terminal histories are absent
_DECISIONS = {
    "": (1, ("k", "b")),
    "k": (2, ("k", "b")),
    "kb": (1, ("f", "c")),
    "b": (2, ("f", "c")),
}


def _payoff(history: str, card1: int, card2: int) -> float:
    """Player 1's utility at a terminal history."""
    if history == "bf":
        return float(ANTE)
    if history == "kbf":
        return float(-ANTE)
    stake = ANTE if history == "kk" else ANTE + BET
    return float(stake if card1 > card2 else -stake)


def kuhn(n: int) -> GameTree:
    check_rank(GameFamily.KUHN, n)
    builder = GameTreeBuilder(name=game_name(GameFamily.KUHN, n))

    deals = [(c1, c2) for c1 in range(n) for c2 in range(n) if c1 != c2]
    p = 1.0 / len(deals)
    root = builder.chance([(f"d{c1}-{c2}", p) for c1, c2 in deals])

    def expand(history: str, card1: int, card2: int) -> int:
        if history not in _DECISIONS:
            return builder.terminal(_payoff(history, card1, card2))
        player, actions = _DECISIONS[history]
        card = card1 if player == 1 else card2
        node = builder.decision(player, infoset_key(player, card, history), actions)
        for action in actions:
            builder.edge(node, action, expand(history + action, card1, card2))
        return node

    for c1, c2 in deals:
        builder.edge(root, f"d{c1}-{c2}", expand("", c1, c2))
    return builder.build(root)
