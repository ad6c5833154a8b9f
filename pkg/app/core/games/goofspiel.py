"""Goofspiel with n prize cards and n bid cards per player.

Every turn chance reveals one of the remaining prizes. Player 1 bids a card
from their hand, then player 2 bids without seeing that bid; both bids become
public once the turn is over. The higher bid takes the prize and ties split it.
The last turn is forced and still appears as single-action infosets.
"""

from typing import Tuple

from app.constants.games import GameFamily
from app.core.efg.game_tree import GameTree, GameTreeBuilder
from app.core.games.common import check_rank, game_name, infoset_key


def _digits(values: Tuple[int, ...]) -> str:
    return "".join(str(v) for v in values)


def goofspiel(n: int) -> GameTree:
    check_rank(GameFamily.GOOFSPIEL, n)
    builder = GameTreeBuilder(name=game_name(GameFamily.GOOFSPIEL, n))
    cards = tuple(range(1, n + 1))

    def reveal(prizes: Tuple[int, ...], bids1: Tuple[int, ...], bids2: Tuple[int, ...], score: int) -> int:
        if len(prizes) == n:
            return builder.terminal(float(score))
        remaining = [c for c in cards if c not in prizes]
        p = 1.0 / len(remaining)
        node = builder.chance([(f"prize{c}", p) for c in remaining])
        for prize in remaining:
            child = bid(prizes + (prize,), bids1, bids2, score)
            builder.edge(node, f"prize{prize}", child)
        return node

    def bid(prizes: Tuple[int, ...], bids1: Tuple[int, ...], bids2: Tuple[int, ...], score: int) -> int:
        public = (_digits(prizes), _digits(bids1), _digits(bids2))
        hand1 = [f"b{c}" for c in cards if c not in bids1]
        hand2 = [c for c in cards if c not in bids2]
        node = builder.decision(1, infoset_key(1, *public), hand1)
        for label in hand1:
            card1 = int(label[1:])
            responder = builder.decision(
                2, infoset_key(2, *public), [f"b{c}" for c in hand2]
            )
            for card2 in hand2:
                won = (card1 > card2) - (card1 < card2)
                child = reveal(
                    prizes, bids1 + (card1,), bids2 + (card2,), score + won * prizes[-1]
                )
                builder.edge(responder, f"b{card2}", child)
            builder.edge(node, label, responder)
        return node

    root = reveal((), (), (), 0)
    return builder.build(root)
