"""Liar's Dice with one n-sided die per player.

Claims are (quantity, face) pairs with quantity 1 or 2, ordered by quantity and
then face. Player 1 opens with a claim; afterwards the player to move either
raises to a strictly higher claim or calls the last claim a lie. A claim holds
when at least `quantity` of the two dice show `face`; the caller wins 1 if it
does not hold and loses 1 otherwise.
"""

from typing import List, Tuple

from app.constants.games import GameFamily
from app.core.efg.game_tree import GameTree, GameTreeBuilder
from app.core.games.common import check_rank, game_name, infoset_key

MAX_QUANTITY = 2
CALL = "liar"

Claim = Tuple[int, int]


def claims(n: int) -> List[Claim]:
    return [(q, f) for q in range(1, MAX_QUANTITY + 1) for f in range(1, n + 1)]


def claim_label(claim: Claim) -> str:
    return f"{claim[0]}x{claim[1]}"


def claim_holds(claim: Claim, die1: int, die2: int) -> bool:
    quantity, face = claim
    return (die1 == face) + (die2 == face) >= quantity


def liars_dice(n: int) -> GameTree:
    check_rank(GameFamily.LIARS_DICE, n)
    builder = GameTreeBuilder(name=game_name(GameFamily.LIARS_DICE, n))
    ladder = claims(n)
    labels = [claim_label(c) for c in ladder]

    def turn(die1: int, die2: int, history: Tuple[int, ...]) -> int:
        player = 1 if len(history) % 2 == 0 else 2
        die = die1 if player == 1 else die2
        start = history[-1] + 1 if history else 0
        actions = labels[start:] + ([CALL] if history else [])
        key = infoset_key(player, die, "-".join(labels[i] for i in history))
        node = builder.decision(player, key, actions)
        for offset, label in enumerate(actions):
            if label == CALL:
                caller_wins = not claim_holds(ladder[history[-1]], die1, die2)
                payoff = 1.0 if caller_wins else -1.0
                child = builder.terminal(payoff if player == 1 else -payoff)
            else:
                child = turn(die1, die2, history + (start + offset,))
            builder.edge(node, label, child)
        return node

    p = 1.0 / n
    root = builder.chance([(f"p1die{d}", p) for d in range(1, n + 1)])
    for die1 in range(1, n + 1):
        roll = builder.chance([(f"p2die{d}", p) for d in range(1, n + 1)])
        builder.edge(root, f"p1die{die1}", roll)
        for die2 in range(1, n + 1):
            builder.edge(roll, f"p2die{die2}", turn(die1, die2, ()))
    return builder.build(root)
