import pytest

from app.core.efg.game_tree import GameTreeBuilder
from app.core.efg.sequence_form import SolvableGame
from app.core.games.goofspiel import goofspiel
from app.core.games.kuhn import kuhn
from app.core.games.leduc import leduc
from app.core.games.liars_dice import liars_dice


def build_matching_pennies():
    """Player 2 picks heads or tails without seeing player 1's pick; a match pays player 1."""
    builder = GameTreeBuilder(name="pennies")
    root = builder.decision(1, "p1:", ("H", "T"))
    for first in ("H", "T"):
        node = builder.decision(2, "p2:", ("H", "T"))
        builder.edge(root, first, node)
        for second in ("H", "T"):
            builder.edge(node, second, builder.terminal(1.0 if first == second else -1.0))
    return builder.build(root)


def build_dominated_choice():
    """Player 1 takes 2 by going out, or goes in; player 2 then picks a or b and
    player 1 picks good or bad, where bad is strictly worse after either reply."""
    builder = GameTreeBuilder(name="dominated")
    root = builder.decision(1, "p1:start", ("in", "out"))
    builder.edge(root, "out", builder.terminal(2.0))
    middle = builder.decision(2, "p2:in", ("a", "b"))
    builder.edge(root, "in", middle)
    for reply, bonus in (("a", 1.0), ("b", -1.0)):
        last = builder.decision(1, f"p1:in:{reply}", ("good", "bad"))
        builder.edge(middle, reply, last)
        builder.edge(last, "good", builder.terminal(bonus + 2.0))
        builder.edge(last, "bad", builder.terminal(bonus - 2.0))
    return builder.build(root)


@pytest.fixture(scope="session")
def kuhn3_tree():
    return kuhn(3)


@pytest.fixture(scope="session")
def kuhn3(kuhn3_tree):
    return SolvableGame.from_tree(kuhn3_tree)


@pytest.fixture(scope="session")
def leduc3():
    return SolvableGame.from_tree(leduc(3))


@pytest.fixture(scope="session")
def goofspiel3():
    return SolvableGame.from_tree(goofspiel(3))


@pytest.fixture(scope="session")
def liarsdice3():
    return SolvableGame.from_tree(liars_dice(3))


@pytest.fixture(scope="session")
def pennies():
    return SolvableGame.from_tree(build_matching_pennies())


@pytest.fixture(scope="session")
def dominated():
    return SolvableGame.from_tree(build_dominated_choice())


@pytest.fixture(
    scope="session", params=["kuhn3", "leduc3", "goofspiel3", "liarsdice3"]
)
def small_game(request):
    """Each small benchmark game in turn."""
    return request.getfixturevalue(request.param)
