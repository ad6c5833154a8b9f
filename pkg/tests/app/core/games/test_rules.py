import pytest

from app.core.efg.game_tree import ChanceNode, DecisionNode, TerminalNode
from app.core.games.goofspiel import goofspiel
from app.core.games.kuhn import kuhn
from app.core.games.leduc import leduc
from app.core.games.liars_dice import CALL, claim_holds, claim_label, claims, liars_dice


def _follow(tree, labels):
    node = tree.root
    for label in labels:
        actions = [tree.label(a) for a in tree.nodes[node].actions]
        node = tree.children[node][actions.index(label)]
    return node


def test_kuhn_payoffs(kuhn3_tree):
    # deal "d2-0": player 1 holds the highest card
    assert kuhn3_tree.nodes[_follow(kuhn3_tree, ["d2-0", "b", "c"])].utility_p1 == 2.0
    assert kuhn3_tree.nodes[_follow(kuhn3_tree, ["d2-0", "k", "k"])].utility_p1 == 1.0
    assert kuhn3_tree.nodes[_follow(kuhn3_tree, ["d0-2", "b", "f"])].utility_p1 == 1.0
    assert kuhn3_tree.nodes[_follow(kuhn3_tree, ["d0-2", "k", "b", "f"])].utility_p1 == -1.0
    assert kuhn3_tree.nodes[_follow(kuhn3_tree, ["d0-2", "k", "b", "c"])].utility_p1 == -2.0


def test_kuhn_infosets_hide_the_opponent_card(kuhn3_tree):
    left = kuhn3_tree.nodes[_follow(kuhn3_tree, ["d1-0"])]
    right = kuhn3_tree.nodes[_follow(kuhn3_tree, ["d1-2"])]

    assert left.infoset == right.infoset
    assert kuhn3_tree.infoset_key(left.infoset) == "p1:1:"


def test_leduc_deal_probabilities_follow_card_counts():
    tree = leduc(3)
    second = tree.nodes[_follow(tree, ["p1card0"])]
    probabilities = {tree.label(a): p for a, p in second.outcomes}

    assert probabilities["p2card0"] == pytest.approx(1 / 5)
    assert probabilities["p2card1"] == pytest.approx(2 / 5)

    public = tree.nodes[_follow(tree, ["p1card0", "p2card0", "c", "c"])]
    assert isinstance(public, ChanceNode)
    assert {tree.label(a): p for a, p in public.outcomes} == pytest.approx(
        {"pub1": 0.5, "pub2": 0.5}
    )


def test_leduc_raise_cap_and_sizes():
    tree = leduc(3)
    capped = tree.nodes[_follow(tree, ["p1card2", "p2card0", "r", "r"])]

    assert [tree.label(a) for a in capped.actions] == ["f", "c"]
    # raise 2, re-raise 2 more, fold: player 1 loses ante plus one raise
    fold = _follow(tree, ["p1card2", "p2card0", "r", "r", "f"])
    assert tree.nodes[fold].utility_p1 == -3.0


def test_leduc_pair_wins_showdown():
    tree = leduc(3)
    showdown = _follow(tree, ["p1card0", "p2card2", "c", "c", "pub0", "c", "c"])

    assert tree.nodes[showdown].utility_p1 == 1.0


def test_goofspiel_second_bidder_does_not_see_the_first_bid():
    tree = goofspiel(3)
    after_low = tree.nodes[_follow(tree, ["prize2", "b1"])]
    after_high = tree.nodes[_follow(tree, ["prize2", "b3"])]

    assert isinstance(after_low, DecisionNode)
    assert after_low.player == 2
    assert after_low.infoset == after_high.infoset


def test_goofspiel_last_turn_is_forced():
    tree = goofspiel(3)
    last = tree.nodes[_follow(tree, ["prize1", "b1", "b2", "prize2", "b2", "b1", "prize3"])]

    assert isinstance(last, DecisionNode)
    assert [tree.label(a) for a in last.actions] == ["b3"]


def test_goofspiel_scores_prizes():
    tree = goofspiel(3)
    path = ["prize1", "b1", "b2", "prize2", "b2", "b1", "prize3", "b3", "b3"]

    # loses prize 1, wins prize 2, ties prize 3
    assert tree.nodes[_follow(tree, path)].utility_p1 == 1.0


def test_liars_dice_claim_ladder():
    ladder = claims(3)

    assert [claim_label(c) for c in ladder] == ["1x1", "1x2", "1x3", "2x1", "2x2", "2x3"]
    assert claim_holds((2, 3), 3, 3)
    assert not claim_holds((2, 3), 3, 1)
    assert claim_holds((1, 1), 2, 1)


def test_liars_dice_opening_has_no_challenge(liarsdice3):
    tree = liarsdice3.tree
    opening = tree.nodes[_follow(tree, ["p1die1", "p2die1"])]

    assert CALL not in [tree.label(a) for a in opening.actions]
    assert len(opening.actions) == 6


def test_liars_dice_challenge_payoffs(liarsdice3):
    tree = liarsdice3.tree
    false_claim = _follow(tree, ["p1die1", "p2die2", "2x1", CALL])
    true_claim = _follow(tree, ["p1die1", "p2die2", "1x2", CALL])

    assert isinstance(tree.nodes[false_claim], TerminalNode)
    # player 2 calls a false claim and wins
    assert tree.nodes[false_claim].utility_p1 == -1.0
    assert tree.nodes[true_claim].utility_p1 == 1.0


def test_liars_dice_infoset_key(liarsdice3):
    tree = liarsdice3.tree
    node = tree.nodes[_follow(tree, ["p1die2", "p2die3", "1x1", "1x3"])]

    assert tree.infoset_key(node.infoset) == "p1:2:1x1-1x3"


def test_smallest_instances_build():
    for tree in (kuhn(2), leduc(2), goofspiel(2), liars_dice(2)):
        assert tree.n_leaves > 0
        assert isinstance(tree.nodes[tree.root], ChanceNode)
