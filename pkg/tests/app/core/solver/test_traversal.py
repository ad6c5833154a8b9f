import numpy as np
import pytest

from app.core.efg.sequence_form import uniform_profile
from app.core.solver.traversal import (
    best_response_values,
    counterfactual_values,
    infoset_reach_mass,
    perturbed_best_response_values,
)


@pytest.mark.parametrize("player", [1, 2])
def test_empty_sequence_holds_expected_utility(small_game, random_profile, oracle_value, player):
    profile = random_profile(small_game)
    opponent = profile.behavior(2 if player == 1 else 1)
    v = counterfactual_values(
        small_game, small_game.sequence(opponent), profile.behavior(player), player
    )

    sign = 1.0 if player == 1 else -1.0
    assert v[0] == pytest.approx(sign * oracle_value(small_game, profile), abs=1e-10)


def test_best_response_choices_index_each_infoset(leduc3, random_profile):
    profile = random_profile(leduc3)
    seqs = leduc3.index.player(1)
    _, choices = best_response_values(leduc3, leduc3.sequence(profile.player2), 1)

    assert choices.shape == (seqs.n_infosets,)
    assert np.all(choices >= 0)
    assert np.all(choices < seqs.infoset_size)


def test_zero_perturbation_is_the_free_best_response(goofspiel3, random_profile):
    profile = random_profile(goofspiel3)
    q2 = goofspiel3.sequence(profile.player2)
    seqs = goofspiel3.index.player(1)
    free, _ = best_response_values(goofspiel3, q2, 1)
    boxed = perturbed_best_response_values(goofspiel3, q2, 1, np.zeros(seqs.n_infosets))

    assert boxed[0] == pytest.approx(free[0], abs=1e-12)


def test_reach_mass_under_uniform_play(kuhn3):
    profile = uniform_profile(kuhn3.index)
    mass = infoset_reach_mass(kuhn3, kuhn3.sequence(profile.player2), 1)
    by_key = {info.key: mass[info.local] for info in kuhn3.index.player(1).infosets}

    # each card is dealt to player 1 with probability 1/3
    assert by_key["p1:0:"] == pytest.approx(1.0 / 3.0)
    assert by_key["p1:2:kb"] == pytest.approx(1.0 / 6.0)
