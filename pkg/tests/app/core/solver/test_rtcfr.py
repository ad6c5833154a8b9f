import math

import numpy as np
import pytest

from app.core.perturbation import make_basis, to_perturbed
from app.core.regret_dynamics import RegretState, RTConfig, rtrm_nfg_step
from app.core.solver.rtcfr import (
    adaptive_perturbation_step,
    reset_reference,
    rt_bspp_schedule,
    rtcfr_iteration,
)
from app.core.solver.state import check_polytope, initial_state
from app.schemas.solver import SolverConfig

PENNIES = np.array([[1.0, -1.0], [-1.0, 1.0]])


def rtcfr_config(**overrides):
    values = {
        "algorithm": "rtcfr",
        "variant": "rm+",
        "mu": 0.0,
        "problems": 1,
        "iterations_per_problem": 10,
        "alternating": False,
    }
    values.update(overrides)
    return SolverConfig(**values)


def adaptive_config(epsilon0=0.1, delta=0.5, gamma=0.5, **overrides):
    return rtcfr_config(
        perturbation={"mode": "adaptive", "epsilon0": epsilon0, "delta": delta, "gamma": gamma},
        **overrides,
    )


@pytest.mark.parametrize("variant,plus", [("rm", False), ("rm+", True)])
@pytest.mark.parametrize("game_name", ["kuhn3", "dominated"])
def test_unperturbed_iterations_match_tabular_cfr(request, oracle_cfr, variant, plus, game_name):
    game = request.getfixturevalue(game_name)
    config = rtcfr_config(variant=variant)
    state = initial_state(game, config)
    for _ in range(50):
        rtcfr_iteration(state, game, config)

    expected = oracle_cfr(game, 50, plus=plus)
    for info in game.index.infosets:
        actual = state.player(info.player).behavior().at(info)
        np.testing.assert_allclose(actual, expected[info.id], rtol=0, atol=1e-12)


def test_simultaneous_iterations_cost_one_traversal(kuhn3):
    config = rtcfr_config()
    state = initial_state(kuhn3, config)
    for _ in range(3):
        rtcfr_iteration(state, kuhn3, config)

    assert state.traversals == 3
    assert state.total_iterations == 3


def test_alternating_rtcfr_iterations_cost_one_traversal(kuhn3):
    config = rtcfr_config(alternating=True)
    state = initial_state(kuhn3, config)
    rtcfr_iteration(state, kuhn3, config)

    assert state.traversals == 1


def test_alternating_cfr_plus_iterations_cost_two_traversals(kuhn3):
    config = SolverConfig(algorithm="cfr+", traversal_budget=10)
    state = initial_state(kuhn3, config)
    rtcfr_iteration(state, kuhn3, config)

    assert state.traversals == 2


def test_player_two_sees_the_fresh_strategy_when_alternating(kuhn3):
    alternating = initial_state(kuhn3, rtcfr_config(alternating=True))
    simultaneous = initial_state(kuhn3, rtcfr_config())
    rtcfr_iteration(alternating, kuhn3, rtcfr_config(alternating=True))
    rtcfr_iteration(simultaneous, kuhn3, rtcfr_config())

    np.testing.assert_array_equal(
        alternating.player(1).regrets, simultaneous.player(1).regrets
    )
    assert not np.allclose(
        alternating.player(2).regrets, simultaneous.player(2).regrets
    )


@pytest.mark.parametrize("variant", ["rm", "rm+"])
def test_perturbed_transformed_iterations_match_the_matrix_game(pennies, variant):
    """Test a tree iteration with μ > 0 and ε > 0 against the matrix-game step."""
    config = rtcfr_config(
        variant=variant, mu=0.3, perturbation={"mode": "fixed", "epsilon": 0.1}
    )
    state = initial_state(pennies, config)
    references = (np.array([0.7, 0.3]), np.array([0.2, 0.8]))
    for ps, reference in zip(state.players, references):
        ps.reference[1:] = reference

    bases = (make_basis(2, 0.1), make_basis(2, 0.1))
    rt = tuple(RTConfig(0.3, reference) for reference in references)
    rule = config.rule
    states = (RegretState.zeros(2, rule), RegretState.zeros(2, rule))
    x = tuple(to_perturbed(b, np.full(2, 0.5)) for b in bases)

    for _ in range(50):
        rtcfr_iteration(state, pennies, config)
        states, x = rtrm_nfg_step(PENNIES, states, bases, rt, x)
        for i, ps in enumerate(state.players):
            np.testing.assert_allclose(ps.regrets[1:], states[i].R, rtol=0, atol=1e-12)
            np.testing.assert_allclose(ps.strategy[1:], x[i], rtol=0, atol=1e-12)


def test_iterates_stay_in_the_perturbed_polytope(leduc3):
    config = rtcfr_config(mu=0.1, perturbation={"mode": "fixed", "epsilon": 0.05})
    state = initial_state(leduc3, config)
    for _ in range(20):
        rtcfr_iteration(state, leduc3, config)

    assert min(check_polytope(state)) >= -1e-12


def test_schedule_resets_the_reference_between_problems(kuhn3):
    config = rtcfr_config(problems=3, iterations_per_problem=2)
    state = initial_state(kuhn3, config)
    seen = []
    for problem in rt_bspp_schedule(state, config):
        seen.append(problem)
        for _ in range(config.iterations_per_problem):
            rtcfr_iteration(state, kuhn3, config)

    assert seen == [1, 2, 3]
    assert state.reference_resets == 2
    assert state.problem == 3
    assert state.iteration == 2


def test_reset_reference_copies_the_current_strategy(kuhn3):
    config = rtcfr_config(mu=0.5)
    state = initial_state(kuhn3, config)
    for _ in range(5):
        rtcfr_iteration(state, kuhn3, config)

    reset_reference(state)

    for ps in state.players:
        np.testing.assert_array_equal(ps.reference, ps.strategy)
        assert ps.reference is not ps.strategy


def test_adaptive_step_decays_at_an_isne(pennies):
    config = adaptive_config(epsilon0=0.1, delta=0.5, gamma=0.5)
    state = initial_state(pennies, config)

    r_max = adaptive_perturbation_step(state, pennies, config, 1e-12, 1e-15)

    assert r_max == pytest.approx(0.0, abs=1e-12)
    assert state.epsilon == pytest.approx(0.05)
    assert state.delta == pytest.approx(0.25)
    assert state.decays == 1
    assert state.traversals == 1
    np.testing.assert_allclose(state.player(1).perturbation.epsilon, 0.05)


def test_adaptive_step_keeps_epsilon_above_threshold(kuhn3):
    config = adaptive_config(epsilon0=0.1, delta=1e-9, gamma=0.5)
    state = initial_state(kuhn3, config)

    r_max = adaptive_perturbation_step(state, kuhn3, config, 1e-12, 1e-15)

    assert r_max > 1e-9
    assert state.epsilon == pytest.approx(0.1)
    assert state.delta == pytest.approx(1e-9)
    assert state.decays == 0


def test_epsilon_stops_at_the_floor_while_delta_decays(pennies):
    config = adaptive_config(epsilon0=0.06, delta=0.5, gamma=0.5)
    state = initial_state(pennies, config)

    adaptive_perturbation_step(state, pennies, config, 0.05, 1e-15)

    assert state.epsilon == pytest.approx(0.06)
    assert state.delta == pytest.approx(0.25)


def test_adaptive_step_rejects_fixed_perturbations(kuhn3):
    config = rtcfr_config()
    state = initial_state(kuhn3, config)

    assert math.isnan(state.delta)
    with pytest.raises(ValueError):
        adaptive_perturbation_step(state, kuhn3, config, 1e-12, 1e-15)


def test_adaptive_step_measures_regret_inside_the_perturbed_game(dominated):
    """Test that ε(I) forced onto a bad action does not block the decay."""
    config = adaptive_config(epsilon0=0.1, delta=0.1, gamma=0.5)
    state = initial_state(dominated, config)
    tables = (
        {"p1:start": [0.1, 0.9], "p1:in:a": [0.9, 0.1], "p1:in:b": [0.9, 0.1]},
        {"p2:in": [0.1, 0.9]},
    )
    for ps, table in zip(state.players, tables):
        for info in ps.sequences.infosets:
            ps.strategy[info.start : info.start + info.size] = table[info.key]

    r_max = adaptive_perturbation_step(state, dominated, config, 1e-12, 1e-15)

    assert r_max == pytest.approx(0.0, abs=1e-12)
    assert state.decays == 1
    assert state.epsilon == pytest.approx(0.05)
