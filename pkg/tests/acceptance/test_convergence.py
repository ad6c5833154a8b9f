"""End-to-end convergence runs with the tuned presets (``pytest -m slow``)."""

import pytest

from app.core.efg.sequence_form import SolvableGame
from app.core.games.liars_dice import liars_dice
from app.core.metrics import best_response, max_info_set_regret, profile_exploitability
from app.core.solver.solver import SolveStatus, Solver, solve
from app.core.solver.state import check_polytope
from app.schemas.solver import SolverConfig
from app.utils.config_file import build_experiment
from app.utils.presets import resolve_preset

pytestmark = pytest.mark.slow

KUHN_VALUE = -1.0 / 18.0


def preset_solver(name, **overrides):
    layers = [resolve_preset(name), {k: str(v) for k, v in overrides.items()}]
    return build_experiment(*layers).solver_config()


@pytest.fixture(scope="module")
def liarsdice5():
    return SolvableGame.from_tree(liars_dice(5))


def test_cfr_plus_average_recovers_the_kuhn_value(kuhn3, oracle_best_response):
    config = SolverConfig(
        algorithm="cfr+", traversal_budget=2_000_000, eval_every=2_000_000
    )

    result = solve(config, kuhn3)

    assert result.state.total_iterations == 1_000_000
    q1 = kuhn3.sequence(result.profile.player1)
    q2 = kuhn3.sequence(result.profile.player2)
    best_for_player1 = best_response(kuhn3, q2, 1).value
    best_for_player2 = best_response(kuhn3, q1, 2).value
    assert best_for_player1 == pytest.approx(KUHN_VALUE, abs=1e-6)
    assert -best_for_player2 == pytest.approx(KUHN_VALUE, abs=1e-6)
    assert oracle_best_response(kuhn3, result.profile, 1) == pytest.approx(
        best_for_player1, abs=1e-12
    )
    assert oracle_best_response(kuhn3, result.profile, 2) == pytest.approx(
        best_for_player2, abs=1e-12
    )


def test_kuhn_adaptive_reaches_a_perfect_equilibrium(kuhn3, oracle_value):
    config = preset_solver(
        "tuned:kuhn3",
        until_exploitability=1e-6,
        until_max_regret=1e-6,
        eval_every=100,
    )

    result = solve(config, kuhn3)

    assert result.status is SolveStatus.TOLERANCE_REACHED
    assert result.state.traversals <= 100_000
    assert profile_exploitability(kuhn3, result.profile) <= 1e-6
    assert max_info_set_regret(kuhn3, result.profile).r_max <= 1e-6
    assert oracle_value(kuhn3, result.profile) == pytest.approx(KUHN_VALUE, abs=1e-5)


def test_adaptive_beats_fixed_perturbation_on_regret(kuhn3):
    adaptive = solve(preset_solver("tuned:kuhn3", traversal_budget=20_000), kuhn3)
    fixed = solve(preset_solver("fixed:kuhn3:0.1", traversal_budget=20_000), kuhn3)

    assert adaptive.trajectory.last.max_isregret < fixed.trajectory.last.max_isregret


def test_adaptive_iterates_stay_in_the_perturbed_polytope(leduc3):
    """Test every logged point of a full tuned run on Leduc(3)."""
    slacks = []
    epsilons = []

    def record(row, state):
        slacks.append(min(check_polytope(state)))
        epsilons.append(row.epsilon)

    config = preset_solver("tuned:leduc3", eval_every=500)
    result = Solver(leduc3, config, sink=record).solve()

    assert result.state.traversals == 100_000
    assert len(slacks) == len(result.trajectory)
    assert min(slacks) >= -1e-13
    assert all(later <= earlier for earlier, later in zip(epsilons, epsilons[1:]))


def test_liars_dice_reaches_a_deep_isne(liarsdice5):
    config = preset_solver("tuned:liarsdice5", traversal_budget=10_000, eval_every=500)

    result = solve(config, liarsdice5)

    assert result.state.decays > 0
    assert min(row.max_isregret for row in result.trajectory.rows) < 1e-8


def test_fixed_epsilon_trades_regret_for_exploitability(leduc3):
    """Test that a larger ε lowers regret and raises exploitability, with 0.01 in between."""
    final = {}
    for epsilon in ("0.1", "0.01", "0.001"):
        config = preset_solver(f"fixed:leduc3:{epsilon}", eval_every=100_000)
        final[epsilon] = solve(config, leduc3).trajectory.last

    # Assertions
    assert final["0.1"].max_isregret <= final["0.01"].max_isregret <= final["0.001"].max_isregret
    assert final["0.1"].exploitability >= final["0.01"].exploitability >= final["0.001"].exploitability
    assert final["0.1"].max_isregret < final["0.001"].max_isregret
    assert final["0.1"].exploitability > final["0.001"].exploitability


def test_cfr_plus_converges_in_exploitability(leduc3):
    config = preset_solver("cfrplus:leduc3:0", traversal_budget=20_000, eval_every=1000)

    result = solve(config, leduc3)

    assert result.trajectory.last.exploitability < 0.01
