import json
import math

from app.constants.trajectory import META_FILE, STRATEGY_FILE, TRAJECTORY_FILE, TRAJECTORY_HEADER
from app.core.efg.sequence_form import uniform_profile
from app.core.solver.solver import SolveStatus
from app.services.experiment_service import ExperimentService, strategy_lines


def test_run_writes_artifacts(quick_config, output_dir):
    """Test that a run writes its trajectory, final strategy and metadata."""
    config = quick_config()

    result = ExperimentService().run(config)

    # Assertions
    assert result.output_dir == output_dir
    assert result.status is SolveStatus.BUDGET_EXHAUSTED
    assert result.final_row.traversals == 40

    lines = (output_dir / TRAJECTORY_FILE).read_text(encoding="utf-8").splitlines()
    assert lines[0] == TRAJECTORY_HEADER
    assert [int(line.split(",")[0]) for line in lines[1:]] == [10, 20, 30, 40]

    strategy = (output_dir / STRATEGY_FILE).read_text(encoding="utf-8").splitlines()
    assert len(strategy) == 12
    assert all(line.startswith("player ") for line in strategy)

    meta = json.loads((output_dir / META_FILE).read_text(encoding="utf-8"))
    assert meta["label"] == "RTCFR+(0)"
    assert meta["status"] == "budget_exhausted"
    assert meta["traversals"] == 40
    assert meta["game"]["infosets"] == 12
    assert meta["config"]["game"] == "kuhn3"
    assert meta["final_delta"] is None


def test_adaptive_metadata(quick_config, output_dir):
    config = quick_config(perturbation="adaptive", epsilon=0.1, delta=10.0, gamma=0.5)

    ExperimentService().run(config, output_dir / "adaptive")

    meta = json.loads((output_dir / "adaptive" / META_FILE).read_text(encoding="utf-8"))
    assert meta["label"] == "RTCFR+(adp)"
    assert meta["epsilon_decays"] >= 1
    assert meta["final_epsilon"] < 0.1
    assert not math.isnan(meta["final_delta"])


def test_trajectory_rows_match_the_result(quick_config, output_dir):
    result = ExperimentService().run(quick_config())

    lines = (output_dir / TRAJECTORY_FILE).read_text(encoding="utf-8").splitlines()[1:]
    written = [float(line.split(",")[1]) for line in lines]
    assert written == [row.exploitability for row in result.trajectory.rows]


def test_verify_sizes_on_a_benchmark(quick_config):
    result = ExperimentService().run(quick_config(verify_sizes=True))

    assert result.sizes.as_tuple() == (12, 26, 30)


def test_strategy_lines_name_actions(pennies):
    lines = strategy_lines(pennies, uniform_profile(pennies.index))

    assert lines == [
        "player 1 infoset p1: H:0.5 T:0.5",
        "player 2 infoset p2: H:0.5 T:0.5",
    ]
