import math
import time
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Optional

from app.config import Settings, get_settings
from app.core.efg.sequence_form import SolvableGame, StrategyProfile
from app.core.logging_config import get_logger
from app.core.metrics import max_info_set_regret, profile_exploitability
from app.core.solver.rtcfr import (
    adaptive_perturbation_step,
    rt_bspp_schedule,
    rtcfr_iteration,
)
from app.core.solver.state import SolverState, initial_state
from app.core.telemetry import instrument_method
from app.schemas.solver import SolverConfig
from app.schemas.trajectory import Trajectory, TrajectoryRow


class SolveStatus(str, Enum):
    COMPLETED = "completed"
    """All N×T iterations ran."""
    BUDGET_EXHAUSTED = "budget_exhausted"
    """The traversal budget stopped the run first."""
    TOLERANCE_REACHED = "tolerance_reached"


RowSink = Callable[[TrajectoryRow, SolverState], None]


@dataclass(eq=False)
class SolveResult:
    profile: StrategyProfile
    trajectory: Trajectory
    status: SolveStatus
    state: SolverState
    wall_ms: int


class Solver:
    """Runs CFR+ or RTCFR on one game and reports a trajectory of exact metrics."""

    def __init__(
        self,
        game: SolvableGame,
        config: SolverConfig,
        sink: Optional[RowSink] = None,
        settings: Optional[Settings] = None,
    ):
        self.game = game
        self.config = config
        self.sink = sink
        self.settings = settings or get_settings()
        self.game_label = game.name
        self.logger = get_logger("efpe")

    @instrument_method()
    def solve(self) -> SolveResult:
        config = self.config
        state = initial_state(self.game, config)
        trajectory = Trajectory()
        started = time.perf_counter()
        cost = config.traversals_per_iteration
        next_log = config.eval_every
        status: Optional[SolveStatus] = None

        if config.log_initial:
            self._log(state, trajectory, started)

        for _ in rt_bspp_schedule(state, config):
            if config.is_adaptive:
                if not self._fits(state, 1):
                    status = SolveStatus.BUDGET_EXHAUSTED
                    break
                adaptive_perturbation_step(
                    state,
                    self.game,
                    config,
                    self.settings.epsilon_floor,
                    self.settings.reach_floor,
                )
            for _ in range(config.iterations_per_problem):
                if not self._fits(state, cost):
                    status = SolveStatus.BUDGET_EXHAUSTED
                    break
                rtcfr_iteration(state, self.game, config)
                if state.traversals >= next_log:
                    row = self._log(state, trajectory, started)
                    next_log = (state.traversals // config.eval_every + 1) * config.eval_every
                    if self._tolerance_met(row):
                        status = SolveStatus.TOLERANCE_REACHED
                        break
            if status is not None:
                break
        else:
            status = SolveStatus.COMPLETED

        if not trajectory.rows or trajectory.last.traversals != state.traversals:
            row = self._log(state, trajectory, started)
            if status is not SolveStatus.TOLERANCE_REACHED and self._tolerance_met(row):
                status = SolveStatus.TOLERANCE_REACHED

        wall_ms = int((time.perf_counter() - started) * 1000)
        self.logger.info(
            f"{self.game_label}: {status.value} after {state.traversals} traversals "
            f"({state.total_iterations} iterations, {wall_ms} ms)"
        )
        return SolveResult(
            profile=state.evaluated_profile(),
            trajectory=trajectory,
            status=status,
            state=state,
            wall_ms=wall_ms,
        )

    def _fits(self, state: SolverState, extra: int) -> bool:
        budget = self.config.traversal_budget
        return budget is None or state.traversals + extra <= budget

    def _tolerance_met(self, row: TrajectoryRow) -> bool:
        config = self.config
        if config.until_exploitability is None and config.until_max_regret is None:
            return False
        if (
            config.until_exploitability is not None
            and row.exploitability > config.until_exploitability
        ):
            return False
        if (
            config.until_max_regret is not None
            and row.max_isregret > config.until_max_regret
        ):
            return False
        return True

    def evaluate(self, state: SolverState, wall_ms: int = 0) -> TrajectoryRow:
        profile = state.evaluated_profile()
        return TrajectoryRow(
            traversals=state.traversals,
            exploitability=profile_exploitability(self.game, profile),
            max_isregret=max_info_set_regret(
                self.game, profile, self.settings.reach_floor
            ).r_max,
            epsilon=state.epsilon,
            delta=state.delta,
            wall_ms=wall_ms,
        )

    def _log(self, state: SolverState, trajectory: Trajectory, started: float) -> TrajectoryRow:
        wall_ms = (
            int((time.perf_counter() - started) * 1000)
            if self.config.record_wall_time
            else 0
        )
        row = self.evaluate(state, wall_ms)
        trajectory.append(row)
        delta = "-" if math.isnan(row.delta) else f"{row.delta:.3e}"
        self.logger.info(
            f"{self.game_label} T'={row.traversals} expl={row.exploitability:.6e} "
            f"r_max={row.max_isregret:.6e} eps={row.epsilon:.3e} delta={delta}"
        )
        if self.sink is not None:
            self.sink(row, state)
        return row


def solve(
    config: SolverConfig,
    game: SolvableGame,
    sink: Optional[RowSink] = None,
) -> SolveResult:
    return Solver(game, config, sink).solve()
