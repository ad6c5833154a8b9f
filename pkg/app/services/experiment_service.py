import json
import math
from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional, Union

from app.constants.trajectory import (
    META_FILE,
    STRATEGY_FILE,
    TRAJECTORY_FILE,
    TRAJECTORY_HEADER,
)
from app.core.efg.sequence_form import SolvableGame, StrategyProfile
from app.core.logging_config import get_logger
from app.core.solver.solver import Solver, SolveResult, SolveStatus
from app.core.solver.state import SolverState
from app.core.telemetry import instrument_method
from app.schemas.experiment import ExperimentConfig
from app.schemas.game import GameSizes
from app.schemas.trajectory import Trajectory, TrajectoryRow
from app.services.game_service import GameService
from app.utils.csv_format import format_real, format_row
from app.utils.version import describe_version

"""
Module providing the ExperimentService class: one configured solver run with
its trajectory, final strategy and metadata written to an output directory.
"""


@dataclass(eq=False)
class ExperimentResult:
    label: str
    status: SolveStatus
    output_dir: Path
    trajectory: Trajectory
    sizes: GameSizes
    wall_ms: int

    @property
    def final_row(self) -> TrajectoryRow:
        return self.trajectory.last


def strategy_lines(game: SolvableGame, profile: StrategyProfile) -> List[str]:
    """One line per infoset: ``player <p> infoset <key> label:prob ...``."""
    lines = []
    for seqs in game.index.players:
        behavior = profile.behavior(seqs.player)
        for infoset in seqs.infosets:
            probabilities = behavior.at(infoset)
            entries = " ".join(
                f"{game.tree.label(action)}:{format_real(float(p))}"
                for action, p in zip(infoset.actions, probabilities)
            )
            lines.append(f"player {seqs.player} infoset {infoset.key} {entries}")
    return lines


class ExperimentService:
    def __init__(self, game_service: Optional[GameService] = None):
        self.logger = get_logger("efpe")
        self.game_service = game_service or GameService()
        self.game_label: Optional[str] = None

    @instrument_method()
    def run(
        self,
        config: ExperimentConfig,
        output_dir: Optional[Union[str, Path]] = None,
    ) -> ExperimentResult:
        """
        Solve one configured game and write its artifacts.

        :param config: The validated experiment configuration.
        :param output_dir: Directory for the artifacts, ``config.output_dir`` when omitted.
        :return: The run's label, status, trajectory and output location.
        """
        self.game_label = config.game
        game = self.game_service.resolve(config.game)
        if config.verify_sizes and not self.game_service.is_file(config.game):
            sizes = self.game_service.verify_sizes(
                self.game_service.spec_for(config.game), game
            )
        else:
            sizes = self.game_service.sizes(game)

        target = Path(output_dir if output_dir is not None else config.output_dir)
        target.mkdir(parents=True, exist_ok=True)
        label = config.run_label
        self.logger.info(
            f"{label} on {sizes.name}: {sizes.infosets} infosets, "
            f"{sizes.sequences} sequences, {sizes.leaves} leaves -> {target}"
        )

        with open(target / TRAJECTORY_FILE, "w", encoding="utf-8", newline="") as stream:
            stream.write(TRAJECTORY_HEADER + "\n")

            def sink(row: TrajectoryRow, _state: SolverState) -> None:
                stream.write(format_row(row.values()) + "\n")
                stream.flush()

            result = Solver(game, config.solver_config(), sink=sink).solve()

        (target / STRATEGY_FILE).write_text(
            "\n".join(strategy_lines(game, result.profile)) + "\n", encoding="utf-8"
        )
        (target / META_FILE).write_text(
            json.dumps(self._meta(config, label, sizes, result), indent=2) + "\n",
            encoding="utf-8",
        )
        return ExperimentResult(
            label=label,
            status=result.status,
            output_dir=target,
            trajectory=result.trajectory,
            sizes=sizes,
            wall_ms=result.wall_ms,
        )

    def _meta(
        self,
        config: ExperimentConfig,
        label: str,
        sizes: GameSizes,
        result: SolveResult,
    ) -> dict:
        state = result.state
        return {
            "label": label,
            "version": describe_version(),
            "config": config.model_dump(mode="json"),
            "game": sizes.model_dump(mode="json"),
            "seed": config.seed,
            "status": result.status.value,
            "wall_ms": result.wall_ms,
            "traversals": state.traversals,
            "iterations": state.total_iterations,
            "problems": state.problem,
            "reference_resets": state.reference_resets,
            "epsilon_decays": state.decays,
            "final_epsilon": state.epsilon,
            "final_delta": None if math.isnan(state.delta) else state.delta,
        }
