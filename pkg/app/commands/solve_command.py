from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List, Optional

from app.constants.exit_codes import EXIT_OK, EXIT_TOLERANCE_NOT_REACHED
from app.core.solver.solver import SolveStatus
from app.schemas.experiment import ExperimentConfig
from app.services.experiment_service import ExperimentResult, ExperimentService
from app.utils.config_file import (
    build_experiment,
    parse_key_values,
    parse_overrides,
    read_text,
)
from app.utils.presets import resolve_preset


@dataclass
class SolveOutcome:
    config: ExperimentConfig
    result: ExperimentResult

    @property
    def exit_code(self) -> int:
        """Exit 4 only when a tolerance was requested and the run stopped short of it."""
        wants_tolerance = (
            self.config.until_exploitability is not None
            or self.config.until_max_regret is not None
        )
        if wants_tolerance and self.result.status is not SolveStatus.TOLERANCE_REACHED:
            return EXIT_TOLERANCE_NOT_REACHED
        return EXIT_OK


def experiment_layers(
    preset: Optional[str] = None,
    config_path: Optional[Path] = None,
    overrides: Optional[List[str]] = None,
) -> List[Dict[str, str]]:
    """Configuration layers in precedence order: preset, file, then ``--set`` overrides."""
    layers: List[Dict[str, str]] = []
    if preset:
        layers.append(resolve_preset(preset))
    if config_path is not None:
        layers.append(parse_key_values(read_text(config_path)))
    layers.append(parse_overrides(overrides or []))
    return layers


class SolveCommand:
    """
    Command to run one configured solver experiment.
    """

    def __init__(self, experiment_service: Optional[ExperimentService] = None):
        self.experiment_service = experiment_service or ExperimentService()

    def execute(
        self,
        preset: Optional[str] = None,
        config_path: Optional[Path] = None,
        overrides: Optional[List[str]] = None,
        until_exploitability: Optional[float] = None,
        until_max_regret: Optional[float] = None,
        verify_sizes: bool = False,
        out: Optional[Path] = None,
    ) -> SolveOutcome:
        """
        Execute the command to solve one game.

        Args:
            preset: Named preset such as ``tuned:kuhn3``
            config_path: A key=value configuration file
            overrides: Repeated ``key=value`` strings applied last
            until_exploitability: Stop once exploitability is at or below this value
            until_max_regret: Stop once the maximum information-set regret is at or below this value
            verify_sizes: Check a benchmark game against its reference size triple
            out: Output directory, overriding the configuration's

        Returns:
            SolveOutcome: The validated configuration and the run result

        Raises:
            ConfigInvalidError: If no game is configured or a field does not validate
            GameSizeMismatchError: If verification is requested and fails
        """
        flags: Dict[str, str] = {}
        if until_exploitability is not None:
            flags["until_exploitability"] = repr(until_exploitability)
        if until_max_regret is not None:
            flags["until_max_regret"] = repr(until_max_regret)
        if verify_sizes:
            flags["verify_sizes"] = "true"
        if out is not None:
            flags["output_dir"] = str(out)

        config = build_experiment(
            *experiment_layers(preset, config_path, overrides), flags
        )
        return SolveOutcome(config=config, result=self.experiment_service.run(config))
