from pathlib import Path
from typing import Dict, List, Optional

from app.exceptions.config_exceptions import ConfigInvalidError
from app.services.sweep_service import SweepResult, SweepService
from app.utils.config_file import build_experiment, parse_overrides, parse_sweep, read_text
from app.utils.presets import resolve_sweep_preset


class SweepCommand:
    """
    Command to run a sweep of experiment configurations and merge their trajectories.
    """

    def __init__(self, sweep_service: Optional[SweepService] = None):
        self.sweep_service = sweep_service or SweepService()

    def execute(
        self,
        sweep_path: Optional[Path] = None,
        preset: Optional[str] = None,
        overrides: Optional[List[str]] = None,
        parallel: bool = False,
        out: Optional[Path] = None,
    ) -> SweepResult:
        """
        Execute the command to run every configuration of a sweep.

        Args:
            sweep_path: Sweep file with shared defaults and ``[run]`` sections
            preset: Sweep preset such as ``compare:leduc3``
            overrides: ``key=value`` strings applied to every run
            parallel: Run configurations in worker processes
            out: Sweep output directory, defaulting to the runs' shared ``output_dir``

        Returns:
            SweepResult: One entry per configuration, failures included

        Raises:
            ConfigInvalidError: If the sweep is empty or any configuration does not validate
        """
        if (sweep_path is None) == (preset is None):
            raise ConfigInvalidError("give exactly one of a sweep file or --preset", ["sweep"])

        defaults: Dict[str, str]
        if preset is not None:
            defaults, runs = {}, resolve_sweep_preset(preset)
        else:
            defaults, runs = parse_sweep(read_text(sweep_path))
        shared = parse_overrides(overrides or [])

        configs = []
        for position, run in enumerate(runs, start=1):
            try:
                configs.append(build_experiment(defaults, run, shared))
            except ConfigInvalidError as exc:
                raise ConfigInvalidError(f"run {position}: {exc.message}", exc.fields) from exc

        target = Path(out) if out is not None else Path(configs[0].output_dir)
        return self.sweep_service.run(configs, target, parallel=parallel)
