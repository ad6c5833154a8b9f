import json
import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional, Set, Union

from app.config import Settings, get_settings
from app.constants.trajectory import (
    COMPARISON_FILE,
    COMPARISON_HEADER,
    SWEEP_SUMMARY_FILE,
)
from app.core.logging_config import get_logger
from app.core.telemetry import instrument_method
from app.schemas.experiment import ExperimentConfig
from app.schemas.trajectory import Trajectory
from app.services.experiment_service import ExperimentService
from app.utils.csv_format import format_row

"""
Module providing the SweepService class: several experiment configurations run
into per-label subdirectories and merged into one comparison table.
"""


@dataclass
class SweepRun:
    label: str
    directory: Path
    status: Optional[str] = None
    error: Optional[str] = None
    trajectory: Optional[Trajectory] = None

    @property
    def failed(self) -> bool:
        return self.error is not None


@dataclass
class SweepResult:
    output_dir: Path
    runs: List[SweepRun] = field(default_factory=list)

    @property
    def failures(self) -> List[SweepRun]:
        return [run for run in self.runs if run.failed]


def directory_name(label: str) -> str:
    return re.sub(r"[^A-Za-z0-9._-]+", "_", label).strip("_") or "run"


def unique_labels(labels: List[str]) -> List[str]:
    """Suffix repeated labels with their ordinal: ``a``, ``a#2``, ``a#3``."""
    seen: Dict[str, int] = {}
    result = []
    for label in labels:
        seen[label] = seen.get(label, 0) + 1
        result.append(label if seen[label] == 1 else f"{label}#{seen[label]}")
    return result


def unique_directories(labels: List[str]) -> List[str]:
    """Filesystem-safe names, suffixed ``_2``, ``_3`` where two labels map to the same one."""
    taken: Set[str] = set()
    result = []
    for label in labels:
        base = directory_name(label)
        name, k = base, 1
        while name in taken:
            k += 1
            name = f"{base}_{k}"
        taken.add(name)
        result.append(name)
    return result


def _run_one(config: ExperimentConfig, directory: Path) -> SweepRun:
    label = config.run_label
    try:
        result = ExperimentService().run(config, directory)
    except Exception as exc:
        return SweepRun(label=label, directory=directory, error=f"{type(exc).__name__}: {exc}")
    return SweepRun(
        label=label,
        directory=directory,
        status=result.status.value,
        trajectory=result.trajectory,
    )


class SweepService:
    def __init__(self, settings: Optional[Settings] = None):
        self.logger = get_logger("efpe")
        self.settings = settings or get_settings()
        self.game_label: Optional[str] = None

    @instrument_method()
    def run(
        self,
        configs: List[ExperimentConfig],
        output_dir: Union[str, Path],
        parallel: bool = False,
    ) -> SweepResult:
        """
        Run every configuration and write the comparison table.

        A failing configuration is logged and recorded; the others still run.

        :param configs: Validated configurations in sweep order.
        :param output_dir: Directory holding one subdirectory per run.
        :param parallel: Run configurations in worker processes.
        :return: One entry per configuration, in sweep order.
        """
        target = Path(output_dir)
        target.mkdir(parents=True, exist_ok=True)
        labels = unique_labels([config.run_label for config in configs])
        renamed = []
        for config, label in zip(configs, labels):
            if config.run_label != label:
                self.logger.warning(f"duplicate run label {config.run_label}; renamed to {label}")
                config = config.model_copy(update={"label": label})
            renamed.append(config)
        configs = renamed
        directories = [target / name for name in unique_directories(labels)]

        if parallel and len(configs) > 1:
            runs = self._run_parallel(configs, directories)
        else:
            runs = [_run_one(config, d) for config, d in zip(configs, directories)]

        for run in runs:
            if run.failed:
                self.logger.error(f"sweep run {run.label} failed: {run.error}")
            else:
                self.logger.info(f"sweep run {run.label}: {run.status}")

        result = SweepResult(output_dir=target, runs=runs)
        self._write_comparison(result)
        self._write_summary(result)
        return result

    def _run_parallel(
        self, configs: List[ExperimentConfig], directories: List[Path]
    ) -> List[SweepRun]:
        workers = min(self.settings.efpe_threads, len(configs))
        self.logger.info(f"running {len(configs)} configurations on {workers} workers")
        with ProcessPoolExecutor(max_workers=workers) as executor:
            futures = [
                executor.submit(_run_one, config, directory)
                for config, directory in zip(configs, directories)
            ]
            runs = []
            for config, directory, future in zip(configs, directories, futures):
                try:
                    runs.append(future.result())
                except Exception as exc:
                    runs.append(
                        SweepRun(
                            label=config.run_label,
                            directory=directory,
                            error=f"{type(exc).__name__}: {exc}",
                        )
                    )
        return runs

    def _write_comparison(self, result: SweepResult) -> Path:
        path = result.output_dir / COMPARISON_FILE
        with open(path, "w", encoding="utf-8", newline="") as stream:
            stream.write(COMPARISON_HEADER + "\n")
            for run in result.runs:
                if run.trajectory is None:
                    continue
                for row in run.trajectory.rows:
                    stream.write(format_row((run.label,) + row.values()) + "\n")
        return path

    def _write_summary(self, result: SweepResult) -> Path:
        summary = [
            {
                "label": run.label,
                "directory": run.directory.name,
                "status": run.status,
                "error": run.error,
            }
            for run in result.runs
        ]
        path = result.output_dir / SWEEP_SUMMARY_FILE
        path.write_text(json.dumps(summary, indent=2) + "\n", encoding="utf-8")
        return path
