"""Flat ``key=value`` configuration files.

Blank lines and ``#`` comments are ignored. Sweep files use the same syntax;
keys before the first ``[run]`` header are defaults shared by every run and each
``[run]`` section describes one configuration.
"""

from pathlib import Path
from typing import Dict, Iterable, List, Tuple, Union

from pydantic import ValidationError

from app.exceptions.config_exceptions import ConfigInvalidError
from app.schemas.experiment import ExperimentConfig

RUN_HEADER = "[run]"


def _split_line(line: str, line_number: int) -> Tuple[str, str]:
    key, sep, value = line.partition("=")
    key = key.strip()
    if not sep or not key:
        raise ConfigInvalidError(f"line {line_number}: expected key=value, got {line!r}")
    return key, value.strip()


def _content_lines(text: str):
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield line_number, line


def parse_key_values(text: str) -> Dict[str, str]:
    values: Dict[str, str] = {}
    for line_number, line in _content_lines(text):
        if line == RUN_HEADER:
            raise ConfigInvalidError(f"line {line_number}: [run] sections belong in sweep files")
        key, value = _split_line(line, line_number)
        values[key] = value
    return values


def parse_overrides(overrides: Iterable[str]) -> Dict[str, str]:
    """Parse repeated ``--set key=value`` arguments."""
    values: Dict[str, str] = {}
    for position, item in enumerate(overrides, start=1):
        key, value = _split_line(item, position)
        values[key] = value
    return values


def parse_sweep(text: str) -> Tuple[Dict[str, str], List[Dict[str, str]]]:
    defaults: Dict[str, str] = {}
    runs: List[Dict[str, str]] = []
    for line_number, line in _content_lines(text):
        if line == RUN_HEADER:
            runs.append({})
            continue
        key, value = _split_line(line, line_number)
        (runs[-1] if runs else defaults)[key] = value
    if not runs:
        raise ConfigInvalidError("sweep file has no [run] sections")
    return defaults, runs


def read_text(path: Union[str, Path]) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigInvalidError(f"cannot read {path}: {exc.strerror}") from exc


def build_experiment(*layers: Dict[str, str]) -> ExperimentConfig:
    """Merge layers left to right (later layers win) and validate."""
    merged: Dict[str, str] = {}
    for layer in layers:
        merged.update(layer)
    try:
        return ExperimentConfig.model_validate(merged)
    except ValidationError as exc:
        fields = []
        messages = []
        for error in exc.errors():
            field = ".".join(str(part) for part in error["loc"]) or "config"
            fields.append(field)
            messages.append(f"{field}: {error['msg']}")
        raise ConfigInvalidError("; ".join(messages), fields) from exc
