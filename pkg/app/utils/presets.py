"""Named configurations.

    tuned:<game>             RTCFR+ with the adaptive controller and the tuned hyperparameters
    fixed:<game>:<eps>       RTCFR+ with a fixed ε and the same T and μ
    cfrplus:<game>[:<eps>]   alternating CFR+ with quadratic averaging (ε = 0.001 by default)
    compare:<game>           sweep: CFR+(0.001), RTCFR+ at three fixed ε, RTCFR+(adp)
"""

from typing import Dict, List

from app.constants.presets import (
    CFR_PLUS_DEFAULT_EPSILON,
    COMPARISON_EPSILONS,
    PRESET_TRAVERSAL_BUDGET,
    TUNED_PRESETS,
)
from app.exceptions.config_exceptions import ConfigInvalidError


def _game_row(game: str):
    if game not in TUNED_PRESETS:
        raise ConfigInvalidError(
            f"no preset for game {game!r}; known: {', '.join(TUNED_PRESETS)}",
            ["preset"],
        )
    return TUNED_PRESETS[game]


def tuned(game: str) -> Dict[str, str]:
    row = _game_row(game)
    return {
        "game": game,
        "algorithm": "rtcfr",
        "variant": "rm+",
        "T": str(row.T),
        "mu": repr(row.mu),
        "perturbation": "adaptive",
        "epsilon": repr(row.epsilon0),
        "delta": repr(row.delta),
        "gamma": repr(row.gamma),
        "traversal_budget": str(PRESET_TRAVERSAL_BUDGET),
        "label": "RTCFR+(adp)",
    }


def fixed(game: str, epsilon: float) -> Dict[str, str]:
    row = _game_row(game)
    return {
        "game": game,
        "algorithm": "rtcfr",
        "variant": "rm+",
        "T": str(row.T),
        "mu": repr(row.mu),
        "perturbation": "fixed",
        "epsilon": repr(epsilon),
        "traversal_budget": str(PRESET_TRAVERSAL_BUDGET),
        "label": f"RTCFR+({epsilon:g})",
    }


def cfr_plus(game: str, epsilon: float = CFR_PLUS_DEFAULT_EPSILON) -> Dict[str, str]:
    _game_row(game)
    return {
        "game": game,
        "algorithm": "cfr+",
        "variant": "rm+",
        "perturbation": "fixed",
        "epsilon": repr(epsilon),
        "traversal_budget": str(PRESET_TRAVERSAL_BUDGET),
        "label": f"CFR+({epsilon:g})",
    }


def _epsilon(text: str) -> float:
    try:
        return float(text)
    except ValueError:
        raise ConfigInvalidError(f"preset epsilon {text!r} is not a number", ["preset"])


def resolve_preset(name: str) -> Dict[str, str]:
    kind, _, rest = name.partition(":")
    parts = rest.split(":") if rest else []
    if kind == "tuned" and len(parts) == 1:
        return tuned(parts[0])
    if kind == "fixed" and len(parts) == 2:
        return fixed(parts[0], _epsilon(parts[1]))
    if kind == "cfrplus" and len(parts) in (1, 2):
        if len(parts) == 2:
            return cfr_plus(parts[0], _epsilon(parts[1]))
        return cfr_plus(parts[0])
    raise ConfigInvalidError(f"unknown preset {name!r}", ["preset"])


def resolve_sweep_preset(name: str) -> List[Dict[str, str]]:
    kind, _, game = name.partition(":")
    if kind != "compare" or not game:
        raise ConfigInvalidError(f"unknown sweep preset {name!r}", ["preset"])
    runs = [cfr_plus(game)]
    runs.extend(fixed(game, eps) for eps in COMPARISON_EPSILONS)
    runs.append(tuned(game))
    return runs
