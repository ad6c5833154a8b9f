from typing import Dict, NamedTuple


class AdaptiveHyperparameters(NamedTuple):
    T: int
    mu: float
    epsilon0: float
    delta: float
    gamma: float


# Tuned RTCFR+ (adp) settings per benchmark game; Liar's Dice runs without the RT term
TUNED_PRESETS: Dict[str, AdaptiveHyperparameters] = {
    "kuhn3": AdaptiveHyperparameters(5, 0.01, 0.1, 1.0, 0.5),
    "leduc3": AdaptiveHyperparameters(200, 0.0001, 0.01, 0.02, 0.1),
    "leduc5": AdaptiveHyperparameters(200, 0.0001, 0.1, 0.5, 0.5),
    "goofspiel3": AdaptiveHyperparameters(20, 0.001, 0.1, 0.5, 0.95),
    "goofspiel4": AdaptiveHyperparameters(30, 0.001, 0.1, 0.5, 0.9),
    "liarsdice5": AdaptiveHyperparameters(1, 0.0, 0.1, 0.5, 0.5),
    "liarsdice6": AdaptiveHyperparameters(1, 0.0, 0.1, 0.5, 0.5),
}

PRESET_TRAVERSAL_BUDGET = 100_000
CFR_PLUS_DEFAULT_EPSILON = 0.001
COMPARISON_EPSILONS = (0.1, 0.01, 0.001)
