"""Exact evaluation of strategy profiles.

Best responses always range over the unperturbed polytope, also when the
profile comes from a perturbed solver. Information-set regret divides the
counterfactual regret at I by the opponent-and-chance mass reaching I; that
mass is floored (``Settings.reach_floor``) so unreached infosets of
unperturbed profiles stay finite.

Given the players' ``InfosetPerturbation``s, information-set regret is measured
inside the perturbed game instead: an action is worth its perturbed vertex,
(Bᵀv′)[a], so the ε(I) mass forced onto every action carries no regret.
"""

from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from app.config import get_settings
from app.core.efg.sequence_form import (
    BehaviorStrategy,
    InfoSet,
    SequenceStrategy,
    SolvableGame,
    StrategyProfile,
    pure_behavior,
)
from app.core.perturbation import InfosetPerturbation
from app.core.solver.traversal import (
    best_response_values,
    counterfactual_values,
    infoset_reach_mass,
    perturbed_best_response_values,
)


@dataclass(frozen=True, eq=False)
class BestResponseResult:
    value: float
    """Responder's expected utility."""
    strategy: BehaviorStrategy


@dataclass(frozen=True, eq=False)
class ISRegretReport:
    per_infoset: Tuple[np.ndarray, np.ndarray]
    """Clamped maximum regret of every local infoset, per player."""
    per_player: Tuple[float, float]
    r_max: float

    def worst_infoset(self, player: int) -> int:
        return int(np.argmax(self.per_infoset[player - 1]))


def best_response(
    game: SolvableGame, q_opp: SequenceStrategy, responder: int
) -> BestResponseResult:
    values, choices = best_response_values(game, q_opp, responder)
    return BestResponseResult(
        value=float(values[0]),
        strategy=pure_behavior(game.index, responder, choices),
    )


def exploitability(
    game: SolvableGame, q1: SequenceStrategy, q2: SequenceStrategy
) -> float:
    """max_q1' q1'ᵀUq2 − min_q2' q1ᵀUq2'."""
    return best_response(game, q2, 1).value + best_response(game, q1, 2).value


def profile_exploitability(game: SolvableGame, profile: StrategyProfile) -> float:
    return exploitability(
        game, game.sequence(profile.player1), game.sequence(profile.player2)
    )


def _reach_floor(floor: Optional[float]) -> float:
    return get_settings().reach_floor if floor is None else floor


def full_reach_action_values(
    game: SolvableGame,
    profile: StrategyProfile,
    player: int,
    floor: Optional[float] = None,
) -> np.ndarray:
    """v′ for every sequence of `player`: counterfactual values over the floored reach mass."""
    seqs = game.index.player(player)
    opponent = 2 if player == 1 else 1
    q_opp = game.sequence(profile.behavior(opponent))
    v = counterfactual_values(game, q_opp, profile.behavior(player), player)
    mass = np.maximum(infoset_reach_mass(game, q_opp, player), _reach_floor(floor))
    return v / seqs.broadcast(mass, empty=1.0)


def full_reach_values(
    game: SolvableGame,
    profile: StrategyProfile,
    infoset: InfoSet,
    floor: Optional[float] = None,
) -> np.ndarray:
    values = full_reach_action_values(game, profile, infoset.player, floor)
    return values[infoset.start : infoset.start + infoset.size].copy()


def info_set_regret(v_prime: np.ndarray, x: np.ndarray) -> np.ndarray:
    return v_prime - float(v_prime @ x)


def player_info_set_regrets(
    game: SolvableGame,
    profile: StrategyProfile,
    player: int,
    floor: Optional[float] = None,
    perturbation: Optional[InfosetPerturbation] = None,
) -> np.ndarray:
    """r′ for every sequence of `player` (entry 0 unused)."""
    seqs = game.index.player(player)
    x = profile.behavior(player).values
    v_prime = full_reach_action_values(game, profile, player, floor)
    expected = seqs.infoset_sums(v_prime * x)
    vertices = v_prime if perturbation is None else perturbation.pull_back(v_prime)
    regrets = vertices - seqs.broadcast(expected)
    regrets[0] = 0.0
    return regrets


def max_info_set_regret(
    game: SolvableGame,
    profile: StrategyProfile,
    floor: Optional[float] = None,
    perturbations: Optional[Tuple[InfosetPerturbation, InfosetPerturbation]] = None,
) -> ISRegretReport:
    per_infoset = []
    for player in (1, 2):
        seqs = game.index.player(player)
        perturbation = None if perturbations is None else perturbations[player - 1]
        regrets = player_info_set_regrets(game, profile, player, floor, perturbation)
        per_infoset.append(np.maximum(seqs.infoset_maxima(regrets), 0.0))
    per_player = tuple(float(p.max()) if p.size else 0.0 for p in per_infoset)
    return ISRegretReport(
        per_infoset=(per_infoset[0], per_infoset[1]),
        per_player=per_player,
        r_max=max(per_player),
    )


def perturbed_best_response_value(
    game: SolvableGame, q_opp: SequenceStrategy, responder: int, epsilon: np.ndarray
) -> float:
    """Best-response value inside the perturbed polytope with per-infoset ε."""
    values = perturbed_best_response_values(game, q_opp, responder, epsilon)
    return float(values[0])
