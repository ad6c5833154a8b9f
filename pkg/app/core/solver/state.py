from dataclasses import dataclass, field
from typing import Optional, Tuple

import numpy as np

from app.core.efg.sequence_form import (
    BehaviorStrategy,
    PlayerSequences,
    SolvableGame,
    StrategyProfile,
    uniform_behavior,
)
from app.core.perturbation import InfosetPerturbation
from app.core.solver.averaging import ProfileAverager
from app.schemas.solver import AdaptivePerturbation, SolverConfig


@dataclass(eq=False)
class PlayerState:
    """Flat per-sequence arrays for one player; entry 0 is the empty sequence."""

    player: int
    perturbation: InfosetPerturbation
    regrets: np.ndarray
    strategy: np.ndarray
    reference: np.ndarray

    @property
    def sequences(self) -> PlayerSequences:
        return self.perturbation.sequences

    def behavior(self) -> BehaviorStrategy:
        return BehaviorStrategy(player=self.player, values=self.strategy)


@dataclass(eq=False)
class SolverState:
    players: Tuple[PlayerState, PlayerState]
    epsilon: float
    """Current target ε (per-infoset values may be capped below it)."""
    delta: float
    """Current ISNE threshold; NaN under a fixed perturbation."""
    problem: int = 0
    iteration: int = 0
    """Inner iteration within the current RT problem."""
    total_iterations: int = 0
    traversals: int = 0
    reference_resets: int = 0
    decays: int = 0
    averager: Optional[ProfileAverager] = field(default=None)

    def player(self, player: int) -> PlayerState:
        return self.players[player - 1]

    def profile(self) -> StrategyProfile:
        return StrategyProfile(self.players[0].behavior(), self.players[1].behavior())

    def evaluated_profile(self) -> StrategyProfile:
        """The quadratic average when one is kept, otherwise the last iterate."""
        if self.averager is not None and self.total_iterations > 0:
            return self.averager.profile()
        return self.profile()


def initial_state(game: SolvableGame, config: SolverConfig) -> SolverState:
    players = []
    for player in (1, 2):
        seqs = game.index.player(player)
        uniform = uniform_behavior(game.index, player).values
        players.append(
            PlayerState(
                player=player,
                perturbation=InfosetPerturbation.build(seqs, config.initial_epsilon),
                regrets=np.zeros(seqs.n_sequences, dtype=float),
                strategy=uniform.copy(),
                reference=uniform.copy(),
            )
        )
    delta = (
        config.perturbation.delta
        if isinstance(config.perturbation, AdaptivePerturbation)
        else float("nan")
    )
    return SolverState(
        players=(players[0], players[1]),
        epsilon=config.initial_epsilon,
        delta=delta,
        averager=ProfileAverager(game.index) if config.averages else None,
    )


def check_polytope(state: SolverState) -> Tuple[float, float]:
    """Minimum slack x(I)[a] − ε(I) per player; negative values mean a polytope violation."""
    return tuple(ps.perturbation.min_slack(ps.strategy) for ps in state.players)
