from typing import Optional, Sequence

import numpy as np

from app.core.efg.sequence_form import (
    SequenceIndex,
    SequenceStrategy,
    StrategyProfile,
    sequence_to_behavior,
)


def quadratic_average(history: Sequence[SequenceStrategy]) -> SequenceStrategy:
    """Σ t² qᵗ / Σ t² over a stored history (t starts at 1)."""
    if not history:
        raise ValueError("quadratic_average needs at least one strategy")
    averager = QuadraticAverager()
    for t, q in enumerate(history, start=1):
        averager.add(t, q.values)
    return SequenceStrategy(player=history[0].player, values=averager.mean)


class QuadraticAverager:
    """Running t²-weighted mean of one sequence-form vector."""

    def __init__(self) -> None:
        self._total: Optional[np.ndarray] = None
        self._weight = 0.0

    def add(self, t: int, q: np.ndarray) -> None:
        weight = float(t) * float(t)
        if self._total is None:
            self._total = weight * q
        else:
            self._total += weight * q
        self._weight += weight

    @property
    def mean(self) -> np.ndarray:
        if self._total is None:
            raise ValueError("no strategy has been averaged yet")
        return self._total / self._weight


class ProfileAverager:
    """Quadratic averages of both players' realization plans."""

    def __init__(self, index: SequenceIndex) -> None:
        self.index = index
        self.players = (QuadraticAverager(), QuadraticAverager())

    def add(self, t: int, q1: SequenceStrategy, q2: SequenceStrategy) -> None:
        self.players[0].add(t, q1.values)
        self.players[1].add(t, q2.values)

    def sequence(self, player: int) -> SequenceStrategy:
        return SequenceStrategy(player=player, values=self.players[player - 1].mean)

    def profile(self) -> StrategyProfile:
        return StrategyProfile(
            sequence_to_behavior(self.sequence(1), self.index),
            sequence_to_behavior(self.sequence(2), self.index),
        )
