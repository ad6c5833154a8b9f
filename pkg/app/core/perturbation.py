"""ε-perturbed simplex bases.

The basis of an n-action simplex has columns ε·1 + τ·e_j with τ = 1 − nε, so

    B x̂  = ε·Σx̂ + τ·x̂ = ε + τ·x̂      (x̂ on the simplex)
    Bᵀ v = ε·Σv + τ·v

and neither product needs the matrix itself. ``InfosetPerturbation`` applies the
same closed forms to every infoset of one player at once, over the flat
sequence-space layout used by the solver.
"""

from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from app.core.efg.sequence_form import EMPTY_SEQUENCE, PlayerSequences, SequenceIndex
from app.exceptions.perturbation_exceptions import EpsilonTooLargeError


@dataclass(frozen=True)
class PerturbedBasis:
    n: int
    epsilon: float

    @property
    def tau(self) -> float:
        return 1.0 - self.n * self.epsilon

    def matrix(self) -> np.ndarray:
        """Dense n×n basis, for diagnostics and tests."""
        return np.full((self.n, self.n), self.epsilon) + self.tau * np.eye(self.n)


def make_basis(n: int, epsilon: float) -> PerturbedBasis:
    if n < 1:
        raise ValueError("a basis needs at least one action")
    if not 0.0 <= epsilon < 1.0 / n:
        raise EpsilonTooLargeError(epsilon, n)
    return PerturbedBasis(n=n, epsilon=float(epsilon))


def to_perturbed(basis: PerturbedBasis, x_hat: np.ndarray) -> np.ndarray:
    x_hat = np.asarray(x_hat, dtype=float)
    return basis.epsilon * x_hat.sum() + basis.tau * x_hat


def pull_back_value(basis: PerturbedBasis, v: np.ndarray) -> np.ndarray:
    v = np.asarray(v, dtype=float)
    return basis.epsilon * v.sum() + basis.tau * v


def epsilon_cap(n_actions: np.ndarray) -> np.ndarray:
    """Largest ε an infoset accepts: half of the 1/|A(I)| boundary."""
    return 0.5 / np.asarray(n_actions, dtype=float)


@dataclass(frozen=True, eq=False)
class InfosetPerturbation:
    """Per-infoset bases of one player, each with ε(I) = min(target, 1/(2|A(I)|))."""

    sequences: PlayerSequences
    target: float
    epsilon: np.ndarray
    tau: np.ndarray

    @classmethod
    def build(cls, sequences: PlayerSequences, target: float) -> "InfosetPerturbation":
        if target < 0.0 or not np.isfinite(target):
            raise EpsilonTooLargeError(target, 1)
        sizes = sequences.infoset_size
        epsilon = np.minimum(float(target), epsilon_cap(sizes))
        return cls(
            sequences=sequences,
            target=float(target),
            epsilon=epsilon,
            tau=1.0 - sizes * epsilon,
        )

    @property
    def player(self) -> int:
        return self.sequences.player

    def rebuild(self, target: float) -> "InfosetPerturbation":
        return InfosetPerturbation.build(self.sequences, target)

    def basis(self, local_infoset: int) -> PerturbedBasis:
        return PerturbedBasis(
            n=int(self.sequences.infoset_size[local_infoset]),
            epsilon=float(self.epsilon[local_infoset]),
        )

    @property
    def sequence_epsilon(self) -> np.ndarray:
        return self.sequences.broadcast(self.epsilon)

    def to_perturbed(self, x_hat: np.ndarray) -> np.ndarray:
        """Map coordinate strategies (one simplex point per infoset) into the perturbed polytope."""
        seqs = self.sequences
        sums = seqs.infoset_sums(x_hat)
        out = seqs.broadcast(self.epsilon * sums) + seqs.broadcast(self.tau) * x_hat
        out[EMPTY_SEQUENCE] = 1.0
        return out

    def pull_back(self, v: np.ndarray) -> np.ndarray:
        """Bᵀv at every infoset; the empty-sequence entry is passed through."""
        seqs = self.sequences
        sums = seqs.infoset_sums(v)
        out = seqs.broadcast(self.epsilon * sums) + seqs.broadcast(self.tau) * v
        out[EMPTY_SEQUENCE] = v[EMPTY_SEQUENCE]
        return out

    def min_slack(self, x: np.ndarray) -> float:
        """min over sequences of x[Ia] − ε(I); negative means x left the polytope."""
        if self.sequences.n_infosets == 0:
            return float("inf")
        return float(np.min(x[1:] - self.sequence_epsilon[1:]))


@dataclass(frozen=True, eq=False)
class SequenceLowerBounds:
    values: Tuple[np.ndarray, np.ndarray]

    def for_player(self, player: int) -> np.ndarray:
        return self.values[player - 1]


def _player_bounds(seqs: PlayerSequences, per_infoset: np.ndarray) -> np.ndarray:
    bounds = np.empty(seqs.n_sequences, dtype=float)
    bounds[EMPTY_SEQUENCE] = 1.0
    factor = seqs.broadcast(per_infoset)
    for level in reversed(seqs.levels):
        bounds[level.sequences] = (
            factor[level.sequences] * bounds[level.sequence_parents]
        )
    return bounds


def sequence_lower_bounds(
    idx: SequenceIndex,
    epsilon: float,
    perturbations: Optional[Tuple[InfosetPerturbation, InfosetPerturbation]] = None,
) -> SequenceLowerBounds:
    """l[Ia] = Π ε(I') over the owner's infosets on the path, i.e. ε^depth(Ia) without capping."""
    values = []
    for player in (1, 2):
        seqs = idx.player(player)
        if perturbations is None:
            per_infoset = np.full(seqs.n_infosets, float(epsilon))
        else:
            per_infoset = perturbations[player - 1].epsilon
        values.append(_player_bounds(seqs, per_infoset))
    return SequenceLowerBounds(values=(values[0], values[1]))
