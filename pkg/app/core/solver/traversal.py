"""Bottom-up passes over a player's sequence space.

Every pass starts from the immediate leaf payoffs ⟨U_i, q_{-i}⟩ (chance is
already folded into U) and folds infoset values into their parent sequences,
deepest infosets first. Sequence ids within a level are contiguous per infoset,
so the per-infoset reductions are ``reduceat`` calls over the level's offsets.
"""

from typing import Tuple

import numpy as np

from app.core.efg.sequence_form import (
    BehaviorStrategy,
    PlayerSequences,
    SequenceStrategy,
    SolvableGame,
)


def counterfactual_values(
    game: SolvableGame,
    q_opp: SequenceStrategy,
    x_self: BehaviorStrategy,
    player: int,
) -> np.ndarray:
    """v[Ia] = ⟨U_i, q_-i⟩[Ia] + Σ_{I': pI' = Ia} ⟨x(I'), v(I')⟩.

    ``v[EMPTY]`` ends up holding the player's expected utility.
    """
    return propagate_values(
        game.index.player(player),
        game.utility.values_for(player, q_opp.values),
        x_self.values,
    )


def propagate_values(
    seqs: PlayerSequences, v: np.ndarray, x: np.ndarray
) -> np.ndarray:
    v = v.copy()
    for level in seqs.levels:
        weighted = v[level.sequences] * x[level.sequences]
        np.add.at(v, level.parents, np.add.reduceat(weighted, level.offsets))
    return v


def best_response_values(
    game: SolvableGame, q_opp: SequenceStrategy, player: int
) -> Tuple[np.ndarray, np.ndarray]:
    """Sequence values under a pure best response, and its choice at every local infoset.

    Ties go to the first action in infoset order.
    """
    seqs = game.index.player(player)
    v = game.utility.values_for(player, q_opp.values).copy()
    choices = np.zeros(seqs.n_infosets, dtype=np.int64)
    for level in seqs.levels:
        block = v[level.sequences]
        best = np.maximum.reduceat(block, level.offsets)
        choices[level.infosets] = _first_argmax(block, best, level.offsets)
        np.add.at(v, level.parents, best)
    return v, choices


def perturbed_best_response_values(
    game: SolvableGame,
    q_opp: SequenceStrategy,
    player: int,
    epsilon: np.ndarray,
) -> np.ndarray:
    """Best response restricted to x(I)[a] ≥ ε(I): ε(I) on every action, the rest on the best one."""
    seqs = game.index.player(player)
    tau = 1.0 - seqs.infoset_size * epsilon
    v = game.utility.values_for(player, q_opp.values).copy()
    for level in seqs.levels:
        block = v[level.sequences]
        total = np.add.reduceat(block, level.offsets)
        best = np.maximum.reduceat(block, level.offsets)
        local = level.infosets
        np.add.at(v, level.parents, epsilon[local] * total + tau[local] * best)
    return v


def _first_argmax(block: np.ndarray, best: np.ndarray, offsets: np.ndarray) -> np.ndarray:
    sizes = np.diff(np.append(offsets, block.shape[0]))
    hits = np.flatnonzero(block == np.repeat(best, sizes))
    segment = np.searchsorted(offsets, hits, side="right") - 1
    _, first = np.unique(segment, return_index=True)
    return hits[first] - offsets


def infoset_reach_mass(
    game: SolvableGame, q_opp: SequenceStrategy, player: int
) -> np.ndarray:
    """Σ_{h∈I} q_0(h) q_-i(h) for every local infoset of `player`."""
    seqs = game.index.player(player)
    weights = seqs.node_chance_reach * q_opp.values[seqs.node_opponent_sequence]
    return np.bincount(seqs.node_infoset, weights=weights, minlength=seqs.n_infosets)
