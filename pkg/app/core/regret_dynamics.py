"""Local regret minimizers in perturbed coordinate space.

One step of reward-transformed regret matching for a player with current
perturbed strategy x = B x̂ is

    ṽ  = v + μ (x_ref − x)
    v̂  = Bᵀ ṽ
    r  = v̂ − ⟨v̂, x̂⟩ 1
    R  ← update(R, r)
    x̂  ← [R]⁺ / ‖[R]⁺‖₁   (uniform when R has no positive entry)
    x  ← B x̂

The same recursion, written as gradient ascent on a parameter vector θ with
step η, is implemented separately by ``gda_closed_form_step``. With θ⁰ = R⁰ and
η = 1 both produce the same strategies for RM and RM+; the read-out
[θ]⁺/‖[θ]⁺‖₁ is scale free, so any common η gives the same sequence when θ⁰
is scaled by η as well.
"""

from dataclasses import dataclass, replace
from enum import Enum
from typing import Sequence, Tuple

import numpy as np

from app.core.efg.sequence_form import EMPTY_SEQUENCE, PlayerSequences
from app.core.perturbation import PerturbedBasis, pull_back_value, to_perturbed
from app.exceptions.solver_exceptions import DegenerateThetaError

DEFAULT_DRM_ALPHA = 1.5
DEFAULT_DRM_BETA = 0.0


class RegretVariant(str, Enum):
    RM = "rm"
    RM_PLUS = "rm+"
    DRM = "drm"


@dataclass(frozen=True)
class RegretRule:
    variant: RegretVariant = RegretVariant.RM_PLUS
    alpha: float = DEFAULT_DRM_ALPHA
    beta: float = DEFAULT_DRM_BETA

    def discounts(self, t: int) -> Tuple[float, float]:
        """(positive, negative) discount factors applied at iteration t ≥ 1."""
        pos = t**self.alpha / (t**self.alpha + 1.0)
        neg = t**self.beta / (t**self.beta + 1.0)
        return pos, neg

    def update(self, R: np.ndarray, r: np.ndarray, t: int) -> np.ndarray:
        """Cumulative regret after adding r at iteration t (1-based)."""
        total = R + r
        if self.variant is RegretVariant.RM:
            return total
        if self.variant is RegretVariant.RM_PLUS:
            return np.maximum(total, 0.0)
        pos, neg = self.discounts(t)
        return pos * np.maximum(total, 0.0) + neg * np.minimum(total, 0.0)


@dataclass(frozen=True)
class RegretState:
    R: np.ndarray
    rule: RegretRule = RegretRule()
    t: int = 0

    @classmethod
    def zeros(cls, n: int, rule: RegretRule = RegretRule()) -> "RegretState":
        return cls(R=np.zeros(n, dtype=float), rule=rule)

    @property
    def variant(self) -> RegretVariant:
        return self.rule.variant


@dataclass(frozen=True)
class RTConfig:
    mu: float
    x_ref: np.ndarray


def rt_transform(
    v: np.ndarray, mu: float, x_ref: np.ndarray, x_cur: np.ndarray
) -> np.ndarray:
    return v + mu * (x_ref - x_cur)


def instantaneous_regret(v_hat: np.ndarray, x_hat: np.ndarray) -> np.ndarray:
    return v_hat - float(v_hat @ x_hat)


def update_cumulative(state: RegretState, r: np.ndarray) -> RegretState:
    t = state.t + 1
    return replace(state, R=state.rule.update(state.R, r, t), t=t)


def regret_matching(R: np.ndarray) -> np.ndarray:
    positive = np.maximum(R, 0.0)
    total = positive.sum()
    if total > 0.0:
        return positive / total
    return np.full(R.shape[0], 1.0 / R.shape[0])


def next_strategy(state: RegretState) -> np.ndarray:
    return regret_matching(state.R)


def _player_values(U: np.ndarray, player: int, x_opp: np.ndarray) -> np.ndarray:
    return U @ x_opp if player == 1 else -(U.T @ x_opp)


def rtrm_nfg_step(
    U: np.ndarray,
    states: Sequence[RegretState],
    bases: Sequence[PerturbedBasis],
    rt: Sequence[RTConfig],
    x: Sequence[np.ndarray],
) -> Tuple[Tuple[RegretState, RegretState], Tuple[np.ndarray, np.ndarray]]:
    """One simultaneous step of reward-transformed RM on the matrix game U (player-1 payoffs)."""
    new_states = []
    new_x = []
    for i, player in enumerate((1, 2)):
        x_hat = next_strategy(states[i])
        v = _player_values(U, player, x[1 - i])
        v_tilde = rt_transform(v, rt[i].mu, rt[i].x_ref, x[i])
        v_hat = pull_back_value(bases[i], v_tilde)
        r = instantaneous_regret(v_hat, x_hat)
        state = update_cumulative(states[i], r)
        new_states.append(state)
        new_x.append(to_perturbed(bases[i], next_strategy(state)))
    return (new_states[0], new_states[1]), (new_x[0], new_x[1])


def theta_readout(theta: np.ndarray, strict: bool = False) -> np.ndarray:
    """x̂ = [θ]⁺ / ‖[θ]⁺‖₁; uniform when θ has no positive mass unless `strict`."""
    positive = np.clip(theta, 0.0, None)
    norm = np.linalg.norm(positive, ord=1)
    if norm > 0.0:
        return positive / norm
    if strict:
        raise DegenerateThetaError("theta has no positive mass")
    return np.ones_like(theta) / theta.shape[0]


def gda_closed_form_step(
    theta: Sequence[np.ndarray],
    eta: float,
    U: np.ndarray,
    bases: Sequence[PerturbedBasis],
    rt: Sequence[RTConfig],
    rules: Sequence[RegretRule],
    t: int = 1,
    strict: bool = False,
) -> Tuple[np.ndarray, np.ndarray]:
    """θᵢ ← Proj(θᵢ + η ∇ᵢ) with the gradient of the transformed utility in coordinate space."""
    if eta <= 0.0:
        raise ValueError("eta must be positive")
    x_hat = [theta_readout(np.asarray(th, dtype=float), strict) for th in theta]
    B = [basis.matrix() for basis in bases]
    x = [B[i] @ x_hat[i] for i in range(2)]
    updated = []
    for i, player in enumerate((1, 2)):
        values = _player_values(U, player, x[1 - i]) + rt[i].mu * (rt[i].x_ref - x[i])
        gradient = B[i].T @ values
        step = theta[i] + eta * (gradient - float(gradient @ x_hat[i]))
        rule = rules[i]
        if rule.variant is RegretVariant.RM:
            updated.append(step)
        elif rule.variant is RegretVariant.RM_PLUS:
            updated.append(np.clip(step, 0.0, None))
        else:
            pos, neg = rule.discounts(t)
            updated.append(pos * np.clip(step, 0.0, None) + neg * np.clip(step, None, 0.0))
    return updated[0], updated[1]


def regret_matching_segments(seqs: PlayerSequences, R: np.ndarray) -> np.ndarray:
    """Regret matching at every infoset of one player over the flat sequence layout."""
    positive = np.maximum(R, 0.0)
    positive[EMPTY_SEQUENCE] = 0.0
    totals = seqs.broadcast(seqs.infoset_sums(positive), empty=1.0)
    uniform = seqs.broadcast(1.0 / seqs.infoset_size.astype(float), empty=1.0)
    has_mass = totals > 0.0
    x_hat = np.where(has_mass, positive / np.where(has_mass, totals, 1.0), uniform)
    x_hat[EMPTY_SEQUENCE] = 1.0
    return x_hat
