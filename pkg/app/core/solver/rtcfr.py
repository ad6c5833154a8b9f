"""Reward-transformation CFR iterations, RT problem boundaries and the adaptive ε controller."""

from typing import Iterator

from app.core.efg.sequence_form import EMPTY_SEQUENCE, SequenceStrategy, SolvableGame
from app.core.logging_config import get_logger
from app.core.metrics import max_info_set_regret
from app.core.regret_dynamics import RegretRule, regret_matching_segments, rt_transform
from app.core.solver.state import PlayerState, SolverState
from app.core.solver.traversal import propagate_values
from app.schemas.solver import AdaptivePerturbation, SolverConfig

logger = get_logger("efpe")


def update_player(
    game: SolvableGame,
    ps: PlayerState,
    q_opp: SequenceStrategy,
    mu: float,
    rule: RegretRule,
    t: int,
) -> None:
    """One regret update at every infoset of ``ps.player`` against the opponent plan q_opp.

    Counterfactual values are taken under the strategy in place before the
    update, and parents receive the untransformed values.
    """
    seqs = ps.sequences
    x = ps.strategy
    v = propagate_values(seqs, game.utility.values_for(ps.player, q_opp.values), x)
    v_tilde = rt_transform(v, mu, ps.reference, x)
    u = seqs.infoset_sums(v_tilde * x)
    r = ps.perturbation.pull_back(v_tilde) - seqs.broadcast(u)
    r[EMPTY_SEQUENCE] = 0.0
    ps.regrets = rule.update(ps.regrets, r, t)
    ps.strategy = ps.perturbation.to_perturbed(regret_matching_segments(seqs, ps.regrets))


def rtcfr_iteration(state: SolverState, game: SolvableGame, config: SolverConfig) -> None:
    t = state.total_iterations + 1
    p1, p2 = state.players
    rule = config.rule
    if config.uses_alternation:
        update_player(game, p1, game.sequence(p2.behavior()), config.mu, rule, t)
        update_player(game, p2, game.sequence(p1.behavior()), config.mu, rule, t)
    else:
        q1 = game.sequence(p1.behavior())
        q2 = game.sequence(p2.behavior())
        update_player(game, p1, q2, config.mu, rule, t)
        update_player(game, p2, q1, config.mu, rule, t)

    state.iteration += 1
    state.total_iterations = t
    state.traversals += config.traversals_per_iteration
    if state.averager is not None:
        state.averager.add(
            t, game.sequence(p1.behavior()), game.sequence(p2.behavior())
        )


def reset_reference(state: SolverState) -> None:
    """Start a new RT problem from the current strategies and regrets."""
    for ps in state.players:
        ps.reference = ps.strategy.copy()
    state.reference_resets += 1


def rt_bspp_schedule(state: SolverState, config: SolverConfig) -> Iterator[int]:
    """Yield RT problem indices 1..N (unbounded without N), resetting references at every boundary."""
    n = 1
    while config.problems is None or n <= config.problems:
        if n > 1:
            reset_reference(state)
            logger.debug(f"RT problem {n} starts at {state.traversals} traversals")
        state.problem = n
        state.iteration = 0
        yield n
        n += 1


def adaptive_perturbation_step(
    state: SolverState,
    game: SolvableGame,
    config: SolverConfig,
    epsilon_floor: float,
    reach_floor: float,
) -> float:
    """Shrink ε and δ by γ when the incoming profile is a δ-ISNE of the current perturbed game; returns r^max.

    Regret is measured against the perturbed vertices of every infoset, so the
    ε(I) floor on each action does not count against the profile. The check
    costs one traversal. ε stops shrinking at ``epsilon_floor`` while
    δ keeps decaying.
    """
    perturbation = config.perturbation
    if not isinstance(perturbation, AdaptivePerturbation):
        raise ValueError("adaptive_perturbation_step needs an adaptive perturbation")
    perturbations = (state.players[0].perturbation, state.players[1].perturbation)
    r_max = max_info_set_regret(
        game, state.profile(), reach_floor, perturbations
    ).r_max
    state.traversals += 1
    if r_max < state.delta:
        epsilon = state.epsilon * perturbation.gamma
        if epsilon >= epsilon_floor:
            state.epsilon = epsilon
            for ps in state.players:
                ps.perturbation = ps.perturbation.rebuild(epsilon)
        state.delta *= perturbation.gamma
        state.decays += 1
        logger.debug(
            f"r_max={r_max:.3e} below delta; epsilon={state.epsilon:.3e} "
            f"delta={state.delta:.3e}"
        )
    return r_max
