import numpy as np
import pytest

from app.core.perturbation import make_basis, to_perturbed
from app.core.regret_dynamics import (
    RegretRule,
    RegretState,
    RegretVariant,
    RTConfig,
    gda_closed_form_step,
    instantaneous_regret,
    next_strategy,
    regret_matching,
    regret_matching_segments,
    rt_transform,
    rtrm_nfg_step,
    theta_readout,
    update_cumulative,
)
from app.exceptions.solver_exceptions import DegenerateThetaError

PENNIES = np.array([[1.0, -1.0], [-1.0, 1.0]])


def test_regret_matching_normalizes_positive_part():
    np.testing.assert_allclose(regret_matching(np.array([1.0, 3.0, -1.0])), [0.25, 0.75, 0.0])


def test_regret_matching_falls_back_to_uniform():
    np.testing.assert_allclose(regret_matching(np.array([-1.0, 0.0])), [0.5, 0.5])


@pytest.mark.parametrize(
    "variant,expected",
    [
        (RegretVariant.RM, [1.0, -3.0]),
        (RegretVariant.RM_PLUS, [1.0, 0.0]),
        (RegretVariant.DRM, [0.5, -1.5]),
    ],
)
def test_cumulative_update_rules(variant, expected):
    rule = RegretRule(variant=variant)
    R = np.array([-1.0, -1.0])
    r = np.array([2.0, -2.0])

    np.testing.assert_allclose(rule.update(R, r, t=1), expected)


def test_discounted_rule_weights():
    rule = RegretRule(variant=RegretVariant.DRM, alpha=1.5, beta=0.0)
    pos, neg = rule.discounts(4)

    assert pos == pytest.approx(8.0 / 9.0)
    assert neg == pytest.approx(0.5)


def test_update_cumulative_counts_iterations():
    state = RegretState.zeros(3)
    state = update_cumulative(state, np.array([1.0, -1.0, 0.0]))
    state = update_cumulative(state, np.array([1.0, 2.0, 0.0]))

    assert state.t == 2
    assert state.variant is RegretVariant.RM_PLUS
    np.testing.assert_allclose(state.R, [2.0, 2.0, 0.0])
    np.testing.assert_allclose(next_strategy(state), [0.5, 0.5, 0.0])


def test_reward_transformation_pulls_toward_reference():
    v = np.array([1.0, 0.0])
    x_ref = np.array([0.5, 0.5])
    x = np.array([1.0, 0.0])

    np.testing.assert_allclose(rt_transform(v, 0.2, x_ref, x), [0.9, 0.1])
    np.testing.assert_allclose(rt_transform(v, 0.0, x_ref, x), v)


def test_instantaneous_regret_is_orthogonal_to_the_strategy(rng):
    x_hat = rng.dirichlet(np.ones(4))
    r = instantaneous_regret(rng.normal(size=4), x_hat)

    assert float(r @ x_hat) == pytest.approx(0.0, abs=1e-12)


def test_theta_readout():
    np.testing.assert_allclose(theta_readout(np.array([2.0, -1.0, 2.0])), [0.5, 0.0, 0.5])
    np.testing.assert_allclose(theta_readout(np.zeros(4)), 0.25)
    with pytest.raises(DegenerateThetaError):
        theta_readout(np.array([-1.0, 0.0]), strict=True)


def test_gda_rejects_non_positive_step():
    bases = (make_basis(2, 0.0), make_basis(2, 0.0))
    rt = (RTConfig(0.0, np.full(2, 0.5)), RTConfig(0.0, np.full(2, 0.5)))
    rules = (RegretRule(), RegretRule())

    with pytest.raises(ValueError):
        gda_closed_form_step((np.zeros(2), np.zeros(2)), 0.0, PENNIES, bases, rt, rules)


@pytest.mark.parametrize("variant", list(RegretVariant))
@pytest.mark.parametrize("game", range(20))
def test_regret_matching_equals_gradient_ascent(variant, game, rng):
    """Test 100 matched steps on random square games, alternating 3×3 and 4×4."""
    rng = np.random.default_rng([int(rng.integers(2**31)), game])
    n = 3 if game % 2 == 0 else 4
    U = rng.normal(size=(n, n))
    bases = (make_basis(n, 0.05), make_basis(n, 0.02))
    rt = tuple(
        RTConfig(0.1, to_perturbed(basis, rng.dirichlet(np.ones(n)))) for basis in bases
    )
    rule = RegretRule(variant=variant)
    states = (RegretState.zeros(n, rule), RegretState.zeros(n, rule))
    theta = (np.zeros(n), np.zeros(n))
    x = tuple(to_perturbed(b, next_strategy(s)) for b, s in zip(bases, states))

    for t in range(1, 101):
        states, x = rtrm_nfg_step(U, states, bases, rt, x)
        theta = gda_closed_form_step(theta, 1.0, U, bases, rt, (rule, rule), t=t)
        for i in range(2):
            np.testing.assert_allclose(states[i].R, theta[i], rtol=1e-10, atol=1e-10)
            np.testing.assert_allclose(
                x[i], to_perturbed(bases[i], theta_readout(theta[i])), rtol=0, atol=1e-10
            )


def test_reward_transformed_rm_plus_settles_on_matching_pennies():
    bases = (make_basis(2, 0.0), make_basis(2, 0.0))
    uniform = np.full(2, 0.5)
    rt = (RTConfig(0.5, uniform), RTConfig(0.5, uniform))
    states = (
        RegretState(R=np.array([1.0, 0.0])),
        RegretState(R=np.array([0.0, 1.0])),
    )
    x = tuple(to_perturbed(b, next_strategy(s)) for b, s in zip(bases, states))

    for _ in range(5000):
        states, x = rtrm_nfg_step(PENNIES, states, bases, rt, x)

    np.testing.assert_allclose(x[0], uniform, atol=0.05)
    np.testing.assert_allclose(x[1], uniform, atol=0.05)


def test_segmented_regret_matching(kuhn3):
    seqs = kuhn3.index.player(1)
    R = np.zeros(seqs.n_sequences)
    first, second = seqs.infosets[0], seqs.infosets[1]
    R[first.start] = 3.0
    R[first.start + 1] = 1.0
    R[second.start] = -2.0

    x_hat = regret_matching_segments(seqs, R)

    assert x_hat[0] == 1.0
    np.testing.assert_allclose(seqs.block(x_hat, first), [0.75, 0.25])
    np.testing.assert_allclose(seqs.block(x_hat, second), [0.5, 0.5])
    np.testing.assert_allclose(seqs.infoset_sums(x_hat), 1.0)
