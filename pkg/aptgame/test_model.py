"""
Tests for parameters, resource dynamics and cost functionals.

Run with: python -m pytest aptgame/test_model.py -v
"""

import logging
import math

import numpy as np
import pytest

from aptgame.errors import DomainError, ValidationError
from aptgame.model import (
    GameParams,
    Scenario,
    StrategyProfile,
    average_costs,
    cost_surface,
    finite_horizon_costs,
    insider_gain,
    integrate_resource_state,
    resource_state,
    resource_states,
    steady_state,
    trajectory,
    validate_params,
    validate_profile,
)

SYMMETRIC = (0.8, 4.0, 0.8, 4.0, 0.1, 0.1)


def _random_params(rng):
    p_A, p_D, p_I = rng.uniform(0.05, 0.95, size=3)
    q_A = rng.uniform(0.5, 5.0)
    q_D = rng.uniform(1.0, 5.0)
    q_I = rng.uniform(0.0, 1.0)
    return validate_params(p_A, q_A, p_D, q_D, p_I, q_I)


def _random_profile(rng):
    alpha, beta = rng.uniform(0.1, 1.0, size=2)
    return StrategyProfile(float(alpha), float(beta), float(rng.uniform(0.0, 1.0)))


# ---------------------------------------------------------------------------
# Validation
# ---------------------------------------------------------------------------

def test_validate_params_accepts_valid_set():
    params = validate_params(*SYMMETRIC)
    assert isinstance(params, GameParams)
    assert params.r_A == pytest.approx(0.2)
    assert params.r_D == pytest.approx(0.2)
    assert params.as_dict()["q_I"] == 0.1


@pytest.mark.parametrize("index, field", [
    (0, "p_A"), (2, "p_D"), (4, "p_I"),
])
def test_validate_params_rejects_probabilities_outside_open_unit(index, field):
    for bad in (0.0, 1.0, 1.5):
        values = list(SYMMETRIC)
        values[index] = bad
        with pytest.raises(ValidationError) as exc:
            validate_params(*values)
        assert exc.value.field == field


def test_validate_params_rejects_nonpositive_costs_and_negative_risk():
    with pytest.raises(ValidationError) as exc:
        validate_params(0.8, 0.0, 0.8, 4.0, 0.1, 0.1)
    assert exc.value.field == "q_A"
    with pytest.raises(ValidationError) as exc:
        validate_params(0.8, 4.0, 0.8, 4.0, 0.1, -0.01)
    assert exc.value.field == "q_I"


def test_validate_params_rejects_non_numbers():
    with pytest.raises(ValidationError) as exc:
        validate_params("x", 4.0, 0.8, 4.0, 0.1, 0.1)
    assert exc.value.field == "p_A"
    with pytest.raises(ValidationError):
        validate_params(0.8, float("inf"), 0.8, 4.0, 0.1, 0.1)


def test_validate_params_enforces_pd_at_most_qd():
    with pytest.raises(ValidationError) as exc:
        validate_params(0.95, 0.5, 0.9, 0.3, 0.1, 0.01)
    assert exc.value.field == "p_D"


def test_validate_params_relaxed_ordering_logs_warning(caplog):
    with caplog.at_level(logging.WARNING, logger="aptgame"):
        params = validate_params(0.95, 0.5, 0.9, 0.3, 0.1, 0.01, allow_pd_above_qd=True)
    assert params.r_D == pytest.approx(3.0)
    assert any("exceeds q_D" in r.getMessage() for r in caplog.records)


def test_validate_profile_ranges():
    assert validate_profile(1, 1, 0).as_tuple() == (1.0, 1.0, 0.0)
    for bad in ((0.0, 0.5, 0.0), (0.5, 1.2, 0.0), (0.5, 0.5, -0.1), (0.5, 0.5, 1.1)):
        with pytest.raises(ValidationError):
            validate_profile(*bad)


def test_params_are_immutable_and_derive_copies():
    params = validate_params(*SYMMETRIC)
    with pytest.raises(Exception):
        params.q_I = 0.5
    assert params.with_q_I(0.3).q_I == 0.3
    assert params.with_q_A(5.0).q_A == 5.0
    assert params.q_I == 0.1


# ---------------------------------------------------------------------------
# Scenarios
# ---------------------------------------------------------------------------

def test_scenario_visibility():
    assert [s.attacker_sees_insider for s in Scenario] == [True, False, True, False]
    assert [s.defender_sees_insider for s in Scenario] == [True, True, False, False]
    assert Scenario.A.insider_type == "malicious"
    assert Scenario.D.insider_type == "inadvertent"
    assert Scenario.B.knowledge == "known"
    assert Scenario.C.knowledge == "unknown"
    assert Scenario.B.attacker_gamma(1.0) == 0.0
    assert Scenario.B.defender_gamma(1.0) == 1.0


def test_scenario_parse_and_pair():
    assert Scenario.parse(" c ") is Scenario.C
    with pytest.raises(ValidationError):
        Scenario.parse("E")
    assert Scenario.pair("known") == (Scenario.A, Scenario.B)
    assert Scenario.pair("unknown") == (Scenario.C, Scenario.D)
    with pytest.raises(ValidationError):
        Scenario.pair("maybe")


# ---------------------------------------------------------------------------
# Dynamics
# ---------------------------------------------------------------------------

def test_resource_state_closed_form():
    profile = StrategyProfile(0.25, 1.0, 0.0)
    expected = 0.2 * (1.0 - math.exp(-1.25))
    assert resource_state(profile, 1.0) == pytest.approx(expected, abs=1e-15)
    assert resource_state(profile, 1.0) == pytest.approx(0.1427, abs=1e-4)
    assert resource_state(profile, 0.0) == 0.0
    assert steady_state(profile) == pytest.approx(0.2)


def test_resource_state_rejects_negative_time():
    with pytest.raises(DomainError):
        resource_state(StrategyProfile(0.5, 0.5, 0.0), -1.0)
    with pytest.raises(DomainError):
        resource_states(StrategyProfile(0.5, 0.5, 0.0), [0.0, -0.5])


def test_trajectory_samples():
    traj = trajectory(StrategyProfile(0.5, 0.5, 0.0), 10.0, 3)
    assert len(traj) == 3
    assert list(traj.times) == [0.0, 5.0, 10.0]
    assert traj.states[1] == pytest.approx(0.496631, abs=1e-6)
    assert traj.states[2] == pytest.approx(0.499977, abs=1e-6)
    assert traj.records()[0] == {"t": 0.0, "x": 0.0}


def test_trajectory_is_strictly_increasing_and_bounded():
    profile = StrategyProfile(0.7, 0.2, 0.0)
    traj = trajectory(profile, 20.0, 201)
    assert np.all(np.diff(traj.states) > 0.0)
    assert traj.states[-1] < steady_state(profile)


def test_trajectory_saturates_weakly():
    profile = StrategyProfile(0.7, 0.2, 0.0)
    traj = trajectory(profile, 200.0, 201)
    # weak: past t of about 40 neighbouring states round to the same float
    assert np.all(np.diff(traj.states) >= 0.0)
    assert traj.states[-1] <= steady_state(profile)


def test_trajectory_rejects_bad_arguments():
    with pytest.raises(DomainError):
        trajectory(StrategyProfile(0.5, 0.5, 0.0), 0.0, 10)
    with pytest.raises(DomainError):
        trajectory(StrategyProfile(0.5, 0.5, 0.0), 1.0, 1)


@pytest.mark.parametrize("profile", [
    StrategyProfile(0.25, 1.0, 0.0),
    StrategyProfile(1.0, 0.1, 0.0),
    StrategyProfile(0.5, 0.5, 1.0),
])
def test_euler_stepping_matches_closed_form(profile):
    traj = integrate_resource_state(profile, 10.0, 1e-4, method="euler")
    exact = resource_states(profile, traj.times)
    assert np.max(np.abs(traj.states - exact)) <= 1e-4


def test_rk4_stepping_matches_closed_form():
    profile = StrategyProfile(0.25, 1.0, 0.0)
    traj = integrate_resource_state(profile, 10.0, 0.01, method="rk4")
    assert np.max(np.abs(traj.states - resource_states(profile, traj.times))) <= 1e-8


def test_stepping_ends_exactly_at_t_end():
    traj = integrate_resource_state(StrategyProfile(0.5, 0.5, 0.0), 1.0, 0.3)
    assert len(traj) == 5
    assert traj.times[-1] == 1.0


def test_stepping_rejects_unknown_method():
    with pytest.raises(DomainError):
        integrate_resource_state(StrategyProfile(0.5, 0.5, 0.0), 1.0, 0.1, method="midpoint")


# ---------------------------------------------------------------------------
# Costs
# ---------------------------------------------------------------------------

def test_average_costs_hand_values():
    params = validate_params(*SYMMETRIC)
    costs = average_costs(StrategyProfile(0.5, 0.5, 0.0), params, Scenario.A)
    assert costs.as_tuple() == pytest.approx((0.45, 0.45, 0.025), abs=1e-12)


def test_average_costs_depend_on_who_sees_the_insider():
    params = validate_params(*SYMMETRIC)
    profile = StrategyProfile(0.5, 0.5, 1.0)
    a = average_costs(profile, params, Scenario.A)
    d = average_costs(profile, params, Scenario.D)
    assert a.j_attacker == pytest.approx(0.5)
    assert d.j_attacker == pytest.approx(0.45)
    assert a.j_insider == d.j_insider == pytest.approx(-0.325)
    assert average_costs(profile, params, Scenario.B).j_defender == pytest.approx(a.j_defender)
    assert average_costs(profile, params, Scenario.C).j_defender == pytest.approx(d.j_defender)


def test_cost_surface_broadcasts():
    params = validate_params(*SYMMETRIC)
    alphas = np.array([0.25, 0.5, 1.0])
    betas = np.array([0.5, 1.0])
    j_a, j_d, j_i = cost_surface(params, Scenario.C, alphas[None, :], betas[:, None], 1.0)
    assert j_a.shape == j_d.shape == j_i.shape == (2, 3)
    point = average_costs(StrategyProfile(0.5, 1.0, 1.0), params, Scenario.C)
    assert (j_a[1, 1], j_d[1, 1], j_i[1, 1]) == pytest.approx(point.as_tuple(), abs=1e-15)


def test_insider_gain_identity_on_random_inputs():
    rng = np.random.default_rng(7)
    for _ in range(1000):
        params = _random_params(rng)
        profile = _random_profile(rng)
        one = average_costs(StrategyProfile(profile.alpha, profile.beta, 1.0), params, Scenario.A)
        zero = average_costs(StrategyProfile(profile.alpha, profile.beta, 0.0), params, Scenario.A)
        s = profile.beta / (profile.alpha + profile.beta)
        expected = s * s - 0.5 - params.q_I
        assert one.j_insider - zero.j_insider == pytest.approx(expected, abs=1e-12)
        assert insider_gain(profile.alpha, profile.beta, params.q_I) == pytest.approx(expected, abs=1e-12)


def test_finite_horizon_costs_hand_example():
    params = validate_params(*SYMMETRIC)
    profile = StrategyProfile(0.5, 0.5, 0.0)
    finite = finite_horizon_costs(profile, params, Scenario.A, T=1000.0, n_steps=10 ** 5)
    exact = average_costs(profile, params, Scenario.A)
    for f, e in zip(finite.as_tuple(), exact.as_tuple()):
        assert abs(f - e) <= 1e-2


def test_finite_horizon_costs_track_closed_form_on_random_inputs():
    rng = np.random.default_rng(11)
    scenarios = list(Scenario)
    for k in range(100):
        params = _random_params(rng)
        profile = _random_profile(rng)
        scenario = scenarios[k % 4]
        finite = finite_horizon_costs(profile, params, scenario, T=1000.0, n_steps=10 ** 5)
        exact = average_costs(profile, params, scenario)
        assert np.max(np.abs(np.subtract(finite.as_tuple(), exact.as_tuple()))) <= 1e-2


def test_finite_horizon_deviation_shrinks_with_horizon():
    params = validate_params(*SYMMETRIC)
    profile = StrategyProfile(0.5, 0.5, 0.0)
    exact = np.array(average_costs(profile, params, Scenario.A).as_tuple())

    def deviation(T, n_steps):
        finite = finite_horizon_costs(profile, params, Scenario.A, T=T, n_steps=n_steps)
        return np.max(np.abs(np.array(finite.as_tuple()) - exact))

    short, long = deviation(10.0, 10 ** 4), deviation(1000.0, 10 ** 5)
    # the start-up transient averages out as 1/T
    assert short > 10.0 * long
    assert short == pytest.approx(1.8 * 0.625 / 10.0, rel=0.05)


def test_finite_horizon_costs_reject_bad_horizon():
    params = validate_params(*SYMMETRIC)
    with pytest.raises(DomainError):
        finite_horizon_costs(StrategyProfile(0.5, 0.5, 0.0), params, Scenario.A, T=0.0)
    with pytest.raises(DomainError):
        finite_horizon_costs(StrategyProfile(0.5, 0.5, 0.0), params, Scenario.A, n_steps=0)
