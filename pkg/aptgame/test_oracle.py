"""
Tests for the brute-force oracle: grids, deviation checks, grid search and
best-response iteration.

Run with: python -m pytest aptgame/test_oracle.py -v
"""

import numpy as np
import pytest

from aptgame.equilibrium import classify, sample_continuum
from aptgame.errors import ValidationError
from aptgame.experiments import (
    TABLE5_ROWS,
    TABLE5_TOLERANCE,
    TABLE8_ROWS,
    table5_params,
    table8_params,
)
from aptgame.model import Scenario, StrategyProfile, cost_surface, validate_params
from aptgame.oracle import (
    GridSpec,
    VerificationReport,
    best_response_iteration,
    gradient_bound,
    search_grid_equilibria,
    verify_fixed_point,
    verify_grid,
)


def _has(found, target, tol=1e-12):
    return any(max(abs(a - b) for a, b in zip(p.as_tuple(), target)) <= tol for p in found)


# ---------------------------------------------------------------------------
# GridSpec
# ---------------------------------------------------------------------------

def test_grid_runs_down_from_one():
    grid = GridSpec(step=0.25, gamma_values=[0.0, 1.0])
    assert list(grid.alphas()) == [0.25, 0.5, 0.75, 1.0]
    assert list(grid.betas()) == [0.25, 0.5, 0.75, 1.0]
    assert grid.size == 32


def test_grid_keeps_one_for_uneven_steps():
    grid = GridSpec(step=0.3)
    assert list(grid.alphas()) == [0.4, 0.7, 1.0]


def test_default_grid_hits_published_values():
    grid = GridSpec()
    alphas = grid.alphas()
    assert len(alphas) == 200
    for value in (0.2, 0.25, 0.8, 0.16):
        assert value in alphas
    gammas = grid.gammas()
    assert len(gammas) == 21
    assert gammas[0] == 0.0 and gammas[-1] == 1.0


def test_grid_minimums_and_explicit_gammas():
    grid = GridSpec(step=0.1, alpha_min=0.5, gamma_values=[1.0, 0.0, 1.0])
    assert grid.alphas()[0] == pytest.approx(0.5)
    assert grid.betas()[0] == pytest.approx(0.1)
    assert list(grid.gammas()) == [0.0, 1.0]


@pytest.mark.parametrize("kwargs", [
    {"step": 0.0}, {"step": 0.6}, {"alpha_min": 1.5},
    {"gamma_values": []}, {"gamma_values": [0.0, 2.0]}, {"gamma_step": 0.0},
])
def test_grid_rejects_bad_specs(kwargs):
    with pytest.raises(ValidationError):
        GridSpec(**kwargs)


def test_grid_step_error_names_the_flag():
    with pytest.raises(ValidationError) as exc:
        GridSpec(step=0.7)
    assert exc.value.field == "grid-step"


# ---------------------------------------------------------------------------
# verify_grid / verify_fixed_point
# ---------------------------------------------------------------------------

def test_verify_grid_accepts_published_first_kind_point(first_kind_params):
    profile = StrategyProfile(0.2646, 0.84, 1.0)
    report = verify_grid(profile, first_kind_params, Scenario.A, GridSpec(), slack=1e-4)
    assert report.is_equilibrium
    assert report.method == "grid"
    assert report.worst_insider_gain <= 1e-12


def test_verify_grid_rejects_off_equilibrium_profile(symmetric_params):
    report = verify_grid(StrategyProfile(0.5, 0.5, 0.0), symmetric_params, Scenario.A)
    assert not report.is_equilibrium
    assert report.worst_attacker_gain == pytest.approx(0.45 - 1.44 * (0.5 / 0.9) ** 2)
    assert report.attacker_witness == pytest.approx(0.4)


def test_verify_grid_gains_are_non_negative(symmetric_params):
    for profile in (StrategyProfile(0.2, 1.0, 1.0), StrategyProfile(1.0, 0.1, 0.5)):
        report = verify_grid(profile, symmetric_params, Scenario.C, GridSpec(step=0.05))
        gains = (report.worst_attacker_gain, report.worst_defender_gain, report.worst_insider_gain)
        assert all(g >= 0.0 for g in gains)
        assert report.is_equilibrium == all(g <= report.slack for g in gains)


def test_verify_fixed_point_on_classified_member(sweep_params):
    found = classify(sweep_params, Scenario.D)
    for eq in found:
        for member in eq.members():
            assert verify_fixed_point(member, sweep_params, Scenario.D).is_equilibrium


def test_verify_fixed_point_reports_insider_mismatch(sweep_params):
    report = verify_fixed_point(StrategyProfile(0.2, 1.0, 0.0), sweep_params, Scenario.D)
    assert not report.is_equilibrium
    assert report.method == "fixed_point"
    assert report.worst_attacker_gain == pytest.approx(0.0)
    assert report.worst_insider_gain == 1.0
    assert report.insider_witness == 1.0


def test_verify_fixed_point_reports_attacker_distance(symmetric_params):
    report = verify_fixed_point(StrategyProfile(0.5, 0.5, 0.0), symmetric_params, Scenario.A)
    assert report.worst_attacker_gain == pytest.approx(0.1)
    assert report.attacker_witness == pytest.approx(0.4)


def test_report_from_gains_clips_and_drops_witnesses():
    report = VerificationReport.from_gains((-1e-15, 2e-4, 0.0), (0.3, 0.4, 1.0), 1e-4, "grid")
    assert report.worst_attacker_gain == 0.0
    assert report.attacker_witness is None
    assert report.defender_witness == 0.4
    assert not report.is_equilibrium
    assert report.as_dict()["method"] == "grid"


# ---------------------------------------------------------------------------
# Grid search
# ---------------------------------------------------------------------------

def test_search_finds_high_risk_equilibrium():
    params = table8_params(4.0, 0.3)
    found = search_grid_equilibria(params, Scenario.D, GridSpec(), slack=1e-4)
    assert _has(found, (0.2, 1.0, 0.0))
    assert all(p.gamma == 0.0 for p in found)


def test_search_finds_both_families_at_low_risk():
    params = table8_params(4.0, 0.1)
    found = search_grid_equilibria(params, Scenario.D, GridSpec(), slack=1e-4)
    assert _has(found, (0.2, 1.0, 1.0))
    assert _has(found, (0.25, 0.8, 0.0))


def test_search_finds_nothing_in_empty_band():
    params = table8_params(3.2, 0.16)
    assert classify(params, Scenario.C).is_empty
    assert search_grid_equilibria(params, Scenario.C, GridSpec(), slack=1e-4) == []


def test_search_is_deterministic_across_workers():
    params = table8_params(4.0, 0.1)
    grid = GridSpec(step=0.01)
    serial = search_grid_equilibria(params, Scenario.A, grid, slack=1e-4)
    pooled = search_grid_equilibria(params, Scenario.A, grid, slack=1e-4, workers=4)
    assert serial == pooled


def _completeness_cases():
    for row in TABLE8_ROWS:
        yield pytest.param(table8_params(row.q_D, row.q_I), row.scenario, 1e-9,
                           id=f"sweep-{row.scenario.value}-{row.q_I:g}")
    for row in TABLE5_ROWS:
        yield pytest.param(table5_params(row.q_A), row.scenario, TABLE5_TOLERANCE,
                           id=f"table-{row.label}")


@pytest.mark.parametrize("params, scenario, tolerance", list(_completeness_cases()))
def test_grid_equilibria_lie_near_classified_set(params, scenario, tolerance):
    classified = classify(params, scenario, tolerance)
    found = search_grid_equilibria(params, scenario, GridSpec(), slack=1e-5)
    for profile in found:
        assert classified.distance(profile) <= 0.02, profile


def _classified_members(found):
    members = []
    for eq in found:
        members.extend([eq.profile] if eq.is_point else sample_continuum(eq, 9))
    return members


@pytest.mark.parametrize("params, scenario, tolerance", list(_completeness_cases()))
def test_every_classified_member_has_a_grid_hit_nearby(params, scenario, tolerance):
    classified = classify(params, scenario, tolerance)
    found = search_grid_equilibria(params, scenario, GridSpec(), slack=1e-3)
    for member in _classified_members(classified):
        assert _has(found, member.as_tuple(), tol=0.02), member


@pytest.mark.parametrize("params, scenario, tolerance", list(_completeness_cases()))
def test_classified_members_pass_grid_check_at_gradient_slack(params, scenario, tolerance):
    grid = GridSpec()
    slack = gradient_bound(params, scenario, grid).slack(grid.step)
    for member in _classified_members(classify(params, scenario, tolerance)):
        report = verify_grid(member, params, scenario, grid, slack=slack)
        assert report.is_equilibrium, (member, report)


@pytest.mark.parametrize("row", TABLE8_ROWS, ids=lambda r: f"{r.scenario.value}-{r.q_I:g}")
def test_grid_hits_survive_halving_the_step(row):
    params = table8_params(row.q_D, row.q_I)
    coarse = search_grid_equilibria(params, row.scenario, GridSpec(step=0.01), slack=1e-4)
    fine = search_grid_equilibria(params, row.scenario, GridSpec(step=0.005), slack=1e-3)
    for profile in coarse:
        assert _has(fine, profile.as_tuple(), tol=0.02), profile


def test_insider_best_deviation_is_never_interior():
    rng = np.random.default_rng(17)
    gammas = np.linspace(0.0, 1.0, 101)
    for _ in range(200):
        p_A, p_D = rng.uniform(0.1, 0.95, size=2)
        params = validate_params(p_A, rng.uniform(1.0, 8.0), p_D, rng.uniform(1.0, 8.0),
                                 rng.uniform(0.05, 0.5), rng.uniform(0.0, 0.4))
        alpha, beta = rng.uniform(0.01, 1.0, size=2)
        for scenario in Scenario:
            _, _, j_i = cost_surface(params, scenario, alpha, beta, gammas)
            assert j_i.max() <= max(j_i[0], j_i[-1]) + 1e-12
            report = verify_grid(StrategyProfile(alpha, beta, 0.5), params, scenario,
                                 GridSpec(step=0.1))
            assert report.insider_witness in (0.0, 1.0)


def test_gradient_bound_scales_with_step(symmetric_params):
    bound = gradient_bound(symmetric_params, Scenario.A, GridSpec(step=0.05))
    assert bound.worst > 0.0
    assert bound.worst == max(bound.attacker, bound.defender, bound.insider)
    assert bound.slack(0.05) == pytest.approx(0.05 * bound.worst)


# ---------------------------------------------------------------------------
# Best-response iteration
# ---------------------------------------------------------------------------

def test_iteration_settles_on_high_risk_equilibrium():
    params = table8_params(4.0, 0.3)
    result = best_response_iteration(StrategyProfile(1.0, 1.0, 0.0), params, Scenario.D)
    assert result.converged
    assert result.profile.as_tuple() == pytest.approx((0.2, 1.0, 0.0))
    assert result.iterations == 2
    assert len(result.history) == result.iterations + 1


def test_iteration_reaches_full_attack_when_attack_is_cheap():
    params = validate_params(0.95, 0.5, 0.8, 4.0, 0.1, 0.1)
    result = best_response_iteration(StrategyProfile(0.01, 1.0, 0.0), params, Scenario.D)
    assert result.converged
    assert result.profile.as_tuple() == pytest.approx((1.0, 0.2, 0.0))


def test_iteration_from_equilibrium_stops_immediately():
    params = table8_params(4.0, 0.3)
    result = best_response_iteration(StrategyProfile(0.2, 1.0, 0.0), params, Scenario.D)
    assert result.converged
    assert result.iterations == 1


def test_iteration_reports_non_convergence_honestly():
    params = validate_params(0.95, 0.5, 0.8, 4.0, 0.1, 0.1)
    result = best_response_iteration(StrategyProfile(0.01, 1.0, 0.0), params, Scenario.D,
                                     max_iters=1)
    assert not result.converged
    assert result.iterations == 1
