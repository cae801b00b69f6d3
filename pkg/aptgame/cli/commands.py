"""
Subcommand implementations.

Each ``cmd_*`` takes a validated ``RunConfig`` and returns a
``CommandOutput``; nothing here prints or exits.
"""

from typing import Dict, List

from ..analysis import (
    compare_insiders,
    gamma_switch_threshold,
    risk_series,
    sweep_risk_coefficient,
)
from ..best_response import br_attacker, br_defender, br_insider, insider_margin
from ..equilibrium import DEFAULT_TOLERANCE, classify, sample_continuum
from ..model import (
    average_costs,
    finite_horizon_costs,
    trajectory,
    validate_params,
)
from ..oracle import DEFAULT_FIXED_POINT_TOLERANCE, verify_fixed_point, verify_grid
from ..utils.config import RunConfig
from .output import CommandOutput, Table

EQUILIBRIA_COLUMNS = ("scenario", "kind", "gamma", "alpha_or_coeff", "beta_lo", "beta_hi", "condition")
MEMBER_COLUMNS = ("scenario", "gamma", "alpha", "beta", "alpha_2dp", "beta_2dp")
VERIFY_COLUMNS = ("method", "is_equilibrium", "attacker_gain", "defender_gain", "insider_gain",
                  "attacker_witness", "defender_witness", "insider_witness", "slack")
COSTS_COLUMNS = ("method", "J_A", "J_D", "J_I")
TRAJECTORY_COLUMNS = ("t", "x")
BEST_RESPONSE_COLUMNS = ("player", "response", "value")
SWEEP_COLUMNS = ("q_i", "scenario", "n_equilibria", "gammas", "profit_gap")
COMPARE_COLUMNS = ("configuration", "insider", "scenario", "equilibrium", "beta_lo", "beta_hi",
                   "J_D_lo", "J_D_hi", "J_A_lo", "J_A_hi", "J_I_lo", "J_I_hi")


def _member_record(scenario, profile) -> Dict[str, object]:
    return {
        "scenario": scenario.value,
        "gamma": profile.gamma,
        "alpha": profile.alpha,
        "beta": profile.beta,
        "alpha_2dp": f"{profile.alpha:.2f}",
        "beta_2dp": f"{profile.beta:.2f}",
    }


def cmd_solve(config: RunConfig) -> CommandOutput:
    scenario = config.require_scenario()
    params = config.require_params()
    found = classify(params, scenario, config.tolerance(DEFAULT_TOLERANCE),
                     config.ratio_tolerance(DEFAULT_TOLERANCE))

    equilibria = [eq.summary() for eq in found]
    members: List[Dict[str, object]] = []
    for eq in found:
        profiles = [eq.profile] if eq.is_point else sample_continuum(eq, max(config.samples, 2))
        if eq.is_continuum and config.at_beta is not None:
            lo, hi = eq.beta_range
            if lo <= config.at_beta <= hi:
                profiles.append(eq.member(config.at_beta))
        for p in profiles:
            members.append(_member_record(scenario, p))

    metadata = config.metadata()
    metadata.update({k: v for k, v in found.ratios.as_dict().items() if v is not None})
    metadata["equilibria"] = len(found)
    notes = [] if found else ["result=no equilibrium"]
    return CommandOutput("solve", [
        Table("equilibria", EQUILIBRIA_COLUMNS, equilibria, notes),
        Table("members", MEMBER_COLUMNS, members, notes),
    ], metadata)


def _report_record(report) -> Dict[str, object]:
    return {
        "method": report.method,
        "is_equilibrium": report.is_equilibrium,
        "attacker_gain": report.worst_attacker_gain,
        "defender_gain": report.worst_defender_gain,
        "insider_gain": report.worst_insider_gain,
        "attacker_witness": report.attacker_witness,
        "defender_witness": report.defender_witness,
        "insider_witness": report.insider_witness,
        "slack": report.slack,
    }


def cmd_verify(config: RunConfig) -> CommandOutput:
    """Grid deviation check plus fixed-point check.

    The exit code follows the grid check at ``--slack``; the fixed-point
    row is reported alongside at ``--tol``.
    """
    scenario = config.require_scenario()
    params = config.require_params()
    profile = config.require_profile()
    grid_report = verify_grid(profile, params, scenario, config.grid(), config.slack)
    fixed_report = verify_fixed_point(profile, params, scenario,
                                      config.tolerance(DEFAULT_FIXED_POINT_TOLERANCE))
    return CommandOutput(
        "verify",
        [Table("verification", VERIFY_COLUMNS,
               [_report_record(grid_report), _report_record(fixed_report)])],
        config.metadata(),
        exit_code=0 if grid_report.is_equilibrium else 1,
    )


def cmd_costs(config: RunConfig) -> CommandOutput:
    scenario = config.require_scenario()
    params = config.require_params()
    profile = config.require_profile()
    exact = average_costs(profile, params, scenario)
    finite = finite_horizon_costs(profile, params, scenario, config.horizon, config.n_steps)
    diff = [f - e for f, e in zip(finite.as_tuple(), exact.as_tuple())]
    records = [
        dict(zip(COSTS_COLUMNS, ("closed_form",) + exact.as_tuple())),
        dict(zip(COSTS_COLUMNS, ("finite_horizon",) + finite.as_tuple())),
        dict(zip(COSTS_COLUMNS, ["difference"] + diff)),
    ]
    return CommandOutput("costs", [Table("costs", COSTS_COLUMNS, records)], config.metadata())


def cmd_trajectory(config: RunConfig) -> CommandOutput:
    traj = trajectory(config.require_profile(), config.t_end, config.points)
    return CommandOutput("trajectory",
                         [Table("trajectory", TRAJECTORY_COLUMNS, traj.records())],
                         config.metadata())


def cmd_best_response(config: RunConfig) -> CommandOutput:
    scenario = config.require_scenario()
    params = config.require_params()
    alpha, beta, gamma = config.require_profile().as_tuple()
    response = br_insider(alpha, beta, params, config.tolerance(DEFAULT_TOLERANCE))
    records = [
        {"player": "attacker", "response": "alpha",
         "value": br_attacker(beta, gamma, params, scenario)},
        {"player": "defender", "response": "beta",
         "value": br_defender(alpha, gamma, params, scenario)},
        {"player": "insider", "response": f"gamma={response.value}",
         "value": response.resolve(tie=1.0)},
        {"player": "insider", "response": "margin",
         "value": insider_margin(alpha, beta, params)},
    ]
    return CommandOutput("best-response",
                         [Table("best_response", BEST_RESPONSE_COLUMNS, records)],
                         config.metadata())


def cmd_sweep_qi(config: RunConfig) -> CommandOutput:
    scenario = config.require_scenario()
    params = config.require_params()
    rows = sweep_risk_coefficient(params, scenario, risk_series(),
                                  config.tolerance(DEFAULT_TOLERANCE), config.workers)
    thresholds = gamma_switch_threshold(params, scenario)
    metadata = config.metadata()
    metadata["gamma_one_threshold"] = thresholds.gamma_one
    if thresholds.gamma_zero is not None:
        metadata["gamma_zero_threshold"] = thresholds.gamma_zero
    return CommandOutput("sweep-qi",
                         [Table("sweep", SWEEP_COLUMNS, [r.record() for r in rows])],
                         metadata)


def cmd_compare(config: RunConfig) -> CommandOutput:
    params = config.require_params()
    knowledge = config.knowledge
    if knowledge is None:
        knowledge = config.require_scenario().knowledge
    inadvertent = params
    if config.q_A_inadvertent is not None:
        inadvertent = validate_params(**{**params.as_dict(), "q_A": config.q_A_inadvertent})
    rows = compare_insiders(params, inadvertent, knowledge,
                            config.tolerance(DEFAULT_TOLERANCE), configuration=knowledge,
                            ratio_tolerance=config.ratio_tolerance(DEFAULT_TOLERANCE))
    return CommandOutput("compare",
                         [Table("comparison", COMPARE_COLUMNS, [r.record() for r in rows])],
                         config.metadata())


COMMANDS = {
    "solve": cmd_solve,
    "verify": cmd_verify,
    "costs": cmd_costs,
    "trajectory": cmd_trajectory,
    "best-response": cmd_best_response,
    "sweep-qi": cmd_sweep_qi,
    "compare": cmd_compare,
}
