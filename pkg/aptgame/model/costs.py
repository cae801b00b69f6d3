"""
Average cost and profit functionals.

Each functional is a long-run time average of a quadratic integrand in the
resource state x(t). Plugging the closed-form state in gives, with
s = beta/(alpha+beta):

    J_A = (p_A (1-g_A)^2 + q_A alpha^2 + g_A^2) s^2
    J_D = (p_D (1-g_D)^2 + q_D beta^2  + g_D^2) (1-s)^2
    J_I = (p_I + gamma^2) s^2 - (q_I gamma + gamma^2 / 2)

where g_A, g_D are the insider level as seen by the attacker and defender
in the given scenario (zero when that player does not see the insider).
"""

from dataclasses import dataclass, asdict
from typing import Dict, Tuple

import numpy as np
from scipy.integrate import trapezoid

from ..errors import DomainError
from .dynamics import resource_states
from .params import GameParams, Scenario, StrategyProfile

DEFAULT_HORIZON = 1000.0
DEFAULT_STEPS = 10 ** 6


@dataclass(frozen=True)
class CostTriple:
    j_attacker: float
    j_defender: float
    j_insider: float

    def as_dict(self) -> Dict[str, float]:
        return asdict(self)

    def as_tuple(self) -> Tuple[float, float, float]:
        return (self.j_attacker, self.j_defender, self.j_insider)


def attacker_weight(params: GameParams, scenario: Scenario, gamma):
    g = gamma if scenario.attacker_sees_insider else 0.0 * gamma
    return params.p_A * (1.0 - g) ** 2 + g ** 2


def defender_weight(params: GameParams, scenario: Scenario, gamma):
    g = gamma if scenario.defender_sees_insider else 0.0 * gamma
    return params.p_D * (1.0 - g) ** 2 + g ** 2


def _closed_forms(alpha, beta, gamma, params: GameParams, scenario: Scenario):
    s = beta / (alpha + beta)
    j_a = (attacker_weight(params, scenario, gamma) + params.q_A * alpha ** 2) * s ** 2
    j_d = (defender_weight(params, scenario, gamma) + params.q_D * beta ** 2) * (1.0 - s) ** 2
    j_i = (params.p_I + gamma ** 2) * s ** 2 - (params.q_I * gamma + 0.5 * gamma ** 2)
    return j_a, j_d, j_i


def average_costs(profile: StrategyProfile, params: GameParams,
                  scenario: Scenario) -> CostTriple:
    j_a, j_d, j_i = _closed_forms(profile.alpha, profile.beta, profile.gamma, params, scenario)
    return CostTriple(float(j_a), float(j_d), float(j_i))


def cost_surface(params: GameParams, scenario: Scenario, alphas, betas,
                 gammas) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Evaluate the three functionals on broadcast numpy arrays.

    Inputs follow numpy broadcasting; pass ``alphas[None, None, :]`` etc.
    for a full tensor grid.
    """
    alphas = np.asarray(alphas, dtype=float)
    betas = np.asarray(betas, dtype=float)
    gammas = np.asarray(gammas, dtype=float)
    j_a, j_d, j_i = _closed_forms(alphas, betas, gammas, params, scenario)
    shape = np.broadcast_shapes(alphas.shape, betas.shape, gammas.shape)
    return (np.broadcast_to(j_a, shape), np.broadcast_to(j_d, shape),
            np.broadcast_to(j_i, shape))


def insider_gain(alpha, beta, q_I):
    """J_I at gamma=1 minus J_I at gamma=0 for the same (alpha, beta)."""
    s = beta / (alpha + beta)
    return s ** 2 - 0.5 - q_I


def finite_horizon_costs(profile: StrategyProfile, params: GameParams, scenario: Scenario,
                         T: float = DEFAULT_HORIZON, n_steps: int = DEFAULT_STEPS) -> CostTriple:
    """Time averages over [0, T] by the composite trapezoid rule."""
    if T <= 0:
        raise DomainError(f"horizon must be > 0, got {T!r}",
                          operation="finite_horizon_costs", value=T)
    if n_steps < 1:
        raise DomainError(f"n_steps must be >= 1, got {n_steps!r}",
                          operation="finite_horizon_costs", value=n_steps)

    t = np.linspace(0.0, float(T), int(n_steps) + 1)
    x = resource_states(profile, t)
    clean = (1.0 - x) ** 2
    compromised = x ** 2
    alpha, beta, gamma = profile.as_tuple()

    attacker = (attacker_weight(params, scenario, gamma) + params.q_A * alpha ** 2) * clean
    defender = (defender_weight(params, scenario, gamma) + params.q_D * beta ** 2) * compromised
    insider = (params.p_I + gamma ** 2) * clean - (params.q_I * gamma + 0.5 * gamma ** 2)

    return CostTriple(
        float(trapezoid(attacker, t) / T),
        float(trapezoid(defender, t) / T),
        float(trapezoid(insider, t) / T),
    )
