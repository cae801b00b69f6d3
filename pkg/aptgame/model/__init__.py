"""
aptgame Model Module
"""

from .params import GameParams, StrategyProfile, Scenario, validate_params, validate_profile
from .dynamics import (
    Trajectory,
    steady_state,
    resource_state,
    resource_states,
    trajectory,
    integrate_resource_state,
)
from .costs import (
    CostTriple,
    average_costs,
    cost_surface,
    insider_gain,
    finite_horizon_costs,
    attacker_weight,
    defender_weight,
    DEFAULT_HORIZON,
    DEFAULT_STEPS,
)

__all__ = [
    'GameParams',
    'StrategyProfile',
    'Scenario',
    'validate_params',
    'validate_profile',
    'Trajectory',
    'steady_state',
    'resource_state',
    'resource_states',
    'trajectory',
    'integrate_resource_state',
    'CostTriple',
    'average_costs',
    'cost_surface',
    'insider_gain',
    'finite_horizon_costs',
    'attacker_weight',
    'defender_weight',
    'DEFAULT_HORIZON',
    'DEFAULT_STEPS',
]
