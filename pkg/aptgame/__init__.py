from .__version__ import __version__
from .model import GameParams, Scenario, StrategyProfile, average_costs
from .best_response import br_attacker, br_defender, br_insider
from .equilibrium import Equilibrium, EquilibriumSet, classify
from .oracle import verify_grid, verify_fixed_point

__all__ = [
    '__version__',
    'GameParams',
    'Scenario',
    'StrategyProfile',
    'average_costs',
    'br_attacker',
    'br_defender',
    'br_insider',
    'Equilibrium',
    'EquilibriumSet',
    'classify',
    'verify_grid',
    'verify_fixed_point',
]
