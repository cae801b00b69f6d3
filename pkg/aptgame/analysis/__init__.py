"""
aptgame Analysis Module
"""

from .costs import (
    CostRange,
    defender_cost_shortcut,
    defender_cost_at_equilibrium,
    cost_ranges_at_equilibrium,
)
from .comparison import (
    ComparisonRow,
    compare_insiders,
    compare_insiders_same,
    beta_envelope,
    max_defender_cost,
)
from .sweep import (
    SweepRow,
    GammaThresholds,
    risk_series,
    sweep_row,
    sweep_risk_coefficient,
    gamma_switch_threshold,
)

__all__ = [
    'CostRange',
    'defender_cost_shortcut',
    'defender_cost_at_equilibrium',
    'cost_ranges_at_equilibrium',
    'ComparisonRow',
    'compare_insiders',
    'compare_insiders_same',
    'beta_envelope',
    'max_defender_cost',
    'SweepRow',
    'GammaThresholds',
    'risk_series',
    'sweep_row',
    'sweep_risk_coefficient',
    'gamma_switch_threshold',
]
