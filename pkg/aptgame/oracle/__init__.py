"""
aptgame Oracle Module
"""

from .grid import GridSpec, DEFAULT_STEP, DEFAULT_GAMMA_STEP
from .verification import (
    VerificationReport,
    GradientBound,
    verify_grid,
    verify_fixed_point,
    search_grid_equilibria,
    gradient_bound,
    DEFAULT_GRID_SLACK,
    DEFAULT_FIXED_POINT_TOLERANCE,
)
from .dynamics import IterationResult, best_response_iteration

__all__ = [
    'GridSpec',
    'DEFAULT_STEP',
    'DEFAULT_GAMMA_STEP',
    'VerificationReport',
    'GradientBound',
    'verify_grid',
    'verify_fixed_point',
    'search_grid_equilibria',
    'gradient_bound',
    'DEFAULT_GRID_SLACK',
    'DEFAULT_FIXED_POINT_TOLERANCE',
    'IterationResult',
    'best_response_iteration',
]
