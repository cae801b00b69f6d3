"""
aptgame Equilibrium Module
"""

from .types import (
    DerivedRatios,
    EquilibriumKind,
    Equilibrium,
    EquilibriumSet,
    sample_continuum,
)
from .classifier import (
    classify,
    derived_ratios,
    indifference_beta,
    t_one,
    DEFAULT_TOLERANCE,
)

__all__ = [
    'DerivedRatios',
    'EquilibriumKind',
    'Equilibrium',
    'EquilibriumSet',
    'sample_continuum',
    'classify',
    'derived_ratios',
    'indifference_beta',
    't_one',
    'DEFAULT_TOLERANCE',
]
