"""
aptgame Experiments Module
"""

from .configs import (
    TABLE5_TOLERANCE,
    TABLE5_ROWS,
    TABLE6_ROWS,
    TABLE7_CONFIGS,
    TABLE8_ROWS,
    TABLE8_SWEEP_QD,
    table5_params,
    table6_params,
    table8_params,
)
from .records import (
    SURFACE_COLUMNS,
    member_near,
    table5_records,
    table6_derived_records,
    table7_comparisons,
    table7_records,
    table8_records,
    surface_records,
    bar_records,
    gap_records,
)

__all__ = [
    'TABLE5_TOLERANCE',
    'TABLE5_ROWS',
    'TABLE6_ROWS',
    'TABLE7_CONFIGS',
    'TABLE8_ROWS',
    'TABLE8_SWEEP_QD',
    'table5_params',
    'table6_params',
    'table8_params',
    'SURFACE_COLUMNS',
    'member_near',
    'table5_records',
    'table6_derived_records',
    'table7_comparisons',
    'table7_records',
    'table8_records',
    'surface_records',
    'bar_records',
    'gap_records',
]
