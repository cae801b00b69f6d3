"""
aptgame Best Response Module
"""

from .responses import (
    InsiderResponse,
    attacker_ratio,
    defender_ratio,
    br_attacker,
    br_defender,
    br_insider,
    insider_margin,
    DEFAULT_TIE_TOLERANCE,
)

__all__ = [
    'InsiderResponse',
    'attacker_ratio',
    'defender_ratio',
    'br_attacker',
    'br_defender',
    'br_insider',
    'insider_margin',
    'DEFAULT_TIE_TOLERANCE',
]
