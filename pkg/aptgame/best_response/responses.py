"""
Closed-form best responses.

Attacker and defender costs are strictly convex on (0, 1] in their own
strategy, so each best response is the unconstrained minimiser clamped at 1.
The insider profit is convex or decreasing in gamma, so the insider always
plays an endpoint.
"""

from enum import Enum
from typing import Tuple

from ..model import GameParams, Scenario, attacker_weight, defender_weight

DEFAULT_TIE_TOLERANCE = 1e-9


class InsiderResponse(Enum):
    ZERO = "0"
    ONE = "1"
    BOTH = "both"

    def gammas(self) -> Tuple[float, ...]:
        if self is InsiderResponse.ZERO:
            return (0.0,)
        if self is InsiderResponse.ONE:
            return (1.0,)
        return (0.0, 1.0)

    def resolve(self, tie: float = 1.0) -> float:
        """The gamma to play; ties go to ``tie``."""
        if self is InsiderResponse.BOTH:
            return tie
        return self.gammas()[0]

    def accepts(self, gamma: float) -> bool:
        return gamma in self.gammas()


def attacker_ratio(params: GameParams, scenario: Scenario, gamma: float) -> float:
    """Unclamped attacker response times beta."""
    return attacker_weight(params, scenario, gamma) / params.q_A


def defender_ratio(params: GameParams, scenario: Scenario, gamma: float) -> float:
    """Unclamped defender response times alpha."""
    return defender_weight(params, scenario, gamma) / params.q_D


def br_attacker(beta: float, gamma: float, params: GameParams, scenario: Scenario) -> float:
    return min(1.0, attacker_ratio(params, scenario, gamma) / beta)


def br_defender(alpha: float, gamma: float, params: GameParams, scenario: Scenario) -> float:
    return min(1.0, defender_ratio(params, scenario, gamma) / alpha)


def insider_margin(alpha: float, beta: float, params: GameParams) -> float:
    s = beta / (alpha + beta)
    return s * s - params.q_I - 0.5


def br_insider(alpha: float, beta: float, params: GameParams,
               tolerance: float = DEFAULT_TIE_TOLERANCE) -> InsiderResponse:
    d = insider_margin(alpha, beta, params)
    if d > tolerance:
        return InsiderResponse.ONE
    if d < -tolerance:
        return InsiderResponse.ZERO
    return InsiderResponse.BOTH
