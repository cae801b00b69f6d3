"""
Costs evaluated on equilibria.

On an interior equilibrium the product alpha*beta is fixed by the defender's
first-order condition, which collapses J_D to a function of beta alone:

    defender sees gamma = 1:   alpha*beta = 1/q_D   ->  J_D = 1 / (1 + q_D beta^2)
    otherwise:                 alpha*beta = r_D     ->  J_D = p_D^2 / (p_D + q_D beta^2)
"""

import math
from dataclasses import dataclass
from typing import Dict, Iterable

from ..equilibrium import DEFAULT_TOLERANCE, Equilibrium
from ..errors import DomainError
from ..model import GameParams, StrategyProfile, average_costs


@dataclass(frozen=True)
class CostRange:
    lo: float
    hi: float

    @classmethod
    def of(cls, values: Iterable[float]) -> "CostRange":
        values = list(values)
        return cls(min(values), max(values))

    @property
    def is_singleton(self) -> bool:
        return self.lo == self.hi

    def as_tuple(self):
        return (self.lo, self.hi)


def defender_cost_shortcut(beta: float, params: GameParams, risky: bool) -> float:
    """J_D on the product-law curve; ``risky`` when the defender prices gamma = 1."""
    if risky:
        return 1.0 / (1.0 + params.q_D * beta * beta)
    return params.p_D ** 2 / (params.p_D + params.q_D * beta * beta)


def _member_defender_cost(eq: Equilibrium, member: StrategyProfile, params: GameParams,
                          tolerance: float) -> float:
    risky = eq.gamma == 1.0 and eq.scenario.defender_sees_insider
    product = 1.0 / params.q_D if risky else params.r_D
    if math.isclose(member.alpha * member.beta, product, rel_tol=tolerance, abs_tol=0.0):
        return defender_cost_shortcut(member.beta, params, risky)
    if eq.is_point and (member.alpha == 1.0 or member.beta == 1.0):
        return average_costs(member, params, eq.scenario).j_defender
    raise DomainError(
        f"alpha*beta = {member.alpha * member.beta:.12g} violates the product law "
        f"alpha*beta = {product:.12g}",
        operation="defender_cost_at_equilibrium", value=member,
    )


def defender_cost_at_equilibrium(eq: Equilibrium, params: GameParams,
                                 tolerance: float = DEFAULT_TOLERANCE) -> CostRange:
    """Defender cost at a point, or its range over a continuum.

    Both shortcuts decrease in beta, so the endpoints of a continuum bound
    the range; the midpoint is included as a check.
    """
    return CostRange.of(_member_defender_cost(eq, m, params, tolerance) for m in eq.members())


def cost_ranges_at_equilibrium(eq: Equilibrium, params: GameParams) -> Dict[str, CostRange]:
    triples = [average_costs(m, params, eq.scenario) for m in eq.members()]
    return {
        "attacker": CostRange.of(t.j_attacker for t in triples),
        "defender": CostRange.of(t.j_defender for t in triples),
        "insider": CostRange.of(t.j_insider for t in triples),
    }
