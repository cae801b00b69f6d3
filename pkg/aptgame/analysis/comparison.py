"""
Malicious versus inadvertent insider comparison.
"""

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from ..equilibrium import DEFAULT_TOLERANCE, classify
from ..model import GameParams, Scenario
from ..utils.logging import get_logger
from .costs import CostRange, cost_ranges_at_equilibrium

logger = get_logger(__name__)


@dataclass(frozen=True)
class ComparisonRow:
    configuration: str
    insider_type: str
    scenario: Scenario
    equilibrium: str
    beta_range: Optional[CostRange]
    defender_cost_range: Optional[CostRange]
    attacker_cost_range: Optional[CostRange]
    insider_profit_range: Optional[CostRange]

    @property
    def is_empty(self) -> bool:
        return self.beta_range is None

    def record(self) -> Dict[str, object]:
        def bounds(r: Optional[CostRange]) -> Tuple[Optional[float], Optional[float]]:
            return (None, None) if r is None else r.as_tuple()

        beta_lo, beta_hi = bounds(self.beta_range)
        jd_lo, jd_hi = bounds(self.defender_cost_range)
        ja_lo, ja_hi = bounds(self.attacker_cost_range)
        ji_lo, ji_hi = bounds(self.insider_profit_range)
        return {
            "configuration": self.configuration,
            "insider": self.insider_type,
            "scenario": self.scenario.value,
            "equilibrium": self.equilibrium,
            "beta_lo": beta_lo, "beta_hi": beta_hi,
            "J_D_lo": jd_lo, "J_D_hi": jd_hi,
            "J_A_lo": ja_lo, "J_A_hi": ja_hi,
            "J_I_lo": ji_lo, "J_I_hi": ji_hi,
        }


def _rows_for(params: GameParams, scenario: Scenario, configuration: str,
              tolerance: float,
              ratio_tolerance: Optional[float] = None) -> List[ComparisonRow]:
    found = classify(params, scenario, tolerance, ratio_tolerance)
    if found.is_empty:
        logger.info("%s: scenario %s has no equilibrium", configuration, scenario.value)
        return [ComparisonRow(configuration, scenario.insider_type, scenario, "none",
                              None, None, None, None)]
    rows = []
    for eq in found:
        ranges = cost_ranges_at_equilibrium(eq, params)
        rows.append(ComparisonRow(
            configuration=configuration,
            insider_type=scenario.insider_type,
            scenario=scenario,
            equilibrium=eq.describe(),
            beta_range=CostRange(*eq.beta_bounds()),
            defender_cost_range=ranges["defender"],
            attacker_cost_range=ranges["attacker"],
            insider_profit_range=ranges["insider"],
        ))
    return rows


def compare_insiders(params_malicious: GameParams, params_inadvertent: GameParams,
                     knowledge: str, tolerance: float = DEFAULT_TOLERANCE,
                     configuration: str = "",
                     ratio_tolerance: Optional[float] = None) -> List[ComparisonRow]:
    """Paired rows: every malicious equilibrium, then every inadvertent one."""
    malicious, inadvertent = Scenario.pair(knowledge)
    return (_rows_for(params_malicious, malicious, configuration, tolerance, ratio_tolerance)
            + _rows_for(params_inadvertent, inadvertent, configuration, tolerance,
                        ratio_tolerance))


def compare_insiders_same(params: GameParams, knowledge: str,
                          tolerance: float = DEFAULT_TOLERANCE,
                          configuration: str = "") -> List[ComparisonRow]:
    return compare_insiders(params, params, knowledge, tolerance, configuration)


def beta_envelope(rows: List[ComparisonRow], insider_type: str) -> Optional[CostRange]:
    """(inf, sup) of beta* over the non-empty rows of one insider type."""
    ranges = [r.beta_range for r in rows if r.insider_type == insider_type and not r.is_empty]
    if not ranges:
        return None
    return CostRange(min(r.lo for r in ranges), max(r.hi for r in ranges))


def max_defender_cost(rows: List[ComparisonRow], insider_type: str) -> Optional[float]:
    costs = [r.defender_cost_range.hi for r in rows
             if r.insider_type == insider_type and not r.is_empty]
    return max(costs) if costs else None
