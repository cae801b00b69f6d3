"""
Insider risk-coefficient sweeps.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from ..best_response import attacker_ratio
from ..equilibrium import DEFAULT_TOLERANCE, classify, t_one
from ..model import GameParams, Scenario, insider_gain


@dataclass(frozen=True)
class SweepRow:
    q_I: float
    scenario: Scenario
    summary: str
    n_equilibria: int
    gammas: Tuple[float, ...]
    insider_profit_gap: Tuple[float, ...]

    def record(self) -> Dict[str, object]:
        return {
            "q_i": self.q_I,
            "scenario": self.scenario.value,
            "n_equilibria": self.n_equilibria,
            "gammas": ";".join(f"{g:g}" for g in self.gammas),
            "profit_gap": ";".join(f"{g:.17g}" for g in self.insider_profit_gap),
        }


@dataclass(frozen=True)
class GammaThresholds:
    """q_I levels where the insider's equilibrium behaviour flips.

    ``gamma_one``: above it no gamma*=1 equilibrium exists.
    ``gamma_zero``: at or above it the (r_A, 1, 0) equilibrium appears, or
    the gamma*=0 continuum widens to beta* up to 1; None when the gamma*=0
    equilibria do not depend on q_I.
    """
    gamma_one: float
    gamma_zero: Optional[float]


def risk_series(start: float = 0.1, step: float = 0.01, count: int = 15) -> List[float]:
    return [round(start + step * k, 10) for k in range(count)]


def sweep_row(params: GameParams, scenario: Scenario,
              tolerance: float = DEFAULT_TOLERANCE) -> SweepRow:
    found = classify(params, scenario, tolerance)
    gaps = []
    for eq in found:
        member = eq.representative()
        gaps.append(float(insider_gain(member.alpha, member.beta, params.q_I)))
    return SweepRow(
        q_I=params.q_I,
        scenario=scenario,
        summary=found.describe(),
        n_equilibria=len(found),
        gammas=tuple(found.gammas()),
        insider_profit_gap=tuple(gaps),
    )


def sweep_risk_coefficient(params_base: GameParams, scenario: Scenario,
                           q_I_values: Sequence[float],
                           tolerance: float = DEFAULT_TOLERANCE,
                           workers: int = 1) -> List[SweepRow]:
    """Classify the game at each q_I; rows come back in input order."""
    games = [params_base.with_q_I(q) for q in q_I_values]

    def run(p):
        return sweep_row(p, scenario, tolerance)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(run, games))
    return [run(p) for p in games]


def gamma_switch_threshold(params_base: GameParams, scenario: Scenario) -> GammaThresholds:
    gamma_one = t_one(attacker_ratio(params_base, scenario, 1.0))
    r_A, r_D = params_base.r_A, params_base.r_D
    gamma_zero = t_one(r_A) if r_A <= 1.0 and r_A <= r_D else None
    return GammaThresholds(gamma_one=gamma_one, gamma_zero=gamma_zero)
