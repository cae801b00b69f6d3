"""
Round-robin best-response iteration.

Exploratory tooling: the maps carry no convergence guarantee, so the result
reports whether the iteration actually settled.
"""

from dataclasses import dataclass, field
from typing import List

from ..best_response import br_attacker, br_defender, br_insider
from ..model import GameParams, Scenario, StrategyProfile
from ..utils.logging import get_logger

logger = get_logger(__name__)


@dataclass
class IterationResult:
    profile: StrategyProfile
    converged: bool
    iterations: int
    history: List[StrategyProfile] = field(default_factory=list)


def _sweep(profile: StrategyProfile, params: GameParams, scenario: Scenario) -> StrategyProfile:
    alpha = br_attacker(profile.beta, profile.gamma, params, scenario)
    beta = br_defender(alpha, profile.gamma, params, scenario)
    gamma = br_insider(alpha, beta, params).resolve(tie=1.0)
    return StrategyProfile(alpha, beta, gamma)


def best_response_iteration(start: StrategyProfile, params: GameParams, scenario: Scenario,
                            max_iters: int = 1000, tolerance: float = 1e-12) -> IterationResult:
    current = start
    history = [start]
    for i in range(1, max_iters + 1):
        nxt = _sweep(current, params, scenario)
        history.append(nxt)
        change = max(abs(a - b) for a, b in zip(nxt.as_tuple(), current.as_tuple()))
        current = nxt
        if change <= tolerance:
            logger.debug("best-response iteration converged after %d sweeps", i)
            return IterationResult(current, True, i, history)
    logger.warning("best-response iteration stopped after %d sweeps without converging", max_iters)
    return IterationResult(current, False, max_iters, history)
