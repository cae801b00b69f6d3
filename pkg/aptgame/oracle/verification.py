"""
Independent checks of the Nash condition.

``verify_grid`` only evaluates the cost functionals: each player's best
unilateral deviation on the grid is compared with the cost at the profile.
``verify_fixed_point`` only evaluates the closed-form best responses and
never scans a grid. Agreement of the two is independent evidence.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, asdict
from typing import Dict, List, Optional

import numpy as np

from ..best_response import br_attacker, br_defender, br_insider
from ..model import GameParams, Scenario, StrategyProfile, cost_surface
from ..utils.logging import get_logger
from .grid import GridSpec

logger = get_logger(__name__)

DEFAULT_GRID_SLACK = 1e-4
DEFAULT_FIXED_POINT_TOLERANCE = 1e-6


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of a deviation check.

    For ``method="grid"`` the gains are cost decreases (attacker, defender)
    and profit increase (insider) of the best grid deviation. For
    ``method="fixed_point"`` they are distances between each strategy and
    the player's best response. In both cases ``is_equilibrium`` holds iff
    every gain is within ``slack``.
    """
    is_equilibrium: bool
    worst_attacker_gain: float
    worst_defender_gain: float
    worst_insider_gain: float
    attacker_witness: Optional[float]
    defender_witness: Optional[float]
    insider_witness: Optional[float]
    slack: float
    method: str

    @classmethod
    def from_gains(cls, gains, witnesses, slack: float, method: str) -> "VerificationReport":
        gains = [max(0.0, float(g)) for g in gains]
        witnesses = [w if g > 0.0 else None for g, w in zip(gains, witnesses)]
        return cls(all(g <= slack for g in gains), *gains, *witnesses, float(slack), method)

    def as_dict(self) -> Dict[str, object]:
        return asdict(self)


def verify_grid(profile: StrategyProfile, params: GameParams, scenario: Scenario,
                grid: Optional[GridSpec] = None,
                slack: float = DEFAULT_GRID_SLACK) -> VerificationReport:
    grid = grid or GridSpec()
    alpha, beta, gamma = profile.as_tuple()
    here_a, here_d, here_i = cost_surface(params, scenario, alpha, beta, gamma)

    alphas, betas, gammas = grid.alphas(), grid.betas(), grid.gammas()
    dev_a, _, _ = cost_surface(params, scenario, alphas, beta, gamma)
    _, dev_d, _ = cost_surface(params, scenario, alpha, betas, gamma)
    _, _, dev_i = cost_surface(params, scenario, alpha, beta, gammas)

    ia, ib, ig = int(np.argmin(dev_a)), int(np.argmin(dev_d)), int(np.argmax(dev_i))
    gains = (float(here_a - dev_a[ia]), float(here_d - dev_d[ib]), float(dev_i[ig] - here_i))
    witnesses = (float(alphas[ia]), float(betas[ib]), float(gammas[ig]))
    report = VerificationReport.from_gains(gains, witnesses, slack, "grid")
    logger.debug("grid check of %s: gains %s", profile, gains)
    return report


def verify_fixed_point(profile: StrategyProfile, params: GameParams, scenario: Scenario,
                       tolerance: float = DEFAULT_FIXED_POINT_TOLERANCE) -> VerificationReport:
    alpha, beta, gamma = profile.as_tuple()
    best_alpha = br_attacker(beta, gamma, params, scenario)
    best_beta = br_defender(alpha, gamma, params, scenario)
    response = br_insider(alpha, beta, params, tolerance)

    if response.accepts(gamma):
        insider_gap, best_gamma = 0.0, gamma
    else:
        best_gamma = min(response.gammas(), key=lambda g: abs(g - gamma))
        insider_gap = abs(best_gamma - gamma)

    gains = (abs(alpha - best_alpha), abs(beta - best_beta), insider_gap)
    return VerificationReport.from_gains(gains, (best_alpha, best_beta, best_gamma),
                                         tolerance, "fixed_point")


def _insider_best(params: GameParams, scenario: Scenario, alphas, betas, gammas) -> np.ndarray:
    """Max over the gamma grid of J_I for every (beta, alpha)."""
    best = np.full((len(betas), len(alphas)), -np.inf)
    for g in gammas:
        _, _, j_i = cost_surface(params, scenario, alphas[None, :], betas[:, None], g)
        np.maximum(best, j_i, out=best)
    return best


def _scan_gamma_row(gamma: float, params: GameParams, scenario: Scenario, alphas, betas,
                    insider_best: np.ndarray, slack: float) -> List[StrategyProfile]:
    j_a, j_d, j_i = cost_surface(params, scenario, alphas[None, :], betas[:, None], gamma)
    attacker_gain = j_a - j_a.min(axis=1, keepdims=True)
    defender_gain = j_d - j_d.min(axis=0, keepdims=True)
    insider_gain = insider_best - j_i
    ok = (attacker_gain <= slack) & (defender_gain <= slack) & (insider_gain <= slack)
    rows, cols = np.nonzero(ok)
    return [StrategyProfile(float(alphas[c]), float(betas[r]), float(gamma))
            for r, c in zip(rows, cols)]


def search_grid_equilibria(params: GameParams, scenario: Scenario,
                           grid: Optional[GridSpec] = None,
                           slack: float = DEFAULT_GRID_SLACK,
                           workers: int = 1) -> List[StrategyProfile]:
    """All grid profiles from which no player gains more than ``slack``.

    Deviations range over the same grid. The scan is split by gamma value;
    with ``workers > 1`` the rows run in a thread pool and are merged in
    gamma order.
    """
    grid = grid or GridSpec()
    alphas, betas, gammas = grid.alphas(), grid.betas(), grid.gammas()
    logger.debug("grid search over %d x %d x %d profiles", len(alphas), len(betas), len(gammas))
    insider_best = _insider_best(params, scenario, alphas, betas, gammas)

    def scan(g):
        return _scan_gamma_row(float(g), params, scenario, alphas, betas, insider_best, slack)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(scan, gammas))
    else:
        rows = [scan(g) for g in gammas]
    found = [p for row in rows for p in row]
    logger.debug("grid search found %d approximate equilibria", len(found))
    return found


@dataclass(frozen=True)
class GradientBound:
    """Largest own-strategy finite-difference slope seen on a grid."""
    attacker: float
    defender: float
    insider: float

    @property
    def worst(self) -> float:
        return max(self.attacker, self.defender, self.insider)

    def slack(self, step: float) -> float:
        return self.worst * step


def gradient_bound(params: GameParams, scenario: Scenario,
                   grid: Optional[GridSpec] = None) -> GradientBound:
    grid = grid or GridSpec()
    alphas, betas, gammas = grid.alphas(), grid.betas(), grid.gammas()
    j_a, j_d, j_i = cost_surface(params, scenario, alphas[None, None, :],
                                 betas[None, :, None], gammas[:, None, None])
    slope_a = np.abs(np.diff(j_a, axis=2)) / np.diff(alphas)[None, None, :]
    slope_d = np.abs(np.diff(j_d, axis=1)) / np.diff(betas)[None, :, None]
    if len(gammas) > 1:
        slope_i = float((np.abs(np.diff(j_i, axis=0)) / np.diff(gammas)[:, None, None]).max())
    else:
        slope_i = 0.0
    return GradientBound(float(slope_a.max()) if slope_a.size else 0.0,
                         float(slope_d.max()) if slope_d.size else 0.0,
                         slope_i)
