"""
Closed-form Nash equilibrium classification.

Equilibria with gamma* = 1 depend on the scenario through the effective
attacker and defender ratios at gamma = 1 (r_A/p_A or r_A, r_D/p_D or r_D).
Equilibria with gamma* = 0 are the same in all four scenarios and depend on
r_A, r_D only. The insider plays gamma = 1 exactly when

    (beta/(alpha+beta))^2 >= 1/2 + q_I

which on a point with beta = 1 reads q_I <= t_one(alpha).
"""

import math
from typing import List, Optional

from ..best_response import attacker_ratio, defender_ratio
from ..model import GameParams, Scenario
from ..utils.logging import get_logger
from .types import DerivedRatios, Equilibrium, EquilibriumSet

logger = get_logger(__name__)

DEFAULT_TOLERANCE = 1e-9


def t_one(x: float) -> float:
    """Largest q_I at which the insider still plays gamma=1 against (x, 1)."""
    return (1.0 / (x + 1.0)) ** 2 - 0.5


def _indifference_factor(q_I: float) -> Optional[float]:
    k = 1.0 / math.sqrt(0.5 + q_I) - 1.0
    return k if k > 0.0 else None


def derived_ratios(params: GameParams) -> DerivedRatios:
    k = _indifference_factor(params.q_I)
    epsilon = math.sqrt(params.r_D / k) if k is not None else None
    return DerivedRatios(r_A=params.r_A, r_D=params.r_D, epsilon=epsilon,
                         p_A=params.p_A, p_D=params.p_D)


def indifference_beta(coefficient: float, q_I: float) -> Optional[float]:
    """Beta at which the insider is indifferent on the curve alpha*beta = c."""
    k = _indifference_factor(q_I)
    if k is None:
        return None
    return math.sqrt(coefficient / k)


def _labels(scenario: Scenario):
    a = "r_A/p_A" if scenario.attacker_sees_insider else "r_A"
    d = "r_D/p_D" if scenario.defender_sees_insider else "r_D"
    return a, d


class _Classifier:
    """Evaluates the condition table for one parameter set and scenario."""

    def __init__(self, params: GameParams, scenario: Scenario, tolerance: float,
                 ratio_tolerance: float):
        self.params = params
        self.scenario = scenario
        self.tol = tolerance
        self.ratio_tol = ratio_tolerance
        self.equilibria: List[Equilibrium] = []
        self.conditions: List[str] = []

    def close(self, x: float, y: float) -> bool:
        return math.isclose(x, y, rel_tol=self.ratio_tol, abs_tol=0.0)

    def less(self, x: float, y: float) -> bool:
        return x < y and not self.close(x, y)

    def at_most_one(self, x: float) -> bool:
        return x <= 1.0 or self.close(x, 1.0)

    def q_at_most(self, threshold: float) -> bool:
        return self.params.q_I <= threshold + self.tol

    def q_at_least(self, threshold: float) -> bool:
        return self.params.q_I >= threshold - self.tol

    def emit(self, eq: Equilibrium) -> None:
        for seen in self.equilibria:
            if seen.kind is eq.kind and seen.gamma == eq.gamma and \
                    seen.distance(eq.representative()) <= self.tol and \
                    eq.distance(seen.representative()) <= self.tol:
                return
        logger.debug("scenario %s matched: %s -> %s",
                     self.scenario.value, eq.condition, eq.describe())
        self.equilibria.append(eq)
        self.conditions.append(eq.condition)

    def risky_families(self) -> None:
        a1 = attacker_ratio(self.params, self.scenario, 1.0)
        d1 = defender_ratio(self.params, self.scenario, 1.0)
        a_label, d_label = _labels(self.scenario)
        threshold = t_one(a1)

        if not self.q_at_most(threshold):
            return

        if self.close(a1, d1) and self.at_most_one(d1):
            lo = indifference_beta(d1, self.params.q_I)
            if lo is not None:
                self.emit(Equilibrium.continuum(
                    min(d1, 1.0), min(lo, 1.0), 1.0, 1.0, self.scenario,
                    f"gamma=1: {a_label} = {d_label} <= 1, q_I <= t1({a_label})",
                ))
        elif self.at_most_one(a1) and self.less(a1, d1):
            self.emit(Equilibrium.point(
                min(a1, 1.0), 1.0, 1.0, self.scenario,
                f"gamma=1: {a_label} <= 1, {a_label} < {d_label}, q_I <= t1({a_label})",
            ))

    def safe_families(self) -> None:
        r_A, r_D = self.params.r_A, self.params.r_D
        threshold = t_one(r_A)

        if self.close(r_A, r_D) and self.at_most_one(r_D):
            r_D = min(r_D, 1.0)
            if self.params.q_I > threshold + self.tol:
                self.emit(Equilibrium.continuum(
                    r_D, r_D, 1.0, 0.0, self.scenario,
                    "gamma=0: r_A = r_D <= 1, q_I > t1(r_A)",
                ))
            else:
                hi = indifference_beta(r_D, self.params.q_I)
                hi = 1.0 if hi is None else min(hi, 1.0)
                self.emit(Equilibrium.continuum(
                    r_D, min(r_D, hi), hi, 0.0, self.scenario,
                    "gamma=0: r_A = r_D <= 1, q_I <= t1(r_A)",
                ))
            return

        if self.at_most_one(r_A) and self.less(r_A, r_D) and self.q_at_least(threshold):
            self.emit(Equilibrium.point(
                min(r_A, 1.0), 1.0, 0.0, self.scenario,
                "gamma=0: r_A <= 1, r_A < r_D, q_I >= t1(r_A)",
            ))
        if self.at_most_one(r_D) and self.less(r_D, r_A):
            self.emit(Equilibrium.point(
                1.0, min(r_D, 1.0), 0.0, self.scenario,
                "gamma=0: r_D <= 1, r_D < r_A",
            ))
        if r_A > 1.0 and r_D > 1.0:
            self.emit(Equilibrium.point(
                1.0, 1.0, 0.0, self.scenario,
                "gamma=0: r_A > 1, r_D > 1",
            ))


def classify(params: GameParams, scenario: Scenario,
             tolerance: float = DEFAULT_TOLERANCE,
             ratio_tolerance: Optional[float] = None) -> EquilibriumSet:
    """Return every Nash equilibrium of the game in ``scenario``.

    Ratio equalities are tested with relative ``ratio_tolerance`` (defaults
    to ``tolerance``), q_I thresholds with absolute ``tolerance``. An empty
    set is a valid outcome.
    """
    if ratio_tolerance is None:
        ratio_tolerance = tolerance
    c = _Classifier(params, scenario, tolerance, ratio_tolerance)
    c.risky_families()
    c.safe_families()
    if not c.equilibria:
        logger.debug("scenario %s: no equilibrium for %s", scenario.value, params)
    return EquilibriumSet(equilibria=c.equilibria, ratios=derived_ratios(params),
                          matched_conditions=c.conditions, scenario=scenario, params=params)
