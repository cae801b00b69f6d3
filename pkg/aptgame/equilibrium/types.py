"""
Equilibrium containers.
"""

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Iterator, List, Optional, Tuple

import numpy as np

from ..errors import DomainError
from ..model import GameParams, Scenario, StrategyProfile


@dataclass(frozen=True)
class DerivedRatios:
    """Cost-coefficient ratios that drive the classification.

    ``epsilon`` is None when q_I >= 1/2.
    """
    r_A: float
    r_D: float
    epsilon: Optional[float]
    p_A: float
    p_D: float

    @property
    def r_A_over_p_A(self) -> float:
        return self.r_A / self.p_A

    @property
    def r_D_over_p_D(self) -> float:
        return self.r_D / self.p_D

    @property
    def epsilon_sqrt_pd(self) -> Optional[float]:
        if self.epsilon is None:
            return None
        return self.epsilon * math.sqrt(self.p_D)

    @property
    def epsilon_over_sqrt_pd(self) -> Optional[float]:
        if self.epsilon is None:
            return None
        return self.epsilon / math.sqrt(self.p_D)

    def as_dict(self) -> Dict[str, Optional[float]]:
        return {
            "r_A": self.r_A,
            "r_D": self.r_D,
            "r_A_over_p_A": self.r_A_over_p_A,
            "r_D_over_p_D": self.r_D_over_p_D,
            "epsilon": self.epsilon,
            "epsilon_sqrt_pd": self.epsilon_sqrt_pd,
        }


class EquilibriumKind(Enum):
    POINT = "point"
    CONTINUUM = "continuum"


@dataclass(frozen=True)
class Equilibrium:
    """A single Nash equilibrium or a one-parameter family of them.

    A continuum with coefficient c and range [lo, hi] stands for every
    profile (c/beta, beta, gamma) with beta in [lo, hi].
    """
    kind: EquilibriumKind
    gamma: float
    scenario: Scenario
    condition: str
    profile: Optional[StrategyProfile] = None
    coefficient: Optional[float] = None
    beta_range: Optional[Tuple[float, float]] = None

    @classmethod
    def point(cls, alpha: float, beta: float, gamma: float, scenario: Scenario,
              condition: str) -> "Equilibrium":
        return cls(EquilibriumKind.POINT, float(gamma), scenario, condition,
                   profile=StrategyProfile(float(alpha), float(beta), float(gamma)))

    @classmethod
    def continuum(cls, coefficient: float, lo: float, hi: float, gamma: float,
                  scenario: Scenario, condition: str) -> "Equilibrium":
        return cls(EquilibriumKind.CONTINUUM, float(gamma), scenario, condition,
                   coefficient=float(coefficient), beta_range=(float(lo), float(hi)))

    @property
    def is_point(self) -> bool:
        return self.kind is EquilibriumKind.POINT

    @property
    def is_continuum(self) -> bool:
        return self.kind is EquilibriumKind.CONTINUUM

    def beta_bounds(self) -> Tuple[float, float]:
        if self.is_point:
            return (self.profile.beta, self.profile.beta)
        return self.beta_range

    def member(self, beta: float) -> StrategyProfile:
        """The family member at ``beta``; a point returns itself."""
        if self.is_point:
            return self.profile
        return StrategyProfile(self.coefficient / beta, float(beta), self.gamma)

    def representative(self) -> StrategyProfile:
        """The point, or the continuum member with the largest beta."""
        if self.is_point:
            return self.profile
        return self.member(self.beta_range[1])

    def members(self) -> List[StrategyProfile]:
        """Endpoints and midpoint of a continuum, or the point itself."""
        if self.is_point:
            return [self.profile]
        lo, hi = self.beta_range
        return [self.member(b) for b in (lo, 0.5 * (lo + hi), hi)]

    def contains(self, profile: StrategyProfile, tol: float = 1e-6) -> bool:
        return self.distance(profile) <= tol

    def distance(self, profile: StrategyProfile, resolution: int = 4001) -> float:
        """Max-norm distance from ``profile`` to this equilibrium."""
        dg = abs(profile.gamma - self.gamma)
        if self.is_point:
            p = self.profile
            return max(abs(profile.alpha - p.alpha), abs(profile.beta - p.beta), dg)
        lo, hi = self.beta_range
        betas = np.linspace(lo, hi, resolution)
        d = np.maximum(np.abs(profile.alpha - self.coefficient / betas),
                       np.abs(profile.beta - betas))
        return max(float(d.min()), dg)

    def summary(self) -> Dict[str, object]:
        """One row of the equilibria table."""
        if self.is_point:
            alpha_or_coeff = self.profile.alpha
            lo = hi = self.profile.beta
        else:
            alpha_or_coeff = self.coefficient
            lo, hi = self.beta_range
        return {
            "scenario": self.scenario.value,
            "kind": self.kind.value,
            "gamma": self.gamma,
            "alpha_or_coeff": alpha_or_coeff,
            "beta_lo": lo,
            "beta_hi": hi,
            "condition": self.condition,
        }

    def describe(self) -> str:
        if self.is_point:
            a, b, g = self.profile.rounded(4)
            return f"({a:g}, {b:g}, {g:g})"
        lo, hi = self.beta_range
        return f"({self.coefficient:.4g}/b, b, {self.gamma:g}), b in [{lo:.4g}, {hi:.4g}]"


@dataclass
class EquilibriumSet:
    """Every equilibrium the classifier found; empty is a legal outcome."""
    equilibria: List[Equilibrium]
    ratios: DerivedRatios
    matched_conditions: List[str] = field(default_factory=list)
    scenario: Optional[Scenario] = None
    params: Optional[GameParams] = None

    def __iter__(self) -> Iterator[Equilibrium]:
        return iter(self.equilibria)

    def __len__(self) -> int:
        return len(self.equilibria)

    def __bool__(self) -> bool:
        return bool(self.equilibria)

    @property
    def is_empty(self) -> bool:
        return not self.equilibria

    def gammas(self) -> List[float]:
        return sorted({eq.gamma for eq in self.equilibria})

    def with_gamma(self, gamma: float) -> List[Equilibrium]:
        return [eq for eq in self.equilibria if eq.gamma == gamma]

    def distance(self, profile: StrategyProfile) -> float:
        if not self.equilibria:
            return math.inf
        return min(eq.distance(profile) for eq in self.equilibria)

    def describe(self) -> str:
        if not self.equilibria:
            return "none"
        return "; ".join(eq.describe() for eq in self.equilibria)


def sample_continuum(eq: Equilibrium, n: int) -> List[StrategyProfile]:
    """``n`` evenly spaced members of a continuum, endpoints included."""
    if not eq.is_continuum:
        raise DomainError("cannot sample a point equilibrium",
                          operation="sample_continuum", value=eq.describe())
    if n < 2:
        raise DomainError(f"n must be >= 2, got {n!r}", operation="sample_continuum", value=n)
    lo, hi = eq.beta_range
    return [eq.member(float(b)) for b in np.linspace(lo, hi, int(n))]
