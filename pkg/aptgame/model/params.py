"""
Game coefficients, strategy profiles and knowledge scenarios.
"""

import math
from dataclasses import dataclass, asdict, replace
from enum import Enum
from typing import Dict, Tuple

from ..errors import ValidationError
from ..utils.logging import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class GameParams:
    """The six model coefficients.

    p_A, q_A weight the attacker's detection risk and attack cost, p_D, q_D
    the defender's compromise and defense cost, p_I, q_I the insider's
    share and risk. Build instances through ``validate_params``.
    """
    p_A: float
    q_A: float
    p_D: float
    q_D: float
    p_I: float
    q_I: float

    def with_q_I(self, q_I: float) -> "GameParams":
        return replace(self, q_I=float(q_I))

    def with_q_A(self, q_A: float) -> "GameParams":
        return replace(self, q_A=float(q_A))

    def as_dict(self) -> Dict[str, float]:
        return asdict(self)

    @property
    def r_A(self) -> float:
        return self.p_A / self.q_A

    @property
    def r_D(self) -> float:
        return self.p_D / self.q_D


@dataclass(frozen=True)
class StrategyProfile:
    """One joint strategy: attack rate, defense rate, insider leakage level."""
    alpha: float
    beta: float
    gamma: float

    def as_tuple(self) -> Tuple[float, float, float]:
        return (self.alpha, self.beta, self.gamma)

    def rounded(self, digits: int = 2) -> Tuple[float, float, float]:
        return tuple(round(v, digits) for v in self.as_tuple())


class Scenario(Enum):
    """Who knows about the insider, and what kind of insider it is."""
    A = "A"
    B = "B"
    C = "C"
    D = "D"

    @property
    def attacker_sees_insider(self) -> bool:
        # Only a malicious insider sells information to the attacker
        return self in (Scenario.A, Scenario.C)

    @property
    def defender_sees_insider(self) -> bool:
        return self in (Scenario.A, Scenario.B)

    @property
    def insider_type(self) -> str:
        return "malicious" if self.attacker_sees_insider else "inadvertent"

    @property
    def knowledge(self) -> str:
        return "known" if self.defender_sees_insider else "unknown"

    def attacker_gamma(self, gamma: float) -> float:
        return gamma if self.attacker_sees_insider else 0.0

    def defender_gamma(self, gamma: float) -> float:
        return gamma if self.defender_sees_insider else 0.0

    @classmethod
    def parse(cls, tag: str) -> "Scenario":
        try:
            return cls(str(tag).strip().upper())
        except ValueError:
            raise ValidationError(
                f"unknown scenario '{tag}', expected one of A, B, C, D",
                field="scenario", value=tag,
            ) from None

    @classmethod
    def pair(cls, knowledge: str) -> Tuple["Scenario", "Scenario"]:
        """(malicious, inadvertent) scenarios for a knowledge level."""
        if knowledge == "known":
            return (cls.A, cls.B)
        if knowledge == "unknown":
            return (cls.C, cls.D)
        raise ValidationError(
            f"unknown knowledge '{knowledge}', expected 'known' or 'unknown'",
            field="knowledge", value=knowledge,
        )


def _as_float(name: str, raw) -> float:
    try:
        value = float(raw)
    except (TypeError, ValueError):
        raise ValidationError(f"{name} must be a number, got {raw!r}", field=name, value=raw) from None
    if not math.isfinite(value):
        raise ValidationError(f"{name} must be finite, got {raw!r}", field=name, value=raw)
    return value


def _open_unit(name: str, value: float) -> None:
    if not 0.0 < value < 1.0:
        raise ValidationError(f"{name} = {value!r} is not in the open interval (0, 1)",
                              field=name, value=value)


def validate_params(p_A, q_A, p_D, q_D, p_I, q_I, *,
                    allow_pd_above_qd: bool = False) -> GameParams:
    """Check every coefficient bound and return the frozen parameter set.

    ``allow_pd_above_qd`` relaxes only the p_D <= q_D ordering; it is used to
    reproduce published configurations where r_D exceeds one.
    """
    values = {name: _as_float(name, raw) for name, raw in
              (("p_A", p_A), ("q_A", q_A), ("p_D", p_D),
               ("q_D", q_D), ("p_I", p_I), ("q_I", q_I))}

    for name in ("p_A", "p_D", "p_I"):
        _open_unit(name, values[name])
    for name in ("q_A", "q_D"):
        if values[name] <= 0.0:
            raise ValidationError(f"{name} = {values[name]!r} must be > 0",
                                  field=name, value=values[name])
    if values["q_I"] < 0.0:
        raise ValidationError(f"q_I = {values['q_I']!r} must be >= 0",
                              field="q_I", value=values["q_I"])

    if values["p_D"] > values["q_D"]:
        if not allow_pd_above_qd:
            raise ValidationError(
                f"p_D = {values['p_D']!r} > q_D = {values['q_D']!r}; p_D <= q_D is required",
                field="p_D", value=values["p_D"],
            )
        logger.warning("p_D = %g exceeds q_D = %g; classification outside the proven range",
                       values["p_D"], values["q_D"])

    return GameParams(**values)


def validate_profile(alpha, beta, gamma) -> StrategyProfile:
    """Check a strategy profile against its ranges."""
    a = _as_float("alpha", alpha)
    b = _as_float("beta", beta)
    g = _as_float("gamma", gamma)
    if not 0.0 < a <= 1.0:
        raise ValidationError(f"alpha = {a!r} is not in (0, 1]", field="alpha", value=a)
    if not 0.0 < b <= 1.0:
        raise ValidationError(f"beta = {b!r} is not in (0, 1]", field="beta", value=b)
    if not 0.0 <= g <= 1.0:
        raise ValidationError(f"gamma = {g!r} is not in [0, 1]", field="gamma", value=g)
    return StrategyProfile(a, b, g)
