"""
Compromised-resource dynamics.

The attacker compromises clean resources at rate alpha and the defender
recovers compromised ones at rate beta:

    dx/dt = alpha * (1 - x) - beta * x,    x(0) = 0

with closed-form solution x(t) = alpha/(alpha+beta) * (1 - exp(-(alpha+beta) t)).
"""

import math
from dataclasses import dataclass
from typing import Callable, Dict

import numpy as np

from ..errors import DomainError
from .params import StrategyProfile


@dataclass(frozen=True)
class Trajectory:
    """Sampled resource state; ``times`` and ``states`` have equal length."""
    times: np.ndarray
    states: np.ndarray

    def __len__(self) -> int:
        return len(self.times)

    def records(self):
        return [{"t": float(t), "x": float(x)} for t, x in zip(self.times, self.states)]


def steady_state(profile: StrategyProfile) -> float:
    return profile.alpha / (profile.alpha + profile.beta)


def resource_state(profile: StrategyProfile, t: float) -> float:
    """Exact compromised fraction x(t)."""
    if t < 0:
        raise DomainError(f"time must be >= 0, got {t!r}", operation="resource_state", value=t)
    rate = profile.alpha + profile.beta
    return -(profile.alpha / rate) * math.expm1(-rate * t)


def resource_states(profile: StrategyProfile, times: np.ndarray) -> np.ndarray:
    """Vectorised ``resource_state`` over an array of non-negative times."""
    times = np.asarray(times, dtype=float)
    if np.any(times < 0):
        raise DomainError("times must be >= 0", operation="resource_states")
    rate = profile.alpha + profile.beta
    return -(profile.alpha / rate) * np.expm1(-rate * times)


def trajectory(profile: StrategyProfile, t_end: float, n_points: int) -> Trajectory:
    if t_end <= 0:
        raise DomainError(f"t_end must be > 0, got {t_end!r}", operation="trajectory", value=t_end)
    if n_points < 2:
        raise DomainError(f"n_points must be >= 2, got {n_points!r}",
                          operation="trajectory", value=n_points)
    times = np.linspace(0.0, float(t_end), int(n_points))
    return Trajectory(times=times, states=resource_states(profile, times))


def _drift(x: float, alpha: float, beta: float) -> float:
    return alpha * (1.0 - x) - beta * x


def _euler_step(x: float, h: float, alpha: float, beta: float) -> float:
    return x + h * _drift(x, alpha, beta)


def _rk4_step(x: float, h: float, alpha: float, beta: float) -> float:
    k1 = _drift(x, alpha, beta)
    k2 = _drift(x + 0.5 * h * k1, alpha, beta)
    k3 = _drift(x + 0.5 * h * k2, alpha, beta)
    k4 = _drift(x + h * k3, alpha, beta)
    return x + h * (k1 + 2.0 * k2 + 2.0 * k3 + k4) / 6.0


_STEPPERS: Dict[str, Callable[[float, float, float, float], float]] = {
    "euler": _euler_step,
    "rk4": _rk4_step,
}


def integrate_resource_state(profile: StrategyProfile, t_end: float, step: float,
                             method: str = "euler") -> Trajectory:
    """Step the differential equation numerically from x(0) = 0.

    Independent of the closed form; used to cross-check it. The final step
    is shortened so the trajectory ends exactly at ``t_end``.
    """
    if t_end <= 0:
        raise DomainError(f"t_end must be > 0, got {t_end!r}",
                          operation="integrate_resource_state", value=t_end)
    if step <= 0:
        raise DomainError(f"step must be > 0, got {step!r}",
                          operation="integrate_resource_state", value=step)
    try:
        stepper = _STEPPERS[method]
    except KeyError:
        raise DomainError(f"unknown integration method '{method}'",
                          operation="integrate_resource_state", value=method) from None

    n = int(math.ceil(t_end / step - 1e-9))
    times = np.empty(n + 1)
    states = np.empty(n + 1)
    times[0] = 0.0
    states[0] = 0.0
    alpha, beta = profile.alpha, profile.beta
    x = 0.0
    for i in range(n):
        h = min(step, t_end - i * step)
        x = stepper(x, h, alpha, beta)
        times[i + 1] = min((i + 1) * step, t_end)
        states[i + 1] = x
    return Trajectory(times=times, states=states)
