"""
Strategy grids for brute-force checks.
"""

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from ..errors import ValidationError

DEFAULT_STEP = 1.0 / 200
DEFAULT_GAMMA_STEP = 0.05


def _descending_from_one(step: float, minimum: float) -> np.ndarray:
    n = int(np.floor((1.0 - minimum) / step + 1e-9))
    values = np.round(1.0 - step * np.arange(n + 1), 12)
    return np.sort(values[values > 0.0])


@dataclass(frozen=True)
class GridSpec:
    """Discretisation of (alpha, beta, gamma).

    alpha and beta grids run down from 1 in ``step`` increments to their
    minimum (default ``step``); the gamma grid is ``gamma_values`` or
    0, gamma_step, ..., 1.
    """
    step: float = DEFAULT_STEP
    alpha_min: Optional[float] = None
    beta_min: Optional[float] = None
    gamma_values: Optional[Sequence[float]] = None
    gamma_step: float = DEFAULT_GAMMA_STEP

    def __post_init__(self):
        if not 0.0 < self.step <= 0.5:
            raise ValidationError(f"grid step {self.step!r} is not in (0, 0.5]",
                                  field="grid-step", value=self.step)
        for name in ("alpha_min", "beta_min"):
            value = getattr(self, name)
            if value is not None and not 0.0 < value <= 1.0:
                raise ValidationError(f"{name} {value!r} is not in (0, 1]", field=name, value=value)
        if self.gamma_values is not None:
            values = list(self.gamma_values)
            if not values:
                raise ValidationError("gamma grid is empty", field="gamma_values")
            if any(not 0.0 <= g <= 1.0 for g in values):
                raise ValidationError("gamma grid values must lie in [0, 1]",
                                      field="gamma_values", value=values)
        elif not 0.0 < self.gamma_step <= 1.0:
            raise ValidationError(f"gamma step {self.gamma_step!r} is not in (0, 1]",
                                  field="gamma_step", value=self.gamma_step)

    def alphas(self) -> np.ndarray:
        return _descending_from_one(self.step, self.alpha_min or self.step)

    def betas(self) -> np.ndarray:
        return _descending_from_one(self.step, self.beta_min or self.step)

    def gammas(self) -> np.ndarray:
        if self.gamma_values is not None:
            return np.unique(np.asarray(self.gamma_values, dtype=float))
        n = int(round(1.0 / self.gamma_step))
        if abs(n * self.gamma_step - 1.0) < 1e-9:
            return np.round(np.linspace(0.0, 1.0, n + 1), 12)
        return np.append(np.round(np.arange(0.0, 1.0, self.gamma_step), 12), 1.0)

    @property
    def size(self) -> int:
        return len(self.alphas()) * len(self.betas()) * len(self.gammas())
