"""
Run configuration.

A config file holds flat ``key = value`` lines; ``#`` starts a comment and
keys are the long flag names without dashes (``pa``, ``grid-step``, ...).
Values from flags override values from the file. Identical merged
configurations produce identical output.
"""

from dataclasses import dataclass, fields
from typing import Any, Callable, Dict, Mapping, Optional

from ..errors import ConfigError, ValidationError
from ..model import GameParams, Scenario, StrategyProfile, validate_params, validate_profile
from ..oracle import DEFAULT_GAMMA_STEP, DEFAULT_GRID_SLACK, DEFAULT_STEP, GridSpec

PARAM_KEYS = {"pa": "p_A", "qa": "q_A", "pd": "p_D", "qd": "q_D", "pi": "p_I", "qi": "q_I"}
PROFILE_KEYS = ("alpha", "beta", "gamma")
FORMATS = ("csv", "json")
KNOWLEDGE = ("known", "unknown")


def _positive_int(text) -> int:
    value = int(text)
    if value < 1:
        raise ValueError(f"{text!r} is not a positive integer")
    return value


KEY_TYPES: Dict[str, Callable[[Any], Any]] = {
    "scenario": str,
    "pa": float, "qa": float, "pd": float, "qd": float, "pi": float, "qi": float,
    "qa-inadvertent": float,
    "alpha": float, "beta": float, "gamma": float,
    "at-beta": float,
    "grid-step": float,
    "gamma-step": float,
    "slack": float,
    "tol": float,
    "ratio-tol": float,
    "horizon": float,
    "n-steps": _positive_int,
    "t-end": float,
    "points": _positive_int,
    "samples": _positive_int,
    "workers": _positive_int,
    "format": str,
    "out": str,
    "knowledge": str,
}

DEFAULTS: Dict[str, Any] = {
    "grid-step": DEFAULT_STEP,
    "gamma-step": DEFAULT_GAMMA_STEP,
    "slack": DEFAULT_GRID_SLACK,
    "horizon": 1000.0,
    "n-steps": 10 ** 6,
    "t-end": 10.0,
    "points": 101,
    "samples": 5,
    "workers": 1,
    "format": "csv",
}


@dataclass(frozen=True)
class RunConfig:
    """Validated inputs of one CLI run; ``None`` marks an absent value."""
    scenario: Optional[Scenario] = None
    params: Optional[GameParams] = None
    missing_params: tuple = ()
    q_A_inadvertent: Optional[float] = None
    profile: Optional[StrategyProfile] = None
    missing_profile: tuple = ()
    at_beta: Optional[float] = None
    grid_step: float = DEFAULT_STEP
    gamma_step: float = DEFAULT_GAMMA_STEP
    slack: float = DEFAULT_GRID_SLACK
    tol: Optional[float] = None
    ratio_tol: Optional[float] = None
    horizon: float = 1000.0
    n_steps: int = 10 ** 6
    t_end: float = 10.0
    points: int = 101
    samples: int = 5
    workers: int = 1
    output_format: str = "csv"
    out: Optional[str] = None
    knowledge: Optional[str] = None

    def require_scenario(self) -> Scenario:
        if self.scenario is None:
            raise ConfigError("missing required value --scenario", field="scenario")
        return self.scenario

    def require_params(self) -> GameParams:
        if self.params is None:
            flags = ", ".join(f"--{k}" for k in self.missing_params)
            raise ConfigError(f"missing required value(s) {flags}", field=self.missing_params[0])
        return self.params

    def require_profile(self) -> StrategyProfile:
        if self.profile is None:
            flags = ", ".join(f"--{k}" for k in self.missing_profile)
            raise ConfigError(f"missing required value(s) {flags}", field=self.missing_profile[0])
        return self.profile

    def grid(self) -> GridSpec:
        return GridSpec(step=self.grid_step, gamma_step=self.gamma_step)

    def tolerance(self, default: float) -> float:
        return default if self.tol is None else self.tol

    def ratio_tolerance(self, default: float) -> float:
        """Relative tolerance for ratio equalities; falls back to --tol."""
        return self.tolerance(default) if self.ratio_tol is None else self.ratio_tol

    def metadata(self) -> Dict[str, Any]:
        """Ordered, deterministic summary of every set value."""
        meta: Dict[str, Any] = {}
        for f in fields(self):
            value = getattr(self, f.name)
            if value is None or f.name in ("missing_params", "missing_profile", "out"):
                continue
            if isinstance(value, Scenario):
                value = value.value
            elif isinstance(value, GameParams):
                meta.update(value.as_dict())
                continue
            elif isinstance(value, StrategyProfile):
                meta.update(alpha=value.alpha, beta=value.beta, gamma=value.gamma)
                continue
            meta[f.name] = value
        return meta


def _strip_comment(text: str) -> str:
    return text.split("#", 1)[0].strip()


def load_config_file(path: str) -> Dict[str, str]:
    """Read ``key = value`` lines; unknown keys and malformed lines are errors."""
    try:
        with open(path, "r", encoding="utf-8") as f:
            lines = f.readlines()
    except OSError as exc:
        raise ConfigError(f"cannot read config file: {exc.strerror}", field="config",
                          value=path).with_context(source=path).with_inner_exception(exc)

    values: Dict[str, str] = {}
    for line_no, raw in enumerate(lines, start=1):
        text = _strip_comment(raw)
        if not text:
            continue
        if "=" not in text:
            raise ConfigError(f"expected 'key = value', got {raw.strip()!r}",
                              field=None, value=raw.strip()).with_context(source=path, line=line_no)
        key, value = (part.strip() for part in text.split("=", 1))
        if key not in KEY_TYPES:
            raise ConfigError(f"unknown key '{key}'", field=key,
                              value=value).with_context(source=path, line=line_no)
        if not value:
            raise ConfigError(f"empty value for '{key}'", field=key).with_context(
                source=path, line=line_no)
        values[key] = value
    return values


def _convert(key: str, raw: Any, source: str) -> Any:
    if not isinstance(raw, str):
        return raw
    try:
        return KEY_TYPES[key](raw)
    except ValueError:
        raise ConfigError(f"cannot parse --{key} value {raw!r}", field=key,
                          value=raw).with_context(source=source) from None


def _flag_error(err: ValidationError, names: Mapping[str, str]) -> ConfigError:
    flag = names.get(err.field, err.field)
    return ConfigError(f"--{flag}: {err.message}", field=flag, value=err.context.value)


def merge_config(file_values: Optional[Mapping[str, str]] = None,
                 flag_values: Optional[Mapping[str, Any]] = None,
                 config_source: str = "<config>",
                 command_defaults: Optional[Mapping[str, Any]] = None,
                 allow_pd_above_qd: bool = False) -> RunConfig:
    merged: Dict[str, Any] = dict(DEFAULTS)
    merged.update(command_defaults or {})
    for source, values in ((config_source, file_values or {}), ("<flags>", flag_values or {})):
        for key, raw in values.items():
            if raw is None:
                continue
            if key not in KEY_TYPES:
                raise ConfigError(f"unknown key '{key}'", field=key).with_context(source=source)
            merged[key] = _convert(key, raw, source)

    scenario = None
    if "scenario" in merged:
        try:
            scenario = Scenario.parse(merged["scenario"])
        except ValidationError as err:
            raise _flag_error(err, {}) from err

    missing_params = tuple(k for k in PARAM_KEYS if k not in merged)
    params = None
    if not missing_params:
        try:
            params = validate_params(*(merged[k] for k in PARAM_KEYS),
                                     allow_pd_above_qd=allow_pd_above_qd)
        except ValidationError as err:
            raise _flag_error(err, {v: k for k, v in PARAM_KEYS.items()}) from err

    missing_profile = tuple(k for k in PROFILE_KEYS if k not in merged)
    profile = None
    if not missing_profile:
        try:
            profile = validate_profile(*(merged[k] for k in PROFILE_KEYS))
        except ValidationError as err:
            raise _flag_error(err, {}) from err

    output_format = merged["format"]
    if output_format not in FORMATS:
        raise ConfigError(f"--format must be one of {', '.join(FORMATS)}", field="format",
                          value=output_format)
    knowledge = merged.get("knowledge")
    if knowledge is not None and knowledge not in KNOWLEDGE:
        raise ConfigError(f"--knowledge must be one of {', '.join(KNOWLEDGE)}",
                          field="knowledge", value=knowledge)

    for key in ("slack", "horizon", "t-end"):
        if not merged[key] > 0:
            raise ConfigError(f"--{key} must be > 0", field=key, value=merged[key])
    for key in ("tol", "ratio-tol"):
        if key in merged and not merged[key] >= 0:
            raise ConfigError(f"--{key} must be >= 0", field=key, value=merged[key])
    at_beta = merged.get("at-beta")
    if at_beta is not None and not 0.0 < at_beta <= 1.0:
        raise ConfigError("--at-beta must be in (0, 1]", field="at-beta", value=at_beta)

    config = RunConfig(
        scenario=scenario,
        params=params,
        missing_params=missing_params,
        q_A_inadvertent=merged.get("qa-inadvertent"),
        profile=profile,
        missing_profile=missing_profile,
        at_beta=at_beta,
        grid_step=merged["grid-step"],
        gamma_step=merged["gamma-step"],
        slack=merged["slack"],
        tol=merged.get("tol"),
        ratio_tol=merged.get("ratio-tol"),
        horizon=merged["horizon"],
        n_steps=merged["n-steps"],
        t_end=merged["t-end"],
        points=merged["points"],
        samples=merged["samples"],
        workers=merged["workers"],
        output_format=output_format,
        out=merged.get("out"),
        knowledge=knowledge,
    )
    try:
        config.grid()
    except ValidationError as err:
        raise _flag_error(err, {"grid-step": "grid-step", "gamma_step": "gamma-step"}) from err
    return config
