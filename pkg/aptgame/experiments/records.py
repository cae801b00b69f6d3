"""
Record builders for the published tables and figure data.

Every builder returns a list of flat dicts whose key order is the column
order of the emitted file.
"""

from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..analysis import (
    beta_envelope,
    compare_insiders,
    gamma_switch_threshold,
    max_defender_cost,
    risk_series,
    sweep_risk_coefficient,
)
from ..equilibrium import Equilibrium, EquilibriumSet, classify
from ..model import GameParams, Scenario, StrategyProfile, cost_surface
from ..utils.logging import get_logger
from .configs import (
    TABLE5_ROWS,
    TABLE5_TOLERANCE,
    TABLE6_ROWS,
    TABLE7_CONFIGS,
    TABLE8_ROWS,
    TABLE8_SWEEP_QD,
    table5_params,
    table6_params,
    table8_params,
)

logger = get_logger(__name__)

Record = Dict[str, object]

SURFACE_COLUMNS = ("figure", "config", "slice", "alpha", "beta", "gamma", "J_A", "J_D", "J_I")
SURFACE_POINTS = 101


def fmt_point(point: Optional[Tuple[float, float, float]]) -> str:
    if point is None:
        return "none"
    return "(" + ", ".join(f"{v:g}" for v in point) + ")"


def member_near(found: EquilibriumSet, target: Tuple[float, float, float]) -> Optional[StrategyProfile]:
    """The classified profile closest to ``target``; continua are cut at its beta."""
    target_profile = StrategyProfile(*target)
    best, best_distance = None, float("inf")
    for eq in found:
        lo, hi = eq.beta_bounds()
        candidate = eq.member(min(max(target_profile.beta, lo), hi))
        distance = max(abs(a - b) for a, b in zip(candidate.as_tuple(), target))
        if distance < best_distance:
            best, best_distance = candidate, distance
    return best


def _member_columns(member: Optional[StrategyProfile]) -> Record:
    if member is None:
        return {"alpha": None, "beta": None, "gamma": None, "derived_2dp": "none"}
    return {
        "alpha": member.alpha,
        "beta": member.beta,
        "gamma": member.gamma,
        "derived_2dp": fmt_point(member.rounded(2)),
    }


def table5_records() -> List[Record]:
    records = []
    for row in TABLE5_ROWS:
        params = table5_params(row.q_A)
        found = classify(params, row.scenario, TABLE5_TOLERANCE)
        member = member_near(found, row.published)
        matched = member is not None and member.rounded(2) == tuple(round(v, 2) for v in row.published)
        record = {
            "scenario": row.scenario.value,
            "kind": row.kind,
            "q_a": row.q_A,
            "configuration": row.configuration,
            "published": fmt_point(row.published),
        }
        record.update(_member_columns(member))
        record["match"] = matched
        records.append(record)
    return records


def table6_derived_records() -> List[Record]:
    records = []
    for row in TABLE6_ROWS:
        params = table6_params(row.q_A, row.q_D, row.q_I)
        safe = [eq for eq in classify(params, Scenario.A) if eq.gamma == 0.0]
        if not row.consistent:
            logger.warning("published point %s for q_A=%g, q_D=%g, q_I=%g violates the "
                           "product law; emitting the derived equilibria",
                           fmt_point(row.published), row.q_A, row.q_D, row.q_I)
        for eq in safe:
            summary = eq.summary()
            records.append({
                "q_a": row.q_A,
                "q_d": row.q_D,
                "q_i": row.q_I,
                "configuration": row.configuration,
                "published": fmt_point(row.published),
                "published_consistent": row.consistent,
                "kind": summary["kind"],
                "alpha_or_coeff": summary["alpha_or_coeff"],
                "beta_lo": summary["beta_lo"],
                "beta_hi": summary["beta_hi"],
                "derived_2dp": fmt_point(eq.representative().rounded(2)) if eq.is_point
                else f"({summary['alpha_or_coeff']:.2f}/b, b, 0), b in "
                     f"[{summary['beta_lo']:.2f}, {summary['beta_hi']:.2f}]",
                "condition": eq.condition,
            })
    return records


def table7_comparisons():
    """(config, rows) pairs for every comparison configuration."""
    out = []
    for config in TABLE7_CONFIGS:
        params = table5_params(config.q_A)
        rows = compare_insiders(params, params, config.knowledge, TABLE5_TOLERANCE, config.label)
        out.append((config, rows))
    return out


def table7_records() -> List[Record]:
    records = []
    for config, rows in table7_comparisons():
        for row in rows:
            record = {"knowledge": config.knowledge, "q_a": config.q_A}
            record.update(row.record())
            records.append(record)
    return records


def table8_records() -> List[Record]:
    records = []
    for row in TABLE8_ROWS:
        params = table8_params(row.q_D, row.q_I)
        found = classify(params, row.scenario)
        thresholds = gamma_switch_threshold(params, row.scenario)
        if row.published is None:
            member = None
            matched = found.is_empty
        else:
            member = member_near(found, row.published)
            matched = member is not None and \
                member.rounded(2) == tuple(round(v, 2) for v in row.published)
        record = {
            "scenario": row.scenario.value,
            "q_d": row.q_D,
            "r_d": params.r_D,
            "q_i_condition": row.condition,
            "q_i": row.q_I,
            "published": fmt_point(row.published),
            "n_equilibria": len(found),
        }
        record.update(_member_columns(member))
        record["match"] = matched
        record["gamma_one_threshold"] = round(thresholds.gamma_one, 2)
        record["gamma_zero_threshold"] = (None if thresholds.gamma_zero is None
                                          else round(thresholds.gamma_zero, 2))
        records.append(record)
    return records


def _slices(figure: str, config: str, member: StrategyProfile, params: GameParams,
            scenario: Scenario, points: int) -> List[Record]:
    axis = np.linspace(1.0 / (points - 1), 1.0, points - 1)
    gammas = np.linspace(0.0, 1.0, points)
    alpha, beta, gamma = member.as_tuple()
    grids = {
        "alpha": (axis, np.full_like(axis, beta), np.full_like(axis, gamma)),
        "beta": (np.full_like(axis, alpha), axis, np.full_like(axis, gamma)),
        "gamma": (np.full_like(gammas, alpha), np.full_like(gammas, beta), gammas),
    }
    records = []
    for name, (a, b, g) in grids.items():
        j_a, j_d, j_i = cost_surface(params, scenario, a, b, g)
        for k in range(len(a)):
            records.append(dict(zip(SURFACE_COLUMNS, (
                figure, config, name, float(a[k]), float(b[k]), float(g[k]),
                float(j_a[k]), float(j_d[k]), float(j_i[k])))))
    return records


def surface_records(points: int = SURFACE_POINTS) -> List[Record]:
    """One-dimensional cost slices through the reproduced equilibria.

    Each player's own objective is sampled along its own strategy with the
    other two held at the equilibrium.
    """
    records = []
    for row in TABLE5_ROWS:
        params = table5_params(row.q_A)
        found = classify(params, row.scenario, TABLE5_TOLERANCE)
        member = member_near(found, row.published)
        if member is None:
            continue
        figure = "fig2" if row.scenario.defender_sees_insider else "fig3"
        records.extend(_slices(figure, row.label, member, params, row.scenario, points))

    for i, row in enumerate(TABLE6_ROWS, start=1):
        params = table6_params(row.q_A, row.q_D, row.q_I)
        for eq in classify(params, Scenario.A):
            if eq.gamma != 0.0:
                continue
            records.extend(_slices("fig4", f"row{i}", eq.representative(), params,
                                   Scenario.A, points))
    return records


def bar_records() -> List[Record]:
    """Per-configuration cost comparison of the two insider types."""
    records = []
    for config, rows in table7_comparisons():
        for insider in ("malicious", "inadvertent"):
            envelope = beta_envelope(rows, insider)
            own = [r for r in rows if r.insider_type == insider and not r.is_empty]
            records.append({
                "figure": "fig5-6",
                "config": config.label,
                "insider": insider,
                "beta_inf": None if envelope is None else envelope.lo,
                "beta_sup": None if envelope is None else envelope.hi,
                "J_D_max": max_defender_cost(rows, insider),
                "J_A_max": max((r.attacker_cost_range.hi for r in own), default=None),
                "J_I_max": max((r.insider_profit_range.hi for r in own), default=None),
            })
    return records


def gap_records(q_I_values: Sequence[float] = None, workers: int = 1) -> List[Record]:
    """Insider profit gaps along the risk-coefficient series, per scenario."""
    q_I_values = list(q_I_values) if q_I_values is not None else risk_series()
    records = []
    for scenario, q_D in TABLE8_SWEEP_QD.items():
        base = table8_params(q_D, q_I_values[0])
        for row in sweep_risk_coefficient(base, scenario, q_I_values, workers=workers):
            record = {"figure": "fig7", "config": f"{scenario.value} q_D={q_D:g}"}
            record.update(row.record())
            records.append(record)
    return records
