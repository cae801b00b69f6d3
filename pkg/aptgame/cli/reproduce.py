"""
``reproduce`` targets: the published tables and the data behind the figures.
"""

from typing import Callable, Dict, List

from ..experiments import (
    SURFACE_COLUMNS,
    TABLE5_TOLERANCE,
    bar_records,
    gap_records,
    surface_records,
    table5_records,
    table6_derived_records,
    table7_records,
    table8_records,
)
from ..utils.config import RunConfig
from .output import CommandOutput, Table

TABLE5_COLUMNS = ("scenario", "kind", "q_a", "configuration", "published",
                  "alpha", "beta", "gamma", "derived_2dp", "match")
TABLE6_COLUMNS = ("q_a", "q_d", "q_i", "configuration", "published", "published_consistent",
                  "kind", "alpha_or_coeff", "beta_lo", "beta_hi", "derived_2dp", "condition")
TABLE7_COLUMNS = ("knowledge", "q_a", "configuration", "insider", "scenario", "equilibrium",
                  "beta_lo", "beta_hi", "J_D_lo", "J_D_hi", "J_A_lo", "J_A_hi",
                  "J_I_lo", "J_I_hi")
TABLE8_COLUMNS = ("scenario", "q_d", "r_d", "q_i_condition", "q_i", "published", "n_equilibria",
                  "alpha", "beta", "gamma", "derived_2dp", "match",
                  "gamma_one_threshold", "gamma_zero_threshold")
BAR_COLUMNS = ("figure", "config", "insider", "beta_inf", "beta_sup",
               "J_D_max", "J_A_max", "J_I_max")
GAP_COLUMNS = ("figure", "config", "q_i", "scenario", "n_equilibria", "gammas", "profit_gap")


def _table5(config: RunConfig) -> List[Table]:
    return [Table("table5", TABLE5_COLUMNS, table5_records(),
                  [f"ratio_tolerance={TABLE5_TOLERANCE:g}"])]


def _table6(config: RunConfig) -> List[Table]:
    return [Table("table6-derived", TABLE6_COLUMNS, table6_derived_records(),
                  ["warning=published points of rows 1-4 violate alpha*beta=r_D;"
                   " formula-derived equilibria are listed instead"])]


def _table7(config: RunConfig) -> List[Table]:
    return [Table("table7", TABLE7_COLUMNS, table7_records(),
                  [f"ratio_tolerance={TABLE5_TOLERANCE:g}"])]


def _table8(config: RunConfig) -> List[Table]:
    return [Table("table8", TABLE8_COLUMNS, table8_records())]


def _fig_data(config: RunConfig) -> List[Table]:
    return [
        Table("fig-surfaces", SURFACE_COLUMNS, surface_records()),
        Table("fig-bars", BAR_COLUMNS, bar_records()),
        Table("fig-gaps", GAP_COLUMNS, gap_records(workers=config.workers)),
    ]


TARGETS: Dict[str, Callable[[RunConfig], List[Table]]] = {
    "table5": _table5,
    "table6-derived": _table6,
    "table7": _table7,
    "table8": _table8,
    "fig-data": _fig_data,
}


def cmd_reproduce(target: str, config: RunConfig) -> CommandOutput:
    tables = TARGETS[target](config)
    return CommandOutput(f"reproduce {target}", tables, {"target": target})
