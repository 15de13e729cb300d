"""Exact DCJ circular median of three genomes."""

from ._core import (
    BudgetExceeded,
    Genome,
    InvalidInstance,
    ParseError,
    bp_distance,
    dcj_distance,
    dij_distance,
    exhaustive_cycles,
    generate,
    generate_bounded_degree,
    median_with_bounds,
    parse_instance,
    serialize_instance,
    solve_median,
)

__all__ = [
    "BudgetExceeded",
    "Genome",
    "InvalidInstance",
    "ParseError",
    "bp_distance",
    "dcj_distance",
    "dij_distance",
    "exhaustive_cycles",
    "generate",
    "generate_bounded_degree",
    "median_with_bounds",
    "parse_instance",
    "serialize_instance",
    "solve_median",
]
