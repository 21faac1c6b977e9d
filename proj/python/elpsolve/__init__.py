"""Epistemic logic program solving.

World-view existence for ground ELPs, decided either by an exhaustive
reference enumeration or by dynamic programming over tree decompositions,
plus cautious formula evaluation and instance generators.
"""

from ._core import (
    Program,
    evaluate_formula,
    generate_random,
    generate_scholarship,
    parse,
    solve,
    world_views,
    wv_exists,
)

__all__ = [
    "Program",
    "evaluate_formula",
    "generate_random",
    "generate_scholarship",
    "parse",
    "solve",
    "world_views",
    "wv_exists",
]
