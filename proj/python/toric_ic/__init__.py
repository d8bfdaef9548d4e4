"""Intersection cohomology and Hodge numbers from toric combinatorics."""

from ._core import (
    Polytope,
    ToricError,
    count_interior_lattice_points,
    count_lattice_points,
    curve_e_polynomial,
    decomposition_summands,
    ehrhart_polynomial,
    frontier_hodge,
    geometric_genus,
    global_ih_class,
    high_weight_table,
    ih_betti_numbers,
    local_ic_polynomials,
    prime_cut,
    punctured_cone_classes,
    run,
    skeleton_count,
)

__all__ = [
    "Polytope",
    "ToricError",
    "count_interior_lattice_points",
    "count_lattice_points",
    "curve_e_polynomial",
    "decomposition_summands",
    "ehrhart_polynomial",
    "frontier_hodge",
    "geometric_genus",
    "global_ih_class",
    "high_weight_table",
    "ih_betti_numbers",
    "local_ic_polynomials",
    "prime_cut",
    "punctured_cone_classes",
    "run",
    "skeleton_count",
]
