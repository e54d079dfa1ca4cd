"""Two-sided group graphs 2SCay(G; L, R): arcs g -> l^-1 g r.

The submodules hold the detail; the names below cover everyday use.
"""

from .analysis import (
    analyze,
    check_cayley_conditions,
    check_connectivity_criterion,
    check_simplified_property,
    check_transitivity,
    prime_valency_analysis,
    sabidussi_regular_subgroup,
)
from .connection import (
    ConnectionPair,
    TwoSidedCayleyGraph,
    build_graph,
    cayley_graph,
    check_derangement_conditions,
    check_property,
    lambda_map,
)
from .groups import direct_product, make_cyclic, make_dihedral, make_quaternion, make_symmetric
from .iso import coordinate_inversion_iso, iso_group_automorphism, iso_swap, iso_translate, recognize_shape
from .notation import parse_elements, parse_group

__all__ = [
    "ConnectionPair",
    "TwoSidedCayleyGraph",
    "analyze",
    "build_graph",
    "cayley_graph",
    "check_cayley_conditions",
    "check_connectivity_criterion",
    "check_derangement_conditions",
    "check_property",
    "check_simplified_property",
    "check_transitivity",
    "coordinate_inversion_iso",
    "direct_product",
    "iso_group_automorphism",
    "iso_swap",
    "iso_translate",
    "lambda_map",
    "make_cyclic",
    "make_dihedral",
    "make_quaternion",
    "make_symmetric",
    "parse_elements",
    "parse_group",
    "prime_valency_analysis",
    "recognize_shape",
    "sabidussi_regular_subgroup",
]
