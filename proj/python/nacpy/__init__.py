"""NAC-colorings of graphs: search, monochromatic classes and the 3-SAT reduction."""

from ._core import (
    CheckStats,
    CnfFormula,
    ColoringStream,
    ConsistencyError,
    ContractError,
    Graph,
    OracleLimitError,
    ParseError,
    Reduction,
    SearchTimeout,
    build_reduction,
    count,
    enumerate,
    enumerate_brute_force,
    exists,
    fixtures,
    from_graph6,
    is_nac_coloring,
    iter_colorings,
    monochromatic_classes,
    parse_dimacs,
    parse_edge_list,
    sat_brute_force,
    triangle_components,
)

__all__ = [
    "CheckStats",
    "CnfFormula",
    "ColoringStream",
    "ConsistencyError",
    "ContractError",
    "Graph",
    "OracleLimitError",
    "ParseError",
    "Reduction",
    "SearchTimeout",
    "build_reduction",
    "count",
    "enumerate",
    "enumerate_brute_force",
    "exists",
    "fixtures",
    "from_graph6",
    "is_nac_coloring",
    "iter_colorings",
    "monochromatic_classes",
    "parse_dimacs",
    "parse_edge_list",
    "sat_brute_force",
    "triangle_components",
]
