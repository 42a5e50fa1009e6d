"""Separator-based, space-metered algorithms for embedded planar graphs."""

from .gadget import GadgetMap, planarize_with_gadgets, sparse_crossing_reach
from .generators import GeneratorSpec, generate
from .graph import (
    BLUE,
    PART_A,
    PART_B,
    RED,
    Arc,
    DrawnGraph,
    DualGraph,
    EmbeddingError,
    GraphError,
    PlanarGraph,
    build_directed_dual,
    induced_subgraph,
    trace_faces,
    validate,
)
from .matching import (
    CapacityDemandGraph,
    HallObstacle,
    Matching,
    PseudoFlow,
    build_parity_graph_H,
    even_perfect_matching,
    hall_obstacle,
    mn_construction,
    mn_decision,
    mn_pseudo_flow,
    subdivide_zero_edges,
)
from .meter import NullMeter, SpaceMeter
from .parity import directed_odd_cycle, even_path, strong_components, undirected_odd_cycle
from .plgr import ParseError, ValidationError, dumps, loads, read_graph, write_graph
from .redblue import colored_dfs, modified_colored_dfs, red_blue_path
from .separator import SeparatorFamily, build_separator, build_separator_family
from .shortest_path import (
    NegativeCycle,
    NegativeCycleError,
    NoPathError,
    detect_negative_cycle,
    planar_dist,
    planar_reach,
    planar_short_path,
)

__version__ = "0.1.0"

__all__ = [
    "Arc",
    "BLUE",
    "CapacityDemandGraph",
    "DrawnGraph",
    "DualGraph",
    "EmbeddingError",
    "GadgetMap",
    "GeneratorSpec",
    "GraphError",
    "HallObstacle",
    "Matching",
    "NegativeCycle",
    "NegativeCycleError",
    "NoPathError",
    "NullMeter",
    "PART_A",
    "PART_B",
    "ParseError",
    "PlanarGraph",
    "PseudoFlow",
    "RED",
    "SeparatorFamily",
    "SpaceMeter",
    "ValidationError",
    "build_directed_dual",
    "build_parity_graph_H",
    "build_separator",
    "build_separator_family",
    "colored_dfs",
    "detect_negative_cycle",
    "directed_odd_cycle",
    "dumps",
    "even_path",
    "even_perfect_matching",
    "generate",
    "hall_obstacle",
    "induced_subgraph",
    "loads",
    "mn_construction",
    "mn_decision",
    "mn_pseudo_flow",
    "modified_colored_dfs",
    "planar_dist",
    "planar_reach",
    "planar_short_path",
    "planarize_with_gadgets",
    "read_graph",
    "red_blue_path",
    "sparse_crossing_reach",
    "strong_components",
    "subdivide_zero_edges",
    "trace_faces",
    "undirected_odd_cycle",
    "validate",
    "write_graph",
]
