"""
Graph core: immutable directed graphs, BFS distances and components.
"""

from .components import (
    Partition,
    strongly_connected_components,
    weakly_connected_components,
    weakly_reachable_count,
)
from .distances import (
    UNREACHABLE,
    DistanceRow,
    bfs_distances,
    coreachable_count,
    distance_block,
    neighborhood_curve,
    neighborhood_function,
)
from .numbers import harmonic_number, iverson
from .graph import Graph, l1_normalize_rows, load_graph, read_graph, serialize_graph, transpose

__all__ = [
    "Graph",
    "load_graph",
    "read_graph",
    "serialize_graph",
    "transpose",
    "l1_normalize_rows",
    "UNREACHABLE",
    "DistanceRow",
    "bfs_distances",
    "distance_block",
    "coreachable_count",
    "neighborhood_function",
    "neighborhood_curve",
    "Partition",
    "strongly_connected_components",
    "weakly_connected_components",
    "weakly_reachable_count",
    "harmonic_number",
    "iverson",
]
