"""
Breadth-first distances and the counts derived from them.

Sweeps run through scipy.sparse.csgraph on the adjacency (forward
distances) or on the reverse adjacency (distances into a node).
"""

from dataclasses import dataclass
from typing import Sequence

import numpy as np
from scipy.sparse import csgraph

from .graph import Graph

UNREACHABLE = -1


@dataclass(frozen=True)
class DistanceRow:
    """Shortest-path lengths from one source; UNREACHABLE marks infinity."""

    source: int
    dist: np.ndarray

    def reachable(self) -> np.ndarray:
        """Ids of nodes at finite distance (source included)."""
        return np.flatnonzero(self.dist != UNREACHABLE)

    def __len__(self) -> int:
        return int(self.dist.size)


def distance_block(g: Graph, nodes: Sequence[int], reverse: bool = False) -> np.ndarray:
    """
    Distances for a batch of nodes as a float matrix with ``inf`` for
    unreachable pairs.

    Args:
        g: Graph
        nodes: Row nodes
        reverse: When True row i holds d(y, nodes[i]) for every y (distances
            into the node, i.e. a sweep on the transpose); otherwise
            d(nodes[i], y)

    Returns:
        Array of shape (len(nodes), n)
    """
    idx = np.asarray(nodes, dtype=np.int64)
    if idx.size == 0 or g.n == 0:
        return np.zeros((idx.size, g.n), dtype=np.float64)
    for x in (int(idx.min()), int(idx.max())):
        g.check_node(x)
    matrix = g.reverse_adjacency if reverse else g.adjacency
    block = csgraph.shortest_path(matrix, method="D", directed=True, unweighted=True, indices=idx)
    return np.atleast_2d(block)


def bfs_distances(g: Graph, source: int) -> DistanceRow:
    """Exact shortest-path lengths from ``source`` along arc directions."""
    g.check_node(source)
    row = distance_block(g, [source])[0]
    dist = np.where(np.isinf(row), UNREACHABLE, row).astype(np.int64)
    return DistanceRow(source=source, dist=dist)


def coreachable_count(g: Graph, x: int) -> int:
    """Number of nodes y with d(y, x) finite, x included."""
    g.check_node(x)
    return int(np.isfinite(distance_block(g, [x], reverse=True)[0]).sum())


def neighborhood_function(g: Graph, x: int, t: int) -> int:
    """Number of nodes y with d(y, x) <= t."""
    g.check_node(x)
    if t < 0:
        raise ValueError("t must be nonnegative")
    return int((distance_block(g, [x], reverse=True)[0] <= t).sum())


def neighborhood_curve(g: Graph, x: int) -> np.ndarray:
    """
    The negative neighborhood function of x for t = 0, 1, ... up to the
    largest finite distance into x; entry t is |{y : d(y, x) <= t}|.
    """
    g.check_node(x)
    row = distance_block(g, [x], reverse=True)[0]
    finite = row[np.isfinite(row)].astype(np.int64)
    return np.cumsum(np.bincount(finite))
