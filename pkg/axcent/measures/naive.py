"""
Naive centralities: the negative beta-measure and the four products of a
local density score (indegree or beta-measure) with a size count
(coreachable nodes or weakly connected component size).
"""

from enum import Enum

import numpy as np

from ..core.components import weakly_connected_components
from ..core.graph import Graph, l1_normalize_rows
from .geometric import distance_profile
from .scores import MeasureId, ScoreVector


class Density(Enum):
    INDEGREE = "indegree"
    BETA = "beta"


class Size(Enum):
    COREACHABLE = "co"
    WEAK = "weak"


PRODUCTS = {
    (Density.INDEGREE, Size.COREACHABLE): MeasureId.INDEGREE_CO,
    (Density.INDEGREE, Size.WEAK): MeasureId.INDEGREE_WEAK,
    (Density.BETA, Size.COREACHABLE): MeasureId.BETA_CO,
    (Density.BETA, Size.WEAK): MeasureId.BETA_WEAK,
}


def beta_measure(g: Graph) -> ScoreVector:
    """Sum over predecessors y of 1/outdegree(y), i.e. the vector 1 Abar."""
    values = np.ones(g.n) @ l1_normalize_rows(g) if g.n else np.zeros(0)
    return ScoreVector(MeasureId.BETA, np.asarray(values, dtype=np.float64))


def size_counts(g: Graph, size: Size, threads: int = 1, chunk: int = 256) -> np.ndarray:
    """Coreachable count or weak component size per node (node included)."""
    if size is Size.WEAK:
        return weakly_connected_components(g).sizes()
    return distance_profile(g, threads=threads, chunk=chunk).count


def naive_product(g: Graph,
                  density: Density,
                  size: Size,
                  threads: int = 1,
                  chunk: int = 256) -> ScoreVector:
    """
    Pointwise product of a density score and a size count.

    Args:
        g: Graph
        density: Indegree or beta-measure
        size: Coreachable count or weak component size
        threads: Worker threads for the coreachable sweep
        chunk: Targets per sweep batch

    Returns:
        ScoreVector tagged with the matching measure id
    """
    if density is Density.INDEGREE:
        local = g.in_degrees.astype(np.float64)
    else:
        local = beta_measure(g).scores
    counts = size_counts(g, size, threads, chunk).astype(np.float64)
    return ScoreVector(PRODUCTS[(density, size)], local * counts)
