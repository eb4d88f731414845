"""
Dispatch from measure ids to implementations.
"""

from typing import Optional, Sequence

import numpy as np

from ..core.graph import Graph
from . import geometric, naive, path, spectral
from .scores import GEOMETRIC, MeasureId, ScoreVector, SpectralParams


def compute(measure: "MeasureId | str",
            g: Graph,
            params: Optional[SpectralParams] = None,
            threads: int = 1,
            chunk: int = 256,
            normalize: bool = False) -> ScoreVector:
    """
    Compute one measure on a graph.

    Args:
        measure: Measure id (enum or lowercase string)
        g: Graph
        params: Spectral parameters (ignored by non-spectral measures)
        threads: Worker threads for sweep-based measures
        chunk: Sources or targets per sweep batch
        normalize: Rescale the result to unit l1 norm

    Returns:
        ScoreVector

    Raises:
        UnknownMeasureError: measure id not recognised
    """
    mid = MeasureId.parse(measure)
    params = params or SpectralParams()

    if mid is MeasureId.DEGREE:
        result = geometric.indegree(g)
    elif mid is MeasureId.HARMONIC:
        result = geometric.harmonic(g, threads, chunk)
    elif mid is MeasureId.CLOSENESS:
        result = geometric.closeness(g, threads, chunk)
    elif mid is MeasureId.LIN:
        result = geometric.lin(g, threads, chunk)
    elif mid is MeasureId.BETWEENNESS:
        result = path.betweenness(g, threads=threads, chunk=chunk)
    elif mid is MeasureId.DOMINANT:
        result = spectral.dominant_eigenvector(g, params)
    elif mid is MeasureId.SEELEY:
        result = spectral.seeley(g, params)
    elif mid is MeasureId.KATZ:
        result = spectral.katz(g, params)
    elif mid is MeasureId.PAGERANK:
        result = spectral.pagerank(g, params)
    elif mid is MeasureId.HITS:
        result = spectral.hits(g, params)[0]
    elif mid is MeasureId.SALSA:
        result = spectral.salsa(g)
    elif mid is MeasureId.BETA:
        result = naive.beta_measure(g)
    else:
        density, size = next(key for key, value in naive.PRODUCTS.items() if value is mid)
        result = naive.naive_product(g, density, size, threads, chunk)

    return result.l1_normalized() if normalize else result


def probe(measure: MeasureId,
          g: Graph,
          nodes: Sequence[int],
          params: Optional[SpectralParams] = None) -> np.ndarray:
    """
    Scores of selected nodes. Geometric measures sweep only from those
    nodes; everything else is computed in full and indexed.
    """
    if measure in GEOMETRIC:
        return geometric.geometric_scores(g, measure, nodes)
    return compute(measure, g, params).scores[np.asarray(nodes, dtype=np.int64)]
