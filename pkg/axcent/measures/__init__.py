"""
Centrality measures: geometric, spectral, path-based and naive.
"""

from .geometric import closeness, distance_profile, harmonic, indegree, lin
from .naive import Density, Size, beta_measure, naive_product
from .path import betweenness, betweenness_bruteforce, betweenness_exact
from .registry import compute, probe
from .scores import (
    TABLE_MEASURES,
    EigenEstimate,
    MeasureId,
    ScoreVector,
    SpectralParams,
)
from .spectral import (
    dominant_eigenvector,
    estimate_dominant_eigenvalues,
    hits,
    katz,
    katz_sweep,
    pagerank,
    pagerank_sweep,
    salsa,
    salsa_iterative,
    seeley,
)

__all__ = [
    "MeasureId",
    "ScoreVector",
    "SpectralParams",
    "EigenEstimate",
    "TABLE_MEASURES",
    "compute",
    "probe",
    "indegree",
    "closeness",
    "lin",
    "harmonic",
    "distance_profile",
    "betweenness",
    "betweenness_exact",
    "betweenness_bruteforce",
    "dominant_eigenvector",
    "seeley",
    "katz",
    "katz_sweep",
    "pagerank",
    "pagerank_sweep",
    "hits",
    "salsa",
    "salsa_iterative",
    "estimate_dominant_eigenvalues",
    "beta_measure",
    "naive_product",
    "Density",
    "Size",
]
