"""
axcent: centrality measures for directed graphs, checked against the size,
density and score-monotonicity axioms.
"""

__version__ = "0.1.0"

from .bench.axioms import AxiomBench, AxiomVerdict
from .core.graph import Graph, load_graph, read_graph, serialize_graph
from .measures.registry import compute
from .measures.scores import MeasureId, ScoreVector, SpectralParams
from .retrieval.evaluation import run_eval

__all__ = [
    "Graph",
    "load_graph",
    "read_graph",
    "serialize_graph",
    "MeasureId",
    "ScoreVector",
    "SpectralParams",
    "compute",
    "AxiomBench",
    "AxiomVerdict",
    "run_eval",
]
