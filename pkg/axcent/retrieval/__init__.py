"""
Retrieval evaluation over document corpora.
"""

from .corpus import Corpus, filter_inter_host, induced_subgraph, load_corpus, write_corpus
from .evaluation import EvalRun, EvalSpec, Evaluator, QueryResult, rank_by, run_eval, sweep_specs, table_lines
from .metrics import ndcg_at_k, precision_at_k
from .synthetic import make_synthetic_corpus

__all__ = [
    "Corpus",
    "load_corpus",
    "write_corpus",
    "induced_subgraph",
    "filter_inter_host",
    "rank_by",
    "run_eval",
    "sweep_specs",
    "table_lines",
    "EvalRun",
    "EvalSpec",
    "Evaluator",
    "QueryResult",
    "precision_at_k",
    "ndcg_at_k",
    "make_synthetic_corpus",
]
