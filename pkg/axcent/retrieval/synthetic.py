"""
Seeded synthetic corpora.

Documents with the highest ids are hubs that attract most links. Every
query matches all hubs plus a random sample of ordinary documents, and
the documents judged relevant (grade 1) are the ten best of the match set
by harmonic centrality on its induced subgraph. Identity order therefore
ranks relevant documents late, while harmonic ranking finds all of them.
"""

from typing import Dict, FrozenSet, List, Tuple

import numpy as np

from ..core.graph import Graph
from ..measures.geometric import harmonic
from ..utils.errors import ParameterError
from .corpus import Corpus
from .evaluation import rank_by

ALL_TERM = "all"


def make_synthetic_corpus(seed: int,
                          n: int = 200,
                          hubs: int = 15,
                          queries: int = 8,
                          sample: int = 30,
                          hosts: int = 2,
                          relevant: int = 10) -> Corpus:
    """
    Build a corpus.

    Args:
        seed: Random seed; equal seeds give equal corpora
        n: Number of documents
        hubs: Number of hub documents (ids n-hubs..n-1)
        queries: Number of queries
        sample: Ordinary documents matched by each query
        hosts: Number of host labels, assigned round-robin
        relevant: Relevant documents per query

    Returns:
        Corpus
    """
    if not 0 < relevant <= hubs < n or sample > n - hubs:
        raise ParameterError("need 0 < relevant <= hubs < n and sample <= n - hubs")
    rng = np.random.default_rng(seed)
    ordinary = np.arange(n - hubs)
    hub_ids = np.arange(n - hubs, n)

    src: List[np.ndarray] = []
    dst: List[np.ndarray] = []
    # every ordinary document cites three hubs and one ordinary document
    for d in ordinary:
        cited = rng.choice(hub_ids, size=min(3, hubs), replace=False)
        src.append(np.full(cited.size + 1, d))
        dst.append(np.append(cited, rng.choice(ordinary)))
    # hubs cite a few ordinary documents
    for h in hub_ids:
        cited = rng.choice(ordinary, size=2, replace=False)
        src.append(np.full(cited.size, h))
        dst.append(cited)
    s, t = np.concatenate(src), np.concatenate(dst)
    keep = s != t
    graph = Graph.from_arrays(n, s[keep], t[keep])

    index: Dict[str, FrozenSet[int]] = {ALL_TERM: frozenset(range(n))}
    query_terms: Dict[str, Tuple[str, ...]] = {}
    qrels: Dict[str, Dict[int, int]] = {}
    for j in range(queries):
        term = f"t{j}"
        docs = np.union1d(rng.choice(ordinary, size=sample, replace=False), hub_ids)
        index[term] = frozenset(int(d) for d in docs)
        query = f"q{j}"
        query_terms[query] = (ALL_TERM, term)
        sub, mapping = graph.subgraph(docs)
        top = rank_by(harmonic(sub).scores, mapping)[:relevant]
        qrels[query] = {int(d): 1 for d in top}

    labels = tuple(f"host{d % hosts}" for d in range(n))
    return Corpus(graph, index, qrels, query_terms, labels)
