"""
Ranking metrics: precision and NDCG at a cutoff.

NDCG uses linear gain (the relevance grade) and the 1 / log2(rank + 1)
discount with ranks starting at 1.
"""

from typing import Mapping, Sequence

import numpy as np

from ..utils.errors import ParameterError


def _check_cutoff(k: int) -> None:
    if k < 1:
        raise ParameterError(f"cutoff must be >= 1, got {k}")


def grades(ranking: Sequence[int], qrels: Mapping[int, int]) -> np.ndarray:
    """Relevance grades of the ranked documents (0 when unjudged)."""
    return np.asarray([qrels.get(int(doc), 0) for doc in ranking], dtype=np.float64)


def dcg_at_k(r: np.ndarray, k: int) -> float:
    """Discounted cumulative gain of a grade list, truncated at k."""
    r = np.asarray(r, dtype=np.float64)[:k]
    if r.size == 0:
        return 0.0
    return float(np.sum(r / np.log2(np.arange(2, r.size + 2))))


def precision_at_k(ranking: Sequence[int], qrels: Mapping[int, int], k: int = 10) -> float:
    """Relevant documents (grade > 0) among the top k, divided by k."""
    _check_cutoff(k)
    r = grades(ranking, qrels)[:k]
    return float(np.count_nonzero(r > 0)) / k


def ndcg_at_k(ranking: Sequence[int], qrels: Mapping[int, int], k: int = 10) -> float:
    """
    DCG@k of the ranking over DCG@k of the ideal ordering of every judged
    document; 0 when nothing is relevant.
    """
    _check_cutoff(k)
    ideal = np.sort(np.asarray([g for g in qrels.values() if g > 0], dtype=np.float64))[::-1]
    idcg = dcg_at_k(ideal, k)
    if idcg == 0.0:
        return 0.0
    return min(1.0, dcg_at_k(grades(ranking, qrels), k) / idcg)
