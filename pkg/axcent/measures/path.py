"""
Betweenness centrality.

Two accumulation engines compute the same quantity: the sum over ordered
pairs (y, z) with x strictly inside of the fraction of shortest y-z paths
passing through x.

- ``vectorized``: level-synchronous path counting and dependency
  back-propagation over a batch of sources at once with scipy sparse
  products. Path counts are kept in float64 and must stay below 2**53.
- ``exact``: one BFS per source with Python integer path counts and
  rational dependencies.

``betweenness_bruteforce`` enumerates every shortest path explicitly and
serves as an independent oracle on small graphs.
"""

from collections import deque
from fractions import Fraction
from typing import List, Optional

import numpy as np

from ..core.distances import distance_block
from ..core.graph import Graph
from ..utils.errors import BoundExceededError
from ..utils.logging import get_logger
from ..utils.parallel import chunks, ordered_map
from .scores import MeasureId, ScoreVector

logger = get_logger(__name__)

EXACT_PATH_COUNT = float(2 ** 53)


class _PathCountOverflow(Exception):
    pass


def _vectorized_batch(g: Graph, sources: np.ndarray) -> np.ndarray:
    dist = distance_block(g, sources)
    finite = np.isfinite(dist)
    depth = int(dist[finite].max()) if finite.any() else 0
    rev = g.reverse_adjacency
    fwd = g.adjacency
    rows = np.arange(sources.size)

    sigma = np.zeros_like(dist)
    sigma[rows, sources] = 1.0
    for t in range(1, depth + 1):
        frontier = np.where(dist == t - 1, sigma, 0.0)
        # sigma[s, v] = sum of sigma[s, u] over arcs u -> v one level up
        reached = np.asarray((rev @ frontier.T).T)
        sigma += np.where(dist == t, reached, 0.0)
    if sigma.max(initial=0.0) >= EXACT_PATH_COUNT:
        raise _PathCountOverflow

    delta = np.zeros_like(dist)
    for t in range(depth - 1, -1, -1):
        with np.errstate(divide="ignore", invalid="ignore"):
            share = np.where(dist == t + 1, (1.0 + delta) / sigma, 0.0)
        pulled = np.asarray((fwd @ share.T).T)
        delta += np.where(dist == t, sigma * pulled, 0.0)
    delta[rows, sources] = 0.0
    return delta.sum(axis=0)


def _betweenness_vectorized(g: Graph, threads: int, chunk: int) -> np.ndarray:
    batches = list(chunks(np.arange(g.n, dtype=np.int64), chunk))
    parts = ordered_map(lambda b: _vectorized_batch(g, b), batches, threads)
    total = np.zeros(g.n)
    for part in parts:
        total += part
    return total


def _betweenness_exact(g: Graph) -> List[Fraction]:
    succ = g.successor_lists()
    n = g.n
    centrality = [Fraction(0)] * n
    for s in range(n):
        stack: List[int] = []
        preds: List[List[int]] = [[] for _ in range(n)]
        sigma = [0] * n
        sigma[s] = 1
        dist = [-1] * n
        dist[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            stack.append(v)
            for w in succ[v]:
                if dist[w] < 0:
                    dist[w] = dist[v] + 1
                    queue.append(w)
                if dist[w] == dist[v] + 1:
                    sigma[w] += sigma[v]
                    preds[w].append(v)
        delta = [Fraction(0)] * n
        while stack:
            w = stack.pop()
            for v in preds[w]:
                delta[v] += Fraction(sigma[v], sigma[w]) * (1 + delta[w])
            if w != s:
                centrality[w] += delta[w]
    return centrality


def betweenness(g: Graph,
                exact: Optional[bool] = None,
                threads: int = 1,
                chunk: int = 256) -> ScoreVector:
    """
    Betweenness centrality over ordered pairs, endpoints excluded.

    Args:
        g: Graph
        exact: Force the rational engine (True) or the vectorized one
            (False); None picks the vectorized engine and falls back to the
            rational one when path counts outgrow float64 integers
        threads: Worker threads for source batches
        chunk: Sources per batch

    Returns:
        ScoreVector of raw betweenness values
    """
    if g.n == 0:
        return ScoreVector(MeasureId.BETWEENNESS, np.zeros(0))
    if not exact:
        try:
            values = _betweenness_vectorized(g, threads, chunk)
            return ScoreVector(MeasureId.BETWEENNESS, values, {"engine": "vectorized"})
        except _PathCountOverflow:
            if exact is False:
                raise BoundExceededError("shortest-path counts exceed 2**53; use the exact engine")
            logger.info("Path counts exceed float precision, switching to exact engine", n=g.n)
    values = np.array([float(c) for c in _betweenness_exact(g)])
    return ScoreVector(MeasureId.BETWEENNESS, values, {"engine": "exact"})


def betweenness_exact(g: Graph) -> List[Fraction]:
    """Betweenness as exact rationals."""
    return _betweenness_exact(g)


def betweenness_bruteforce(g: Graph, cap: int = 64) -> List[Fraction]:
    """
    Betweenness by explicit enumeration of all shortest paths.

    Args:
        g: Graph with at most ``cap`` nodes
        cap: Safety cap on the node count

    Returns:
        Exact rational betweenness per node

    Raises:
        BoundExceededError: n > cap
    """
    if g.n > cap:
        raise BoundExceededError(f"brute-force betweenness is capped at {cap} nodes, got {g.n}")
    succ = g.successor_lists()
    dist = distance_block(g, range(g.n)) if g.n else np.zeros((0, 0))
    result = [Fraction(0)] * g.n

    for y in range(g.n):
        for z in range(g.n):
            if z == y or not np.isfinite(dist[y, z]):
                continue
            target = int(dist[y, z])
            interior = [0] * g.n
            paths = 0
            walk = [(y, [y])]
            while walk:
                v, path = walk.pop()
                if v == z:
                    paths += 1
                    for x in path[1:-1]:
                        interior[x] += 1
                    continue
                for w in succ[v]:
                    # stay on shortest y-z paths only
                    if dist[y, w] == len(path) and dist[w, z] == target - len(path):
                        walk.append((w, path + [w]))
            for x, count in enumerate(interior):
                if count:
                    result[x] += Fraction(count, paths)
    return result
