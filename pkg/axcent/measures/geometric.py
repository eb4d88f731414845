"""
Geometric centralities: indegree, closeness, Lin's index and harmonic
centrality.

All of them depend only on how many nodes sit at each distance from the
target, so scores come from per-target BFS sweeps on the transpose. Sweeps
run in batches of targets; batches may run on worker threads and are
reduced in target order.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from ..core.distances import distance_block
from ..core.graph import Graph
from ..utils.logging import get_logger
from ..utils.parallel import chunks, ordered_map
from .scores import MeasureId, ScoreVector

logger = get_logger(__name__)


@dataclass(frozen=True)
class DistanceProfile:
    """
    Aggregates of the distances into each target.

    Attributes:
        nodes: Target ids
        count: Number of coreachable nodes, target included
        total: Sum of finite distances into the target (integer)
        harmonic: Sum of reciprocal distances over the other nodes
    """

    nodes: np.ndarray
    count: np.ndarray
    total: np.ndarray
    harmonic: np.ndarray


def distance_profile(g: Graph,
                     nodes: Optional[Sequence[int]] = None,
                     threads: int = 1,
                     chunk: int = 256) -> DistanceProfile:
    """
    Compute distance aggregates for the given targets (all nodes by default).

    Args:
        g: Graph
        nodes: Targets; None means every node
        threads: Worker threads for the batches
        chunk: Targets per batch

    Returns:
        DistanceProfile aligned with ``nodes``
    """
    targets = np.arange(g.n, dtype=np.int64) if nodes is None else np.asarray(nodes, dtype=np.int64)

    def sweep(batch: np.ndarray):
        block = distance_block(g, batch, reverse=True)
        finite = np.isfinite(block)
        count = finite.sum(axis=1).astype(np.int64)
        total = np.where(finite, block, 0.0).sum(axis=1).astype(np.int64)
        with np.errstate(divide="ignore"):
            inverse = np.where(finite & (block > 0), 1.0 / block, 0.0)
        return count, total, inverse.sum(axis=1)

    parts = ordered_map(sweep, list(chunks(targets, chunk)), threads)
    if not parts:
        empty_i = np.zeros(0, dtype=np.int64)
        return DistanceProfile(targets, empty_i, empty_i, np.zeros(0))
    return DistanceProfile(
        nodes=targets,
        count=np.concatenate([p[0] for p in parts]),
        total=np.concatenate([p[1] for p in parts]),
        harmonic=np.concatenate([p[2] for p in parts]),
    )


def closeness_values(profile: DistanceProfile) -> np.ndarray:
    # zero denominator (nothing but x coreaches x) scores 0
    total = profile.total.astype(np.float64)
    return np.divide(1.0, total, out=np.zeros_like(total), where=profile.total > 0)


def lin_values(profile: DistanceProfile) -> np.ndarray:
    # zero denominator scores 1
    total = profile.total.astype(np.float64)
    squared = profile.count.astype(np.float64) ** 2
    return np.divide(squared, total, out=np.ones_like(total), where=profile.total > 0)


def closeness_exact(profile: DistanceProfile, i: int) -> Fraction:
    """Closeness of ``profile.nodes[i]`` as an exact rational."""
    total = int(profile.total[i])
    return Fraction(0) if total == 0 else Fraction(1, total)


def lin_exact(profile: DistanceProfile, i: int) -> Fraction:
    """Lin's index of ``profile.nodes[i]`` as an exact rational."""
    total = int(profile.total[i])
    return Fraction(1) if total == 0 else Fraction(int(profile.count[i]) ** 2, total)


def indegree(g: Graph) -> ScoreVector:
    """Number of predecessors of each node."""
    return ScoreVector(MeasureId.DEGREE, g.in_degrees.astype(np.float64))


def closeness(g: Graph, threads: int = 1, chunk: int = 256) -> ScoreVector:
    """Reciprocal of the sum of distances from coreachable nodes."""
    profile = distance_profile(g, threads=threads, chunk=chunk)
    return ScoreVector(MeasureId.CLOSENESS, closeness_values(profile))


def lin(g: Graph, threads: int = 1, chunk: int = 256) -> ScoreVector:
    """Squared coreachable count over the sum of distances from coreachable nodes."""
    profile = distance_profile(g, threads=threads, chunk=chunk)
    return ScoreVector(MeasureId.LIN, lin_values(profile))


def harmonic(g: Graph, threads: int = 1, chunk: int = 256) -> ScoreVector:
    """Sum of reciprocal distances into each node; unreachable nodes add 0."""
    profile = distance_profile(g, threads=threads, chunk=chunk)
    logger.debug("Harmonic centrality computed", n=g.n, m=g.m)
    return ScoreVector(MeasureId.HARMONIC, profile.harmonic)


def geometric_scores(g: Graph, measure: MeasureId, nodes: Sequence[int]) -> np.ndarray:
    """
    Scores of a geometric measure for selected nodes only, computed with one
    sweep per node instead of a full pass.
    """
    if measure is MeasureId.DEGREE:
        return g.in_degrees[np.asarray(nodes, dtype=np.int64)].astype(np.float64)
    profile = distance_profile(g, nodes)
    if measure is MeasureId.HARMONIC:
        return profile.harmonic
    if measure is MeasureId.CLOSENESS:
        return closeness_values(profile)
    if measure is MeasureId.LIN:
        return lin_values(profile)
    raise ValueError(f"{measure.value} is not a geometric measure")
