"""
Strongly and weakly connected components.

Labels come from scipy.sparse.csgraph and are renumbered in order of each
component's smallest node, so partitions are deterministic.
"""

from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np
from scipy.sparse import csgraph

from .graph import Graph


@dataclass(frozen=True)
class Partition:
    """
    Node partition.

    Attributes:
        labels: Component id per node
        members: Sorted member tuple per component
        terminal: Per-component flag, set for strongly connected components
            with no arc leaving them; None for weak partitions
    """

    labels: np.ndarray
    members: Tuple[Tuple[int, ...], ...]
    terminal: Optional[Tuple[bool, ...]] = None

    @property
    def count(self) -> int:
        return len(self.members)

    def sizes(self) -> np.ndarray:
        """Component size for every node."""
        per_component = np.array([len(c) for c in self.members], dtype=np.int64)
        return per_component[self.labels] if self.labels.size else per_component[:0]

    def refines(self, other: "Partition") -> bool:
        """True when every component of self lies inside one component of other."""
        return all(len({int(other.labels[x]) for x in comp}) == 1 for comp in self.members)


def _canonical(raw: np.ndarray) -> Tuple[np.ndarray, Tuple[Tuple[int, ...], ...]]:
    # first occurrence order == order of smallest member
    _, first, inverse = np.unique(raw, return_index=True, return_inverse=True)
    order = np.argsort(first, kind="stable")
    rank = np.empty_like(order)
    rank[order] = np.arange(order.size)
    labels = rank[inverse].astype(np.int64)
    members = [[] for _ in range(order.size)]
    for node, label in enumerate(labels.tolist()):
        members[label].append(node)
    return labels, tuple(tuple(c) for c in members)


def strongly_connected_components(g: Graph) -> Partition:
    """SCC partition with terminal flags."""
    if g.n == 0:
        return Partition(np.zeros(0, dtype=np.int64), (), ())
    _, raw = csgraph.connected_components(g.adjacency, directed=True, connection="strong")
    labels, members = _canonical(raw)
    leaving = np.zeros(len(members), dtype=bool)
    crossing = labels[g.sources] != labels[g.targets]
    leaving[labels[g.sources[crossing]]] = True
    return Partition(labels, members, tuple((~leaving).tolist()))


def weakly_connected_components(g: Graph) -> Partition:
    """WCC partition (components of the underlying undirected graph)."""
    if g.n == 0:
        return Partition(np.zeros(0, dtype=np.int64), ())
    _, raw = csgraph.connected_components(g.adjacency, directed=True, connection="weak")
    labels, members = _canonical(raw)
    return Partition(labels, members)


def weakly_reachable_count(g: Graph, x: int) -> int:
    """Size of the weakly connected component containing x."""
    g.check_node(x)
    return int(weakly_connected_components(g).sizes()[x])
