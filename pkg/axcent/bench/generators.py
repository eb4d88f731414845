"""
Benchmark graphs: a k-clique next to a directed p-cycle (S), and the same
two pieces joined by a bidirectional bridge (D).

Layout: clique nodes 0..k-1 with the clique bridge at 0; cycle nodes
k..k+p-1 with the cycle bridge at k, node k+d sitting d steps after the
bridge along the cycle.
"""

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

import numpy as np

from ..core.graph import Graph
from ..utils.errors import ParameterError


class Family(Enum):
    S = "S"
    D = "D"
    D_SYMMETRIC = "D-symmetric"


@dataclass(frozen=True)
class GeneratorSpec:
    """Family and sizes of a benchmark graph."""
    family: Family
    k: int
    p: int

    def __post_init__(self) -> None:
        if self.family is Family.S:
            if self.k < 1 or self.p < 1:
                raise ParameterError(f"S needs k >= 1 and p >= 1, got k={self.k}, p={self.p}")
        elif self.k < 3 or self.p < 3:
            raise ParameterError(f"D needs k >= 3 and p >= 3, got k={self.k}, p={self.p}")

    @property
    def n(self) -> int:
        return self.k + self.p

    @property
    def clique_bridge(self) -> int:
        return 0

    @property
    def cycle_bridge(self) -> int:
        return self.k

    def cycle_node(self, d: int) -> int:
        """Cycle node at distance d from the cycle bridge."""
        return self.k + d % self.p

    def build(self) -> Graph:
        return _build(self.family, self.k, self.p)


def _clique_arcs(k: int):
    ids = np.arange(k, dtype=np.int64)
    src = np.repeat(ids, k)
    dst = np.tile(ids, k)
    keep = src != dst
    return src[keep], dst[keep]


def _cycle_arcs(k: int, p: int, symmetric: bool):
    ids = np.arange(p, dtype=np.int64)
    src, dst = k + ids, k + (ids + 1) % p
    if symmetric:
        return np.concatenate([src, dst]), np.concatenate([dst, src])
    return src, dst


@lru_cache(maxsize=64)
def _build(family: Family, k: int, p: int) -> Graph:
    cs, cd = _clique_arcs(k)
    ys, yd = _cycle_arcs(k, p, family is Family.D_SYMMETRIC)
    parts_s, parts_d = [cs, ys], [cd, yd]
    if family is not Family.S:
        parts_s.append(np.array([0, k], dtype=np.int64))
        parts_d.append(np.array([k, 0], dtype=np.int64))
    return Graph.from_arrays(k + p, np.concatenate(parts_s), np.concatenate(parts_d))


def gen_S(k: int, p: int) -> Graph:
    """Disjoint union of a k-clique and a directed p-cycle."""
    return GeneratorSpec(Family.S, k, p).build()


def gen_D(k: int, p: int) -> Graph:
    """k-clique and directed p-cycle joined by the bridge 0 <-> k."""
    return GeneratorSpec(Family.D, k, p).build()


def gen_D_symmetric(k: int, p: int) -> Graph:
    """Like gen_D with the cycle made symmetric."""
    return GeneratorSpec(Family.D_SYMMETRIC, k, p).build()


def generate(family: "Family | str", k: int, p: int) -> Graph:
    """Build a benchmark graph by family name ("S", "D" or "D-symmetric")."""
    try:
        fam = family if isinstance(family, Family) else Family(family)
    except ValueError:
        raise ParameterError(f"unknown graph family {family!r}") from None
    return GeneratorSpec(fam, k, p).build()
