"""
Counterexample graphs for score monotonicity, the searches that rebuild
the ones only known through their score values, and random graph sources
for randomized trials.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Optional, Tuple

import numpy as np

from ..core.graph import Graph
from ..measures.geometric import distance_profile, lin_exact
from ..measures.scores import MeasureId
from ..measures.spectral import salsa_components


@dataclass(frozen=True)
class Counterexample:
    """
    A graph, an absent arc x -> y, and the measures whose score of y fails
    to increase when the arc is added.
    """
    name: str
    graph: Graph
    arc: Tuple[int, int]
    measures: Tuple[MeasureId, ...]
    preference: Optional[Tuple[float, ...]] = None
    expected: Dict[str, Tuple[Fraction, Fraction]] = field(default_factory=dict)

    @property
    def target(self) -> int:
        return self.arc[1]

    def after(self) -> Graph:
        return self.graph.with_arc(*self.arc)


def salsa_fraction(g: Graph, x: int) -> Fraction:
    """SALSA score of x as an exact rational."""
    labels = salsa_components(g)
    if labels[x] < 0:
        return Fraction(0)
    members = labels == labels[x]
    indeg = g.in_degrees
    return Fraction(int(indeg[x]) * int(members.sum()), int(indeg[members].sum()) * g.n)


def lin_fraction(g: Graph, x: int) -> Fraction:
    """Lin's index of x as an exact rational."""
    return lin_exact(distance_profile(g, [x]), 0)


# ---- fixed counterexamples -------------------------------------------------------

def closeness_fixture() -> Counterexample:
    """Single arc z -> y; adding x -> y halves the closeness of y."""
    x, y, z = 0, 1, 2
    return Counterexample(
        "one-arc", Graph(3, [(z, y)]), (x, y), (MeasureId.CLOSENESS,),
        expected={"closeness": (Fraction(1), Fraction(1, 2))},
    )


def isolated_pair_fixture() -> Counterexample:
    """Two isolated nodes; the new arc creates no path with an interior node."""
    return Counterexample(
        "isolated-pair", Graph(2), (0, 1), (MeasureId.BETWEENNESS,),
        expected={"betweenness": (Fraction(0), Fraction(0))},
    )


def clique_with_isolated_fixture(k: int = 4) -> Counterexample:
    """A k-clique plus two isolated nodes x, y; spectral mass stays on the clique."""
    clique = [(u, v) for u in range(k) for v in range(k) if u != v]
    x, y = k, k + 1
    zero = (Fraction(0), Fraction(0))
    return Counterexample(
        "clique-plus-isolated", Graph(k + 2, clique), (x, y),
        (MeasureId.DOMINANT, MeasureId.SEELEY, MeasureId.HITS),
        expected={"dominant": zero, "seeley": zero, "hits": zero},
    )


def pagerank_fixture() -> Counterexample:
    """
    Two nodes, arc 1 -> 0, preference concentrated on node 1. Adding 0 -> 1
    raises the raw score of node 1 but leaves its normalized score at
    1 / (1 + alpha).
    """
    return Counterexample(
        "two-node", Graph(2, [(1, 0)]), (0, 1), (MeasureId.PAGERANK,), preference=(0.0, 1.0),
    )


SALSA_FIXTURE_ARCS = ((3, 0), (2, 1), (4, 1), (5, 1))


def salsa_fixture() -> Counterexample:
    """
    Six nodes: y = 0 with the single predecessor 3, z = 1 with predecessors
    2, 4, 5. Adding 2 -> 0 merges y and z into one component of total
    indegree 5, so the score of y drops from 1/6 to (2/5)(2/6).
    """
    return Counterexample(
        "six-node", Graph(6, SALSA_FIXTURE_ARCS), (2, 0), (MeasureId.SALSA,),
        expected={"salsa": (Fraction(1, 6), Fraction(2, 15))},
    )


def lin_fixture(k: int = 4) -> Counterexample:
    """
    Hub y = 0 with k predecessors 1..k, plus x = k+1 fed by a = k+2, which is
    fed by b = k+3 and c = k+4. Adding x -> y moves Lin(y) from (k+1)^2/k to
    (k+5)^2/(k+9), a decrease for k > 3.
    """
    x, a, b, c = k + 1, k + 2, k + 3, k + 4
    arcs = [(h, 0) for h in range(1, k + 1)] + [(a, x), (b, a), (c, a)]
    return Counterexample(
        "hub-with-tail", Graph(k + 5, arcs), (x, 0), (MeasureId.LIN,),
        expected={"lin": (Fraction((k + 1) ** 2, k), Fraction((k + 5) ** 2, k + 9))},
    )


def all_fixtures() -> List[Counterexample]:
    return [
        closeness_fixture(),
        isolated_pair_fixture(),
        clique_with_isolated_fixture(),
        pagerank_fixture(),
        salsa_fixture(),
        lin_fixture(),
    ]


# ---- searches ------------------------------------------------------------------

def search_salsa_counterexample() -> Optional[Counterexample]:
    """
    Search six-node graphs where y = 0 has one predecessor in a trivial
    component and z = 1 has three, such that adding x -> y takes the SALSA
    score of y from 1/6 to 2/15. Returns the first hit in enumeration order.
    """
    y, z = 0, 1
    others = [2, 3, 4, 5]
    for x in others:
        for w in others:
            if w == x:
                continue
            for pair in combinations([o for o in others if o != x], 2):
                arcs = [(w, y), (x, z)] + [(o, z) for o in pair]
                g = Graph(6, arcs)
                if salsa_fraction(g, y) != Fraction(1, 6):
                    continue
                if salsa_fraction(g.with_arc(x, y), y) == Fraction(2, 15):
                    return Counterexample(
                        "six-node-search", g, (x, y), (MeasureId.SALSA,),
                        expected={"salsa": (Fraction(1, 6), Fraction(2, 15))},
                    )
    return None


def search_lin_counterexample(k: int = 4) -> Optional[Counterexample]:
    """
    Search attachments of four nodes (x and three helpers) next to a hub
    with k predecessors for one where adding x -> hub maps Lin(hub) from
    (k+1)^2/k to (k+5)^2/(k+9). Arc subsets among the four attachment nodes
    are tried in increasing bitmask order.
    """
    hub = 0
    base = [(h, hub) for h in range(1, k + 1)]
    attach = list(range(k + 1, k + 5))
    x = attach[0]
    candidates = [(u, v) for u in attach for v in attach if u != v]
    before_target = Fraction((k + 1) ** 2, k)
    after_target = Fraction((k + 5) ** 2, k + 9)
    for mask in range(1 << len(candidates)):
        extra = [arc for bit, arc in enumerate(candidates) if mask >> bit & 1]
        g = Graph(k + 5, base + extra)
        if lin_fraction(g, hub) != before_target:
            continue
        if lin_fraction(g.with_arc(x, hub), hub) == after_target:
            return Counterexample(
                "hub-search", g, (x, hub), (MeasureId.LIN,),
                expected={"lin": (before_target, after_target)},
            )
    return None


# ---- random graphs --------------------------------------------------------------

def random_graph(rng: np.random.Generator, max_nodes: int = 40, min_nodes: int = 2) -> Graph:
    """Loopless random digraph with a random node count and arc density."""
    n = int(rng.integers(min_nodes, max_nodes + 1))
    density = float(rng.uniform(0.05, 0.3))
    mask = rng.random((n, n)) < density
    np.fill_diagonal(mask, False)
    src, dst = np.nonzero(mask)
    return Graph.from_arrays(n, src, dst)


def random_strongly_connected(rng: np.random.Generator, max_nodes: int = 30, min_nodes: int = 3) -> Graph:
    """Random digraph made strongly connected by a Hamiltonian cycle through a random order."""
    g = random_graph(rng, max_nodes, min_nodes)
    order = rng.permutation(g.n)
    ring_src = order
    ring_dst = np.roll(order, -1)
    return Graph.from_arrays(
        g.n, np.concatenate([g.sources, ring_src]), np.concatenate([g.targets, ring_dst])
    )


def random_symmetric_connected(rng: np.random.Generator, max_nodes: int = 30, min_nodes: int = 3) -> Graph:
    """Random connected symmetric graph: a random spanning tree plus random edges, both directions."""
    n = int(rng.integers(min_nodes, max_nodes + 1))
    order = rng.permutation(n)
    parents = [int(order[int(rng.integers(0, i))]) for i in range(1, n)]
    edges = set(zip(order[1:].tolist(), parents))
    density = float(rng.uniform(0.05, 0.3))
    extra = np.argwhere(np.triu(rng.random((n, n)) < density, k=1))
    edges.update((int(u), int(v)) for u, v in extra)
    arcs = [(u, v) for u, v in edges] + [(v, u) for u, v in edges]
    return Graph(n, arcs)


def random_absent_arc(rng: np.random.Generator, g: Graph) -> Optional[Tuple[int, int]]:
    """A uniformly chosen arc x -> y (x != y) missing from g, or None if g is complete."""
    present = np.zeros((g.n, g.n), dtype=bool)
    present[g.sources, g.targets] = True
    np.fill_diagonal(present, True)
    missing = np.argwhere(~present)
    if missing.size == 0:
        return None
    x, y = missing[int(rng.integers(0, len(missing)))]
    return int(x), int(y)
