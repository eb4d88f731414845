"""
Hypothesis strategies and assertion helpers shared by the property suites.
"""

import numpy as np
from hypothesis import strategies as st

from axcent.core.graph import Graph


@st.composite
def digraphs(draw, max_nodes: int = 12, min_nodes: int = 1, loops: bool = False) -> Graph:
    """Small directed graphs."""
    n = draw(st.integers(min_value=min_nodes, max_value=max_nodes))
    pairs = st.tuples(st.integers(0, n - 1), st.integers(0, n - 1))
    arcs = draw(st.lists(pairs, max_size=3 * n))
    if not loops:
        arcs = [(u, v) for u, v in arcs if u != v]
    return Graph(n, arcs)


def assert_proportional(actual: np.ndarray, expected: np.ndarray, rel: float = 1e-9) -> None:
    """Assert two nonnegative vectors agree up to a positive factor."""
    a = np.asarray(actual, dtype=np.float64)
    e = np.asarray(expected, dtype=np.float64)
    assert a.sum() > 0 and e.sum() > 0
    a, e = a / a.sum(), e / e.sum()
    np.testing.assert_allclose(a, e, rtol=rel, atol=rel * float(e.max()))


def cosine_distance(u: np.ndarray, v: np.ndarray) -> float:
    return 1.0 - float(np.dot(u, v) / (np.linalg.norm(u) * np.linalg.norm(v)))
