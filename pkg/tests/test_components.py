"""
Tests for strongly and weakly connected components.
"""

import networkx as nx
from hypothesis import given, settings

from axcent.core.components import (
    strongly_connected_components,
    weakly_connected_components,
    weakly_reachable_count,
)
from axcent.core.graph import Graph

from .strategies import digraphs


def to_networkx(g: Graph) -> nx.DiGraph:
    h = nx.DiGraph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.arcs())
    return h


class TestComponents:
    """Test component partitions."""

    def test_scc_with_terminal_flags(self):
        """Test SCCs are numbered by smallest member and flagged terminal."""
        g = Graph(4, [(1, 0), (0, 1), (1, 2), (3, 3)])
        scc = strongly_connected_components(g)

        assert scc.members == ((0, 1), (2,), (3,))
        assert scc.labels.tolist() == [0, 0, 1, 2]
        assert scc.terminal == (False, True, True)

    def test_wcc_sizes(self):
        """Test weak components ignore arc direction."""
        g = Graph(5, [(0, 1), (2, 1), (3, 4)])
        wcc = weakly_connected_components(g)

        assert wcc.members == ((0, 1, 2), (3, 4))
        assert wcc.sizes().tolist() == [3, 3, 3, 2, 2]
        assert weakly_reachable_count(g, 4) == 2

    def test_scc_refines_wcc(self):
        """Test every SCC lies inside one weak component."""
        g = Graph(6, [(0, 1), (1, 0), (1, 2), (4, 5)])

        assert strongly_connected_components(g).refines(weakly_connected_components(g))
        assert not weakly_connected_components(g).refines(strongly_connected_components(g))

    def test_empty_graph(self):
        """Test the graph with no nodes has no components."""
        assert strongly_connected_components(Graph(0)).count == 0
        assert weakly_connected_components(Graph(0)).sizes().size == 0

    @settings(max_examples=100, deadline=None)
    @given(digraphs(max_nodes=15, loops=True))
    def test_scc_matches_networkx(self, g):
        """Test SCCs agree with networkx."""
        ours = {frozenset(c) for c in strongly_connected_components(g).members}
        theirs = {frozenset(c) for c in nx.strongly_connected_components(to_networkx(g))}

        assert ours == theirs

    @settings(max_examples=100, deadline=None)
    @given(digraphs(max_nodes=15))
    def test_wcc_matches_networkx(self, g):
        """Test weak components agree with networkx."""
        ours = {frozenset(c) for c in weakly_connected_components(g).members}
        theirs = {frozenset(c) for c in nx.weakly_connected_components(to_networkx(g))}

        assert ours == theirs
