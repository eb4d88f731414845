"""
Tests for the benchmark graph generators and their closed forms.
"""

from fractions import Fraction

import numpy as np
import pytest

from axcent.bench.generators import Family, GeneratorSpec, gen_D, gen_D_symmetric, gen_S, generate
from axcent.bench.oracles import (
    bridged_oracle,
    katz_bridge_system,
    pagerank_bridge_system,
    separated_oracle,
    watershed_formula,
)
from axcent.core.graph import l1_normalize_rows
from axcent.utils.errors import ParameterError, UnknownMeasureError


class TestGenerators:
    """Test node layout and arc counts."""

    @pytest.mark.parametrize("k,p", [(3, 3), (4, 7), (9, 2), (1, 1)])
    def test_separated_graph(self, k, p):
        """Test S(k, p) is a k-clique plus a directed p-cycle."""
        g = gen_S(k, p)

        assert g.n == k + p
        assert g.m == k * (k - 1) + p
        assert not g.has_arc(0, k)
        assert g.has_arc(k + p - 1, k)

    @pytest.mark.parametrize("k,p", [(3, 3), (5, 8)])
    def test_bridged_graph(self, k, p):
        """Test D(k, p) adds exactly the bridge 0 <-> k."""
        g = gen_D(k, p)

        assert g.m == k * (k - 1) + p + 2
        assert g.has_arc(0, k) and g.has_arc(k, 0)
        assert g.has_arc(k, k + 1)
        assert not g.has_arc(k + 1, k)
        assert g.arc_set() - gen_S(k, p).arc_set() == {(0, k), (k, 0)}

    def test_symmetric_cycle(self):
        """Test D-symmetric is a symmetric graph with both cycle directions."""
        k, p = 4, 6
        g = gen_D_symmetric(k, p)

        assert g.m == k * (k - 1) + 2 * p + 2
        assert g.is_symmetric()

    def test_spec_roles(self):
        """Test the role helpers of GeneratorSpec."""
        spec = GeneratorSpec(Family.D, 4, 5)

        assert spec.n == 9
        assert (spec.clique_bridge, spec.cycle_bridge) == (0, 4)
        assert spec.cycle_node(2) == 6
        assert spec.cycle_node(5) == spec.cycle_bridge

    def test_generate_by_name(self):
        """Test family lookup by name."""
        assert generate("D-symmetric", 3, 3) == gen_D_symmetric(3, 3)
        assert generate(Family.S, 3, 4) == gen_S(3, 4)

    @pytest.mark.parametrize("call", [
        lambda: gen_S(0, 3),
        lambda: gen_D(2, 5),
        lambda: gen_D(5, 2),
        lambda: generate("T", 3, 3),
    ])
    def test_invalid_sizes(self, call):
        """Test out-of-range sizes and unknown families."""
        with pytest.raises(ParameterError):
            call()


class TestOracles:
    """Test the closed-form predictions themselves."""

    def test_separated_graph_values(self):
        """Test a few exact entries on S(4, 5)."""
        assert separated_oracle("harmonic", 4, 5)[1].value == Fraction(25, 12)
        assert separated_oracle("closeness", 4, 5)[1].value == Fraction(1, 10)
        assert separated_oracle("lin", 4, 5)[0].value == Fraction(16, 3)
        assert separated_oracle("katz", 4, 5)[0].value == pytest.approx(2.0)

    def test_unsupported_rows(self):
        """Test invalid sizes, missing eigenvalues and untabulated measures."""
        with pytest.raises(ParameterError):
            separated_oracle("degree", 1, 5)
        with pytest.raises(ParameterError):
            bridged_oracle("dominant", 4, 5)
        with pytest.raises(ParameterError):
            bridged_oracle("beta", 4, 5)
        with pytest.raises(UnknownMeasureError):
            separated_oracle("eigen", 4, 5)

    @pytest.mark.parametrize("k,p", [(3, 3), (4, 6), (7, 5)])
    def test_katz_system_matches_dense_solve(self, k, p):
        """Test the three-unknown Katz system against a full solve of k(I - beta A) = 1."""
        g = gen_D(k, p)
        beta = 0.1
        full = np.linalg.solve((np.eye(g.n) - beta * g.adjacency.toarray()).T, np.ones(g.n))

        np.testing.assert_allclose(katz_bridge_system(k, p, beta), full[[0, 1, k]], rtol=1e-12)

    @pytest.mark.parametrize("k,p", [(3, 3), (4, 6), (7, 5)])
    def test_pagerank_system_matches_dense_solve(self, k, p):
        """Test the three-unknown PageRank system against p(I - alpha Abar) = (1 - alpha) 1."""
        g = gen_D(k, p)
        alpha = 0.75
        op = l1_normalize_rows(g).toarray()
        full = np.linalg.solve((np.eye(g.n) - alpha * op).T, np.full(g.n, 1 - alpha))

        np.testing.assert_allclose(pagerank_bridge_system(k, p, alpha), full[[0, 1, k]], rtol=1e-12)

    @pytest.mark.parametrize("measure,p,expected", [
        ("closeness", 5, 6),
        ("lin", 2, 3),
        ("betweenness", 5, 9),
        ("betweenness", 10, 29),
        ("degree", 40, 3),
        ("pagerank", 40, 3),
        ("beta", 5, None),
    ])
    def test_watershed_formula(self, measure, p, expected):
        """Test predicted watersheds."""
        assert watershed_formula(measure, p) == expected
