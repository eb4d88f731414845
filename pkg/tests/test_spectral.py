"""
Tests for spectral centralities: dominant eigenvector, Seeley, Katz,
PageRank, HITS and SALSA.
"""

import numpy as np
import pytest
from hypothesis import assume, given, settings

from axcent.bench.fixtures import random_strongly_connected, random_symmetric_connected
from axcent.bench.generators import gen_D, gen_S
from axcent.bench.oracles import bridged_oracle, hits_quartic, hits_quartic_scale, separated_oracle
from axcent.core.graph import Graph, l1_normalize_rows
from axcent.measures.registry import compute
from axcent.measures.scores import MeasureId, SpectralParams
from axcent.measures.spectral import (
    dominant_eigenvector,
    estimate_dominant_eigenvalues,
    hits,
    katz,
    katz_sweep,
    pagerank,
    pagerank_sweep,
    salsa,
    salsa_iterative,
    seeley,
)
from axcent.utils.errors import (
    ConvergenceError,
    DegenerateSpectrumError,
    DivergenceError,
    ParameterError,
    UnknownMeasureError,
)

from .strategies import assert_proportional, cosine_distance, digraphs

GRID = [(k, p) for k in range(3, 13) for p in range(3, 13)]


class TestSeparatedGraph:
    """Test spectral closed forms on S(k, p)."""

    @pytest.mark.parametrize("k,p", GRID)
    def test_spectral_rows(self, k, p):
        """Test dominant, Seeley, PageRank, HITS, SALSA and Katz on S(k, p)."""
        g = gen_S(k, p)
        solvers = {
            MeasureId.DOMINANT: lambda: dominant_eigenvector(g).scores,
            MeasureId.SEELEY: lambda: seeley(g).scores,
            MeasureId.PAGERANK: lambda: pagerank(g).scores,
            MeasureId.HITS: lambda: hits(g)[0].scores,
            MeasureId.SALSA: lambda: salsa(g).scores,
        }
        for measure, solve in solvers.items():
            clique, cycle = separated_oracle(measure, k, p)
            expected = [clique.as_float()] * k + [cycle.as_float()] * p
            assert_proportional(solve(), expected, rel=1e-8)

        clique, cycle = separated_oracle(MeasureId.KATZ, k, p)
        scores = katz(g).scores
        assert scores[:k] == pytest.approx([clique.as_float()] * k, rel=1e-8)
        assert scores[k:] == pytest.approx([cycle.as_float()] * p, rel=1e-8)

    def test_eigenvalue_estimates(self):
        """Test lambda = k - 1 and mu = (k - 1)^2 on S(k, p)."""
        eigen = estimate_dominant_eigenvalues(gen_S(6, 5))

        assert eigen.lam == pytest.approx(5.0, rel=1e-10)
        assert eigen.mu == pytest.approx(25.0, rel=1e-10)


class TestBridgedGraph:
    """Test spectral closed forms on D(k, p)."""

    @pytest.mark.parametrize("k,p", GRID)
    def test_eigenvector_rows(self, k, p):
        """Test dominant and HITS rows after substituting the estimated eigenvalues."""
        g = gen_D(k, p)
        eigen = estimate_dominant_eigenvalues(g)

        dominant = bridged_oracle(MeasureId.DOMINANT, k, p, eigen=eigen)
        assert_proportional(dominant_eigenvector(g).scores, dominant.vector(k, p), rel=1e-6)

        authority = bridged_oracle(MeasureId.HITS, k, p, eigen=eigen)
        assert_proportional(hits(g)[0].scores, authority.vector(k, p), rel=1e-6)
        assert abs(hits_quartic(eigen.mu, k)) / hits_quartic_scale(eigen.mu, k) < 1e-9

    @pytest.mark.parametrize("k,p", GRID)
    def test_linear_system_rows(self, k, p):
        """Test Katz and PageRank rows against the three-unknown systems."""
        g = gen_D(k, p)
        eigen = estimate_dominant_eigenvalues(g)

        forms = bridged_oracle(MeasureId.KATZ, k, p, eigen=eigen)
        np.testing.assert_allclose(katz(g).scores, forms.vector(k, p), rtol=1e-8)

        for alpha in (0.25, 0.5, 0.75):
            params = SpectralParams(alpha=alpha)
            forms = bridged_oracle(MeasureId.PAGERANK, k, p, params)
            assert_proportional(pagerank(g, params).scores, forms.vector(k, p), rel=1e-8)

    @pytest.mark.parametrize("k,p", GRID)
    def test_rational_rows(self, k, p):
        """Test Seeley and SALSA rows."""
        g = gen_D(k, p)

        assert_proportional(seeley(g).scores, bridged_oracle(MeasureId.SEELEY, k, p).vector(k, p), rel=1e-9)
        assert_proportional(salsa(g).scores, bridged_oracle(MeasureId.SALSA, k, p).vector(k, p), rel=1e-12)

    @pytest.mark.parametrize("k,p", GRID)
    def test_clique_bridge_wins(self, k, p):
        """Test every spectral measure scores the clique bridge above the cycle bridge."""
        g = gen_D(k, p)

        for measure in (MeasureId.DOMINANT, MeasureId.SEELEY, MeasureId.KATZ,
                        MeasureId.PAGERANK, MeasureId.HITS, MeasureId.SALSA):
            scores = compute(measure, g).scores
            assert scores[0] > scores[k], measure.value


class TestPageRank:
    """Test PageRank specifics."""

    def test_two_node_fixture(self, two_node):
        """Test raw and normalized scores before and after adding 0 -> 1."""
        alpha = 0.5
        params = SpectralParams(alpha=alpha, preference=[0.0, 1.0])

        before = pagerank(two_node, params).scores
        after = pagerank(two_node.with_arc(0, 1), params).scores

        assert before.tolist() == pytest.approx([alpha * (1 - alpha), 1 - alpha], abs=1e-11)
        assert after.tolist() == pytest.approx([alpha / (1 + alpha), 1 / (1 + alpha)], abs=1e-11)
        assert before[1] / before.sum() == pytest.approx(1 / (1 + alpha), abs=1e-11)
        assert after[1] / after.sum() == pytest.approx(1 / (1 + alpha), abs=1e-11)

    def test_normalize_flag(self, two_node):
        """Test the normalized variant sums to one."""
        result = pagerank(two_node, normalize=True)

        assert result.normalized
        assert result.scores.sum() == pytest.approx(1.0)

    @settings(max_examples=100, deadline=None)
    @given(digraphs(max_nodes=30))
    def test_matches_dense_solve(self, g):
        """Test the iteration matches p = (1 - alpha) v (I - alpha Abar)^-1."""
        alpha = 0.5
        v = np.full(g.n, 1.0 / g.n)
        op = l1_normalize_rows(g).toarray()
        expected = np.linalg.solve((np.eye(g.n) - alpha * op).T, (1 - alpha) * v)

        np.testing.assert_allclose(pagerank(g, SpectralParams(alpha=alpha)).scores, expected, rtol=0, atol=1e-9)

    def test_preference_validation(self, two_node):
        """Test malformed preference vectors are rejected."""
        with pytest.raises(ParameterError):
            pagerank(two_node, SpectralParams(preference=[1.0, 0.0, 0.0]))
        with pytest.raises(ParameterError):
            pagerank(two_node, SpectralParams(preference=[0.0, 0.0]))
        with pytest.raises(ValueError):
            SpectralParams(preference=[-1.0, 2.0])

    def test_iteration_cap(self):
        """Test hitting the iteration cap raises ConvergenceError."""
        with pytest.raises(ConvergenceError) as info:
            pagerank(Graph(2, [(0, 1)]), SpectralParams(max_iters=1))
        assert info.value.iterations == 1

    def test_sweep(self, two_node):
        """Test the damping sweep runs one solve per alpha."""
        results = pagerank_sweep(two_node, [0.25, 0.5, 0.75])

        assert [r.params["alpha"] for r in results] == [0.25, 0.5, 0.75]


class TestKatz:
    """Test Katz's index."""

    def test_divergent_beta_rejected(self):
        """Test beta at or above 1/lambda is refused."""
        cycle = Graph(3, [(0, 1), (1, 2), (2, 0)])

        with pytest.raises(DivergenceError) as info:
            katz(cycle, SpectralParams(beta=1.0))
        assert info.value.limit < 1.0

    def test_acyclic_graph_uses_factor(self):
        """Test a nilpotent adjacency takes beta = beta_factor and counts paths."""
        g = Graph(3, [(0, 1), (1, 2)])
        result = katz(g, SpectralParams(beta_factor=0.5))

        assert result.params["beta"] == 0.5
        assert result.scores.tolist() == pytest.approx([1.0, 1.5, 1.75])

    def test_sweep_factors(self):
        """Test the attenuation sweep uses factor / lambda."""
        g = gen_S(5, 4)
        results = katz_sweep(g, [0.25, 0.5, 0.75])

        assert [r.params["beta"] for r in results] == pytest.approx([0.0625, 0.125, 0.1875])
        assert results[0].scores[0] < results[2].scores[0]


class TestEigenvectors:
    """Test dominant eigenvector, Seeley and HITS edge cases."""

    def test_nilpotent_graph(self):
        """Test a DAG has no dominant eigenvector and a degenerate Seeley index."""
        g = Graph(3, [(0, 1), (1, 2)])

        with pytest.raises(DegenerateSpectrumError):
            dominant_eigenvector(g)
        result = seeley(g)
        assert result.degenerate
        assert result.scores.tolist() == [0.0, 0.0, 0.0]

    def test_empty_graph(self):
        """Test the graph with no nodes."""
        with pytest.raises(DegenerateSpectrumError):
            dominant_eigenvector(Graph(0))
        assert hits(Graph(2))[0].degenerate

    def test_period_three_graph(self):
        """Test a strongly connected graph of period 3 yields its Perron vector."""
        g = Graph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 4)])
        a = g.adjacency.toarray()
        values, vectors = np.linalg.eig(a.T)
        top = int(np.argmax(values.real))

        result = dominant_eigenvector(g, SpectralParams(max_iters=100_000))

        assert result.params["lambda"] == pytest.approx(values[top].real, rel=1e-9)
        assert_proportional(result.scores, np.abs(vectors[:, top].real), rel=1e-8)
        np.testing.assert_allclose(result.scores @ a, result.params["lambda"] * result.scores, atol=1e-10)

    def test_period_three_seeley(self):
        """Test Seeley's index on a period-3 graph is the stationary vector of the walk."""
        g = Graph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 4)])
        walk = l1_normalize_rows(g).toarray()

        result = seeley(g, SpectralParams(max_iters=100_000))

        assert not result.degenerate
        assert result.scores.sum() == pytest.approx(1.0)
        np.testing.assert_allclose(result.scores @ walk, result.scores, atol=1e-10)

    def test_dangling_walk_is_degenerate(self):
        """Test Seeley's index vanishes when every walk ends in a dangling node."""
        g = Graph(4, [(0, 1), (1, 0), (1, 2), (3, 2)])

        result = seeley(g)

        assert result.degenerate
        assert result.scores.tolist() == [0.0] * 4

    def test_bipartite_star(self):
        """Test the symmetric star resolves to the Perron vector (sqrt 3, 1, 1, 1)."""
        star = Graph(4, [(0, 1), (0, 2), (0, 3), (1, 0), (2, 0), (3, 0)])
        result = dominant_eigenvector(star)

        assert result.params["lambda"] == pytest.approx(np.sqrt(3.0))
        assert_proportional(result.scores, [np.sqrt(3.0), 1.0, 1.0, 1.0], rel=1e-12)

    def test_hits_hub_and_authority(self):
        """Test authority and hub vectors on a fan."""
        authority, hub = hits(Graph(3, [(0, 1), (0, 2)]))

        assert authority.scores.tolist() == pytest.approx([0.0, 0.5, 0.5])
        assert hub.scores.tolist() == pytest.approx([1.0, 0.0, 0.0])

    def test_seeley_proportional_to_degree_on_symmetric_graphs(self):
        """Test Seeley's index is proportional to degree on connected symmetric graphs."""
        rng = np.random.default_rng(11)
        for _ in range(100):
            g = random_symmetric_connected(rng)
            assert_proportional(seeley(g).scores, g.in_degrees, rel=1e-8)


class TestSalsa:
    """Test SALSA."""

    def test_closed_form(self):
        """Test the component rule on a small graph."""
        g = Graph(6, [(3, 0), (2, 1), (4, 1), (5, 1)])

        assert salsa(g).scores.tolist() == pytest.approx([1 / 6, 1 / 6, 0, 0, 0, 0])

    @settings(max_examples=200, deadline=None)
    @given(digraphs(max_nodes=20))
    def test_matches_iterative(self, g):
        """Test the component rule agrees with the iterative definition."""
        assume(g.m > 0)

        assert_proportional(salsa(g).scores, salsa_iterative(g).scores, rel=1e-7)


@pytest.mark.slow
class TestLimits:
    """Test limit behavior on strongly connected graphs."""

    def test_pagerank_and_katz_limits(self):
        """Test PageRank(0.999) approaches Seeley and Katz(0.999/lambda) approaches the dominant eigenvector."""
        rng = np.random.default_rng(5)
        for _ in range(50):
            g = random_strongly_connected(rng, min_nodes=4)

            assert cosine_distance(pagerank(g, SpectralParams(alpha=0.999)).scores, seeley(g).scores) < 1e-2
            assert cosine_distance(katz(g, SpectralParams(beta_factor=0.999)).scores,
                                   dominant_eigenvector(g).scores) < 1e-2


class TestRegistry:
    """Test dispatch over measure ids."""

    @pytest.mark.parametrize("measure", list(MeasureId))
    def test_every_measure_dispatches(self, measure):
        """Test each id computes a vector of the right length."""
        g = gen_D(3, 4)
        result = compute(measure, g)

        assert result.measure is measure
        assert len(result) == g.n
        assert np.all(np.isfinite(result.scores))

    def test_unknown_measure(self):
        """Test unknown ids raise UnknownMeasureError."""
        with pytest.raises(UnknownMeasureError):
            compute("eigenvector", Graph(1))

    def test_normalized_output(self):
        """Test the normalize flag rescales to unit sum."""
        result = compute("harmonic", gen_S(3, 3), normalize=True)

        assert result.normalized
        assert result.scores.sum() == pytest.approx(1.0)
