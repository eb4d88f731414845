"""
Spectral centralities: dominant eigenvector, Seeley's index, Katz's index,
PageRank, HITS and SALSA.

Every iterative measure starts from the uniform vector and stops when the
relative sup-norm change between consecutive iterates drops below
``params.tol``. Operators are scipy sparse matrices applied on the right of
row vectors (``x @ A``), so a single sweep has a fixed reduction order and
results are reproducible.
"""

from dataclasses import dataclass
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np
from scipy import sparse
from scipy.sparse import csgraph

from ..core.components import strongly_connected_components
from ..core.graph import Graph, l1_normalize_rows, transpose
from ..utils.errors import (
    ConvergenceError,
    DegenerateSpectrumError,
    DivergenceError,
    ParameterError,
)
from ..utils.logging import get_logger, log_iteration_event
from .scores import EigenEstimate, MeasureId, ScoreVector, SpectralParams

logger = get_logger(__name__)

Step = Callable[[np.ndarray], np.ndarray]


@dataclass
class PowerResult:
    """Outcome of a normalized power iteration."""
    vector: np.ndarray
    iterations: int
    residual: float
    growth: float
    oscillating: bool = False
    zero: bool = False


def _relative_change(new: np.ndarray, old: np.ndarray) -> float:
    scale = float(np.max(np.abs(new))) if new.size else 0.0
    if scale == 0.0:
        return 0.0
    return float(np.max(np.abs(new - old))) / scale


def power_iterate(step: Step, start: np.ndarray, params: SpectralParams, solver: str) -> PowerResult:
    """
    Iterate ``x <- step(x) / |step(x)|_1`` from ``start``.

    A period-two oscillation (iterate i+1 matching iterate i-1 but not i) is
    resolved by combining the two alternating iterates into the eigenvector
    of the dominant eigenvalue, weighting them by the observed step norms.

    Args:
        step: Nonnegative linear map on row vectors
        start: Nonnegative start vector
        params: Tolerance and iteration cap
        solver: Name used in log events and errors

    Returns:
        PowerResult with an l1-normalized vector, or ``zero`` set when the
        iteration collapsed to the zero vector
    """
    x = start / start.sum()
    prev: Optional[np.ndarray] = None
    prev_growth = 1.0
    residual = float("inf")

    for i in range(1, params.max_iters + 1):
        y = step(x)
        growth = float(y.sum())
        if growth <= 0.0:
            log_iteration_event(logger, solver, "ZERO_VECTOR", i, 0.0)
            return PowerResult(np.zeros_like(x), i, 0.0, 0.0, zero=True)
        y /= growth
        residual = _relative_change(y, x)
        if residual < params.tol:
            log_iteration_event(logger, solver, "CONVERGED", i, residual, growth=growth)
            return PowerResult(y, i, residual, growth)
        if prev is not None and _relative_change(y, prev) < params.tol:
            lam = float(np.sqrt(prev_growth * growth))
            v = x + (growth / lam) * y
            v /= v.sum()
            log_iteration_event(logger, solver, "OSCILLATION", i, residual, growth=lam)
            return PowerResult(v, i, _relative_change(y, prev), lam, oscillating=True)
        prev, x, prev_growth = x, y, growth

    raise ConvergenceError(f"{solver} did not converge", params.max_iters, residual)


def _uniform(n: int) -> np.ndarray:
    return np.full(n, 1.0 / n) if n else np.zeros(0)


def _shifted(op: sparse.spmatrix) -> sparse.csr_matrix:
    """``op + I``: same eigenvectors, every irreducible block made primitive."""
    return (op + sparse.identity(op.shape[0], format="csr")).tocsr()


# ---- eigenvalue estimates ----------------------------------------------------

def _spectral_radius(g: Graph, params: SpectralParams) -> Tuple[float, float, int]:
    """Spectral radius of the adjacency matrix via its strongly connected blocks."""
    a = g.adjacency
    scc = strongly_connected_components(g)
    best, worst_residual, total_iters = 0.0, 0.0, 0
    loops = set(g.loops)
    for comp in scc.members:
        if len(comp) == 1 and comp[0] not in loops:
            continue
        idx = np.asarray(comp)
        shifted = _shifted(a[idx][:, idx])
        result = power_iterate(lambda x: x @ shifted, _uniform(idx.size), params, "spectral_radius")
        best = max(best, result.growth - 1.0)
        worst_residual = max(worst_residual, result.residual)
        total_iters += result.iterations
    return best, worst_residual, total_iters


def estimate_dominant_eigenvalues(g: Graph, params: Optional[SpectralParams] = None) -> EigenEstimate:
    """
    Power-method estimates of the dominant eigenvalue of A and of A^T A.

    Args:
        g: Graph
        params: Solver tolerances

    Returns:
        EigenEstimate with lam = lambda(A), mu = lambda(A^T A)
    """
    params = params or SpectralParams()
    if g.m == 0:
        return EigenEstimate(lam=0.0, mu=0.0, residual=0.0, iterations=0)

    lam, lam_residual, lam_iters = _spectral_radius(g, params)

    a = g.adjacency
    at = g.reverse_adjacency
    result = power_iterate(lambda x: (x @ at) @ a, _uniform(g.n), params, "hits_eigenvalue")
    mu = 0.0 if result.zero else result.growth

    estimate = EigenEstimate(
        lam=max(lam, 0.0),
        mu=mu,
        residual=max(lam_residual, result.residual),
        iterations=lam_iters + result.iterations,
    )
    logger.debug("Dominant eigenvalues estimated", lam=estimate.lam, mu=estimate.mu)
    return estimate


# ---- measures ----------------------------------------------------------------

def _is_nilpotent(g: Graph) -> bool:
    """No cycle and no loop, so some power of A vanishes."""
    return not g.loops and strongly_connected_components(g).count == g.n


def _has_closed_class(g: Graph) -> bool:
    """Some terminal strongly connected component carries an arc."""
    scc = strongly_connected_components(g)
    loops = set(g.loops)
    return any(
        terminal and (len(comp) > 1 or comp[0] in loops)
        for comp, terminal in zip(scc.members, scc.terminal or ())
    )


def dominant_eigenvector(g: Graph, params: Optional[SpectralParams] = None) -> ScoreVector:
    """
    Left dominant eigenvector of the adjacency matrix, l1-normalized.

    Iterates ``x <- x (A + I)``, which shares the Perron vector of A but
    converges on periodic graphs where ``x <- x A`` cycles forever.
    """
    params = params or SpectralParams()
    if g.n == 0:
        raise DegenerateSpectrumError("dominant eigenvector of the empty graph")
    if _is_nilpotent(g):
        raise DegenerateSpectrumError("adjacency matrix is nilpotent: power iteration reaches zero")
    op = _shifted(g.adjacency)
    result = power_iterate(lambda x: x @ op, _uniform(g.n), params, "dominant")
    return ScoreVector(
        MeasureId.DOMINANT,
        result.vector,
        {"lambda": result.growth - 1.0, "iterations": result.iterations, "residual": result.residual},
        normalized=True,
    )


def seeley(g: Graph, params: Optional[SpectralParams] = None) -> ScoreVector:
    """
    Limit of x <- x Abar from the uniform vector (Abar row-normalized).

    The walk runs lazily, ``x <- x (Abar + I) / 2``: stationary vectors are
    the same and periodic chains settle on their average. Mass leaking
    through dangling nodes or transient parts vanishes in the limit; when
    the dominant eigenvalue of Abar is below one the limit is the zero
    vector, reported as degenerate.
    """
    params = params or SpectralParams()
    if g.n == 0:
        return ScoreVector(MeasureId.SEELEY, np.zeros(0), degenerate=True)
    if not _has_closed_class(g):
        # every walk ends in a dangling node
        return ScoreVector(MeasureId.SEELEY, np.zeros(g.n), {"iterations": 0, "residual": 0.0}, degenerate=True)
    op = _shifted(l1_normalize_rows(g)) * 0.5
    result = power_iterate(lambda x: x @ op, _uniform(g.n), params, "seeley")
    info = {"iterations": result.iterations, "residual": result.residual}
    if result.zero or result.growth < 1.0 - 1e-9:
        return ScoreVector(MeasureId.SEELEY, np.zeros(g.n), info, degenerate=True)
    return ScoreVector(MeasureId.SEELEY, result.vector, info, normalized=True)


def resolve_beta(g: Graph, params: SpectralParams, eigen: Optional[EigenEstimate] = None) -> Tuple[float, EigenEstimate]:
    """
    Attenuation factor for Katz's index, checked against the estimated
    dominant eigenvalue.

    Returns:
        (beta, eigen estimate used)

    Raises:
        DivergenceError: beta >= (1 - margin) / lambda
    """
    eigen = eigen or estimate_dominant_eigenvalues(g, params)
    if params.beta is not None:
        beta = params.beta
    elif eigen.lam > 0.0:
        beta = params.beta_factor / eigen.lam
    else:
        beta = params.beta_factor
    limit = eigen.beta_limit(params.katz_margin)
    if beta >= limit:
        raise DivergenceError(beta, limit)
    return beta, eigen


def katz(g: Graph,
         params: Optional[SpectralParams] = None,
         eigen: Optional[EigenEstimate] = None) -> ScoreVector:
    """
    Katz's index: 1 sum_i beta^i A^i, computed as the fixed point of
    k = 1 + beta k A by Jacobi iteration from the all-ones vector.
    """
    params = params or SpectralParams()
    beta, eigen = resolve_beta(g, params, eigen)
    a = g.adjacency
    ones = np.ones(g.n)
    k = ones.copy()
    residual = float("inf")
    for i in range(1, params.max_iters + 1):
        nxt = ones + beta * (k @ a)
        residual = _relative_change(nxt, k)
        k = nxt
        if residual < params.tol:
            log_iteration_event(logger, "katz", "CONVERGED", i, residual, beta=beta)
            return ScoreVector(
                MeasureId.KATZ,
                k,
                {"beta": beta, "lambda": eigen.lam, "iterations": i, "residual": residual},
            )
    raise ConvergenceError("katz did not converge", params.max_iters, residual)


def _preference(g: Graph, params: SpectralParams) -> np.ndarray:
    if params.preference is None:
        return _uniform(g.n)
    v = np.asarray(params.preference, dtype=np.float64)
    if v.size != g.n:
        raise ParameterError(f"preference vector has {v.size} entries, graph has {g.n} nodes")
    total = v.sum()
    if total <= 0.0:
        raise ParameterError("preference vector must have positive mass")
    return v / total


def pagerank(g: Graph, params: Optional[SpectralParams] = None, normalize: bool = False) -> ScoreVector:
    """
    PageRank without patching of dangling nodes: the fixed point of
    p = alpha p Abar + (1 - alpha) v, iterated from p = v.

    Args:
        g: Graph
        params: alpha, preference vector and tolerances
        normalize: Rescale the result to unit l1 norm

    Returns:
        ScoreVector; its sum is below one when dangling nodes exist
    """
    params = params or SpectralParams()
    alpha = params.alpha
    v = _preference(g, params)
    op = l1_normalize_rows(g)
    teleport = (1.0 - alpha) * v
    p = v.copy()
    residual = float("inf")
    for i in range(1, params.max_iters + 1):
        nxt = alpha * (p @ op) + teleport
        residual = _relative_change(nxt, p)
        p = nxt
        if residual < params.tol:
            log_iteration_event(logger, "pagerank", "CONVERGED", i, residual, alpha=alpha)
            scores = ScoreVector(
                MeasureId.PAGERANK, p, {"alpha": alpha, "iterations": i, "residual": residual}
            )
            return scores.l1_normalized() if normalize else scores
    raise ConvergenceError("pagerank did not converge", params.max_iters, residual)


def hits(g: Graph, params: Optional[SpectralParams] = None) -> Tuple[ScoreVector, ScoreVector]:
    """
    HITS authority and hub scores.

    Iterates h <- a A^T, a <- h A from a = 1 with l1 normalization of a;
    the authority vector converges to a dominant eigenvector of A^T A.

    Returns:
        (authority, hub), both l1-normalized
    """
    params = params or SpectralParams()
    if g.m == 0:
        zeros = np.zeros(g.n)
        return (
            ScoreVector(MeasureId.HITS, zeros, {"role": "authority"}, degenerate=True),
            ScoreVector(MeasureId.HITS, zeros.copy(), {"role": "hub"}, degenerate=True),
        )
    a = g.adjacency
    at = g.reverse_adjacency
    result = power_iterate(lambda x: (x @ at) @ a, _uniform(g.n), params, "hits")
    hub = result.vector @ at
    hub /= hub.sum()
    info = {"mu": result.growth, "iterations": result.iterations, "residual": result.residual}
    return (
        ScoreVector(MeasureId.HITS, result.vector, {**info, "role": "authority"}, normalized=True),
        ScoreVector(MeasureId.HITS, hub, {**info, "role": "hub"}, normalized=True),
    )


def salsa_components(g: Graph) -> np.ndarray:
    """
    Component label per node in the graph where two nodes are adjacent when
    they share a predecessor; nodes without predecessors get label -1.

    Components are read off the bipartite hub/authority graph, whose size is
    linear in the number of arcs.
    """
    n = g.n
    bipartite = sparse.csr_matrix(
        (np.ones(g.m), (g.sources, g.targets + n)), shape=(2 * n, 2 * n)
    )
    _, labels = csgraph.connected_components(bipartite, directed=False)
    authority = labels[n:].astype(np.int64)
    return np.where(g.in_degrees > 0, authority, -1)


def salsa(g: Graph) -> ScoreVector:
    """
    SALSA authority scores by the non-iterative rule: within each component
    of the shared-predecessor graph, indegree over the component's total
    indegree, times the component size over n.
    """
    n = g.n
    if g.m == 0:
        return ScoreVector(MeasureId.SALSA, np.zeros(n), degenerate=True)
    labels = salsa_components(g)
    indeg = g.in_degrees
    active = labels >= 0
    _, dense = np.unique(labels[active], return_inverse=True)
    size = np.bincount(dense)
    indeg_sum = np.bincount(dense, weights=indeg[active]).astype(np.int64)
    scores = np.zeros(n)
    numerator = indeg[active] * size[dense]
    denominator = indeg_sum[dense] * n
    scores[active] = numerator / denominator
    return ScoreVector(MeasureId.SALSA, scores, {"components": int(size.size)})


def salsa_iterative(g: Graph, params: Optional[SpectralParams] = None) -> ScoreVector:
    """SALSA by its update rule h <- a Abar^T, a <- h Abar, l1-normalized."""
    params = params or SpectralParams()
    if g.m == 0:
        return ScoreVector(MeasureId.SALSA, np.zeros(g.n), degenerate=True)
    forward = l1_normalize_rows(g)
    backward = l1_normalize_rows(transpose(g))
    result = power_iterate(lambda x: (x @ backward) @ forward, np.ones(g.n), params, "salsa")
    return ScoreVector(
        MeasureId.SALSA,
        result.vector,
        {"iterations": result.iterations, "residual": result.residual},
        normalized=True,
    )


# ---- parameter sweeps --------------------------------------------------------

def katz_sweep(g: Graph, factors: Sequence[float], params: Optional[SpectralParams] = None) -> List[ScoreVector]:
    """Katz's index for beta = factor / lambda, one vector per factor."""
    params = params or SpectralParams()
    eigen = estimate_dominant_eigenvalues(g, params)
    return [
        katz(g, params.model_copy(update={"beta": None, "beta_factor": f}), eigen)
        for f in factors
    ]


def pagerank_sweep(g: Graph, alphas: Sequence[float], params: Optional[SpectralParams] = None) -> List[ScoreVector]:
    """PageRank for each damping factor."""
    params = params or SpectralParams()
    return [pagerank(g, params.model_copy(update={"alpha": a})) for a in alphas]
