"""
Closed-form scores on the benchmark graphs.

``separated_oracle`` covers the clique and cycle nodes of S(k, p);
``bridged_oracle`` covers the four node roles of D(k, p). Rational entries
are exact Fractions. Spectral entries depend on the estimated dominant
eigenvalues, and the Katz and PageRank entries on the clique-bridge score,
which comes from solving the three-unknown linear system obtained by
unrolling the cycle equations.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple, Union

import numpy as np

from ..core.numbers import harmonic_number, iverson
from ..measures.scores import EigenEstimate, MeasureId, SpectralParams
from ..utils.errors import ParameterError

Value = Union[Fraction, float]

# rows whose predictions are exact rationals
EXACT = frozenset({
    MeasureId.DEGREE, MeasureId.HARMONIC, MeasureId.CLOSENESS, MeasureId.LIN,
    MeasureId.BETWEENNESS, MeasureId.SEELEY, MeasureId.SALSA,
})


@dataclass(frozen=True)
class ClosedForm:
    """Predicted score of one node role; only ratios matter when proportional."""
    measure: MeasureId
    role: str
    value: Value
    proportional: bool = False

    def as_float(self) -> float:
        return float(self.value)


@dataclass(frozen=True)
class DensityForms:
    """Predictions for the roles of D(k, p); ``cycle[d-1]`` is the node at distance d."""
    measure: MeasureId
    clique: ClosedForm
    clique_bridge: ClosedForm
    cycle_bridge: ClosedForm
    cycle: Tuple[ClosedForm, ...]

    @property
    def proportional(self) -> bool:
        return self.clique.proportional

    def vector(self, k: int, p: int) -> np.ndarray:
        """Predictions laid out by node id."""
        out = np.empty(k + p)
        out[0] = self.clique_bridge.as_float()
        out[1:k] = self.clique.as_float()
        out[k] = self.cycle_bridge.as_float()
        out[k + 1:] = [c.as_float() for c in self.cycle]
        return out


def _katz_beta(params: SpectralParams, lam: float) -> float:
    if params.beta is not None:
        return params.beta
    return params.beta_factor / lam if lam > 0 else params.beta_factor


# ---- S(k, p) -------------------------------------------------------------------

def separated_oracle(measure: "MeasureId | str",
                     k: int,
                     p: int,
                     params: Optional[SpectralParams] = None) -> Tuple[ClosedForm, ClosedForm]:
    """
    Predicted (clique node, cycle node) scores on S(k, p), for k, p >= 2.

    Katz uses params.beta, or beta_factor over the spectral radius
    max(k - 1, 1) of S(k, p).
    """
    mid = MeasureId.parse(measure)
    params = params or SpectralParams()
    if k < 2 or p < 2:
        raise ParameterError("closed forms on S(k, p) assume k >= 2 and p >= 2")

    def pair(clique: Value, cycle: Value, prop: bool = False) -> Tuple[ClosedForm, ClosedForm]:
        return ClosedForm(mid, "clique", clique, prop), ClosedForm(mid, "cycle", cycle, prop)

    if mid is MeasureId.DEGREE:
        return pair(Fraction(k - 1), Fraction(1))
    if mid is MeasureId.HARMONIC:
        return pair(Fraction(k - 1), harmonic_number(p - 1))
    if mid is MeasureId.CLOSENESS:
        return pair(Fraction(1, k - 1), Fraction(2, p * (p - 1)))
    if mid is MeasureId.LIN:
        return pair(Fraction(k * k, k - 1), Fraction(2 * p, p - 1))
    if mid is MeasureId.BETWEENNESS:
        return pair(Fraction(0), Fraction((p - 1) * (p - 2), 2))
    if mid in (MeasureId.DOMINANT, MeasureId.HITS):
        return pair(Fraction(1), Fraction(0), prop=True)
    if mid in (MeasureId.SEELEY, MeasureId.PAGERANK, MeasureId.SALSA):
        return pair(Fraction(1), Fraction(1), prop=True)
    if mid is MeasureId.KATZ:
        beta = _katz_beta(params, float(max(k - 1, 1)))
        return pair(1.0 / (1.0 - (k - 1) * beta), 1.0 / (1.0 - beta))
    raise ParameterError(f"{mid.value} has no closed form on S(k, p)")


# ---- D(k, p) -------------------------------------------------------------------

def katz_bridge_system(k: int, p: int, beta: float) -> np.ndarray:
    """Solve for (clique bridge, clique, cycle bridge) Katz scores on D(k, p)."""
    geometric_tail = (1.0 - beta ** (p - 1)) / (1.0 - beta)
    lhs = np.array([
        [1.0, -beta * (k - 1), -beta],
        [-beta, 1.0 - beta * (k - 2), 0.0],
        [-beta, 0.0, 1.0 - beta ** p],
    ])
    rhs = np.array([1.0, 1.0, 1.0 + beta * geometric_tail])
    return np.linalg.solve(lhs, rhs)


def pagerank_bridge_system(k: int, p: int, alpha: float) -> np.ndarray:
    """
    Solve for (clique bridge, clique, cycle bridge) PageRank scores on
    D(k, p) with the all-ones preference vector.
    """
    lhs = np.array([
        [1.0, -alpha, -alpha / 2.0],
        [-alpha / k, 1.0 - alpha * (k - 2) / (k - 1), 0.0],
        [-alpha / k, 0.0, 1.0 - alpha ** p / 2.0],
    ])
    rhs = np.array([1.0 - alpha, 1.0 - alpha, 1.0 - alpha + alpha * (1.0 - alpha ** (p - 1))])
    return np.linalg.solve(lhs, rhs)


def hits_quartic(mu: float, k: int) -> float:
    """Quartic factor of the characteristic polynomial of A^T A on D(k, p)."""
    return (
        mu ** 4
        - (k * k - 2 * k + 6) * mu ** 3
        + (5 * k * k - 12 * k + 15) * mu ** 2
        - (6 * k * k - 16 * k + 14) * mu
        + k * k - 2 * k + 1
    )


def hits_quartic_scale(mu: float, k: int) -> float:
    """Sum of the absolute values of the quartic's terms, for relative residuals."""
    return (
        mu ** 4
        + (k * k - 2 * k + 6) * mu ** 3
        + (5 * k * k - 12 * k + 15) * mu ** 2
        + (6 * k * k - 16 * k + 14) * mu
        + k * k - 2 * k + 1
    )


def bridged_oracle(measure: "MeasureId | str",
                   k: int,
                   p: int,
                   params: Optional[SpectralParams] = None,
                   eigen: Optional[EigenEstimate] = None) -> DensityForms:
    """
    Predicted scores on D(k, p) for every node role.

    Args:
        measure: Tabulated measure
        k: Clique size (>= 3)
        p: Cycle length (>= 3)
        params: alpha for PageRank, beta or beta_factor for Katz
        eigen: Estimated dominant eigenvalues, required by the dominant,
            HITS and Katz rows

    Returns:
        DensityForms
    """
    mid = MeasureId.parse(measure)
    params = params or SpectralParams()
    if k < 3 or p < 3:
        raise ParameterError("closed forms on D(k, p) assume k >= 3 and p >= 3")
    needs_eigen = mid in (MeasureId.DOMINANT, MeasureId.HITS) or (
        mid is MeasureId.KATZ and params.beta is None
    )
    if needs_eigen and eigen is None:
        raise ParameterError(f"{mid.value} closed form needs an eigenvalue estimate")

    ds = range(1, p)

    def forms(clique: Value, lbridge: Value, rbridge: Value, cycle, prop: bool = False) -> DensityForms:
        return DensityForms(
            mid,
            ClosedForm(mid, "clique", clique, prop),
            ClosedForm(mid, "clique-bridge", lbridge, prop),
            ClosedForm(mid, "cycle-bridge", rbridge, prop),
            tuple(ClosedForm(mid, f"cycle@{d}", cycle(d), prop) for d in ds),
        )

    tri = Fraction(p * (p - 1), 2)
    if mid is MeasureId.DEGREE:
        return forms(Fraction(k - 1), Fraction(k), Fraction(2), lambda d: Fraction(1))
    if mid is MeasureId.HARMONIC:
        return forms(
            k - 2 + harmonic_number(p + 1),
            k - 1 + harmonic_number(p),
            1 + Fraction(k - 1, 2) + harmonic_number(p - 1),
            lambda d: Fraction(1, d + 1) + Fraction(k - 1, d + 2) + harmonic_number(p - 1),
        )
    if mid in (MeasureId.CLOSENESS, MeasureId.LIN):
        scale = Fraction((k + p) ** 2) if mid is MeasureId.LIN else Fraction(1)
        return forms(
            scale / (k - 1 + 2 * p + tri),
            scale / (k - 1 + p + tri),
            scale / (2 * k - 1 + tri),
            lambda d: scale / (k * (d + 2) - 1 + tri),
        )
    if mid is MeasureId.BETWEENNESS:
        inner = Fraction((p - 1) * (p - 2), 2)
        return forms(
            Fraction(0),
            Fraction(2 * p * (k - 1)),
            2 * k * (p - 1) + inner,
            lambda d: k * (p - 2) + inner,
        )
    if mid is MeasureId.SEELEY:
        return forms(Fraction(k - 1), Fraction(k), Fraction(2), lambda d: Fraction(1), prop=True)
    if mid is MeasureId.SALSA:
        return forms(
            Fraction((k - 1) * (k + 2)),
            Fraction(k * (k + 2)),
            Fraction(2 * (k + 2)),
            lambda d: Fraction(k + 2 + iverson(d != 1) * (k * k - 2 * k + 2)),
            prop=True,
        )
    if mid is MeasureId.DOMINANT:
        lam = eigen.lam
        return forms(
            1.0 / (lam - k + 1),
            1.0 + 1.0 / (lam - k + 1),
            1.0 + lam,
            lambda d: (1.0 + lam) / lam ** d,
            prop=True,
        )
    if mid is MeasureId.HITS:
        mu = eigen.mu
        return forms(
            mu * mu - mu * (k + 1) + k - 1,
            (k - 1) * (k - 2) * (mu - 1.0),
            mu ** 3 - (k * k - 2 * k + 4) * mu ** 2 + (3 * k * k - 7 * k + 6) * mu - (k - 1) ** 2,
            lambda d: float(iverson(d == 1) * (k - 1) * (k - 2)),
            prop=True,
        )
    if mid is MeasureId.KATZ:
        beta = _katz_beta(params, eigen.lam if eigen is not None else 0.0)
        ell = float(katz_bridge_system(k, p, beta)[0])
        return forms(
            (1.0 + beta * ell) / (1.0 - beta * (k - 2)),
            ell,
            1.0 / (1.0 - beta) + beta / (1.0 - beta ** p) * ell,
            lambda d: 1.0 / (1.0 - beta) + beta ** (d + 1) / (1.0 - beta ** p) * ell,
        )
    if mid is MeasureId.PAGERANK:
        alpha = params.alpha
        ell = float(pagerank_bridge_system(k, p, alpha)[0])
        gap = (alpha * ell - k) / (k * (2.0 - alpha ** p))
        return forms(
            (k - 1) * (k - alpha * k + alpha * ell) / (k * (k - 1 - alpha * (k - 2))),
            ell,
            2.0 + 2.0 * gap,
            lambda d: 1.0 + alpha ** d * gap,
            prop=True,
        )
    raise ParameterError(f"{mid.value} has no closed form on D(k, p)")


def watershed_formula(measure: "MeasureId | str", p: int) -> Optional[int]:
    """
    Least k >= 3 at which the clique bridge outscores the cycle bridge in
    D(k, p), as predicted by the closed forms; None when not tabulated.
    """
    mid = MeasureId.parse(measure)
    if mid in (MeasureId.CLOSENESS, MeasureId.LIN):
        return max(3, p + 1)
    if mid is MeasureId.BETWEENNESS:
        return max(3, (p * p + p + 2) // 4 + 1)
    if mid in (MeasureId.DEGREE, MeasureId.HARMONIC) or mid.is_spectral:
        return 3
    return None

