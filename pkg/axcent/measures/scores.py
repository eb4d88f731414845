"""
Score vectors, measure identifiers and solver parameters shared by all
centrality measures.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator


class MeasureId(Enum):
    """Stable lowercase measure identifiers."""
    DEGREE = "degree"
    HARMONIC = "harmonic"
    CLOSENESS = "closeness"
    LIN = "lin"
    BETWEENNESS = "betweenness"
    DOMINANT = "dominant"
    SEELEY = "seeley"
    KATZ = "katz"
    PAGERANK = "pagerank"
    HITS = "hits"
    SALSA = "salsa"
    BETA = "beta"
    INDEGREE_CO = "indegree-co"
    INDEGREE_WEAK = "indegree-weak"
    BETA_CO = "beta-co"
    BETA_WEAK = "beta-weak"

    @classmethod
    def parse(cls, value: "str | MeasureId") -> "MeasureId":
        from ..utils.errors import UnknownMeasureError

        if isinstance(value, MeasureId):
            return value
        try:
            return cls(value)
        except ValueError:
            raise UnknownMeasureError(value) from None

    @property
    def is_geometric(self) -> bool:
        return self in GEOMETRIC

    @property
    def is_spectral(self) -> bool:
        return self in SPECTRAL


GEOMETRIC = frozenset({MeasureId.DEGREE, MeasureId.HARMONIC, MeasureId.CLOSENESS, MeasureId.LIN})
SPECTRAL = frozenset({
    MeasureId.DOMINANT, MeasureId.SEELEY, MeasureId.KATZ,
    MeasureId.PAGERANK, MeasureId.HITS, MeasureId.SALSA,
})
NAIVE = frozenset({
    MeasureId.INDEGREE_CO, MeasureId.INDEGREE_WEAK, MeasureId.BETA_CO, MeasureId.BETA_WEAK,
})

# the eleven measures of the axiom matrix, in table order
TABLE_MEASURES: List[MeasureId] = [
    MeasureId.DEGREE, MeasureId.HARMONIC, MeasureId.CLOSENESS, MeasureId.LIN,
    MeasureId.BETWEENNESS, MeasureId.DOMINANT, MeasureId.SEELEY, MeasureId.KATZ,
    MeasureId.PAGERANK, MeasureId.HITS, MeasureId.SALSA,
]


@dataclass(frozen=True)
class ScoreVector:
    """
    Per-node scores of one measure.

    Attributes:
        measure: Measure identifier
        scores: One finite value per node
        params: Parameters actually used (alpha, beta, iterations, residual...)
        normalized: True when the values were rescaled by a common positive factor
        degenerate: True when the result is the all-zero vector by convention
    """

    measure: MeasureId
    scores: np.ndarray
    params: Dict[str, Any] = field(default_factory=dict)
    normalized: bool = False
    degenerate: bool = False

    def __post_init__(self) -> None:
        if not np.all(np.isfinite(self.scores)):
            raise ValueError(f"{self.measure.value}: non-finite score")
        self.scores.setflags(write=False)

    def __len__(self) -> int:
        return int(self.scores.size)

    def __getitem__(self, x: int) -> float:
        return float(self.scores[x])

    def l1_normalized(self) -> "ScoreVector":
        """Copy rescaled to unit sum (unchanged when the sum is zero)."""
        total = float(np.sum(self.scores))
        if total <= 0.0:
            return self
        return ScoreVector(self.measure, self.scores / total, dict(self.params), True, self.degenerate)

    def header(self) -> List[str]:
        """Parameter echo lines for TSV output."""
        lines = [f"measure: {self.measure.value}"]
        lines += [f"{key}: {self.params[key]}" for key in sorted(self.params)]
        if self.normalized:
            lines.append("normalized: l1")
        if self.degenerate:
            lines.append("degenerate: zero vector")
        return lines


class SpectralParams(BaseModel):
    """Parameters of the spectral solvers."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    alpha: float = Field(default=0.5, ge=0.0, lt=1.0)
    beta: Optional[float] = Field(default=None, gt=0.0)
    beta_factor: float = Field(default=0.5, gt=0.0, lt=1.0)
    tol: float = Field(default=1e-12, gt=0.0)
    max_iters: int = Field(default=1_000_000, ge=1)
    katz_margin: float = Field(default=1e-6, ge=0.0, lt=1.0)
    preference: Optional[List[float]] = None

    @field_validator("preference")
    @classmethod
    def validate_preference(cls, v: Optional[List[float]]) -> Optional[List[float]]:
        if v is not None and any(not np.isfinite(x) or x < 0 for x in v):
            raise ValueError("preference entries must be finite and nonnegative")
        return v

    @classmethod
    def from_config(cls, spectral: Any, **overrides: Any) -> "SpectralParams":
        """Build from the ``spectral`` config section plus explicit overrides."""
        base = {
            "alpha": spectral.alpha,
            "beta_factor": spectral.beta_factor,
            "tol": spectral.tol,
            "max_iters": spectral.max_iters,
            "katz_margin": spectral.katz_margin,
        }
        base.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**base)


class EigenEstimate(BaseModel):
    """Dominant-eigenvalue estimates of A and of A^T A."""

    lam: float = Field(ge=0.0)
    mu: float = Field(ge=0.0)
    residual: float = Field(ge=0.0)
    iterations: int = 0

    def beta_limit(self, margin: float = 1e-6) -> float:
        """Largest admissible Katz attenuation factor (exclusive)."""
        return float("inf") if self.lam == 0.0 else (1.0 - margin) / self.lam
