"""
Shared fixtures and helpers.
"""

import pytest

from axcent.core.graph import Graph
from axcent.utils.config import (
    AppConfig,
    AxiomConfig,
    DensityAxiomConfig,
    MonotonicityConfig,
    SearchBound,
    SizeAxiomConfig,
)


@pytest.fixture
def small_config() -> AppConfig:
    """Configuration with search bounds and samples small enough for unit tests."""
    return AppConfig(
        axioms=AxiomConfig(
            size=SizeAxiomConfig(
                k_sample=[3, 4],
                p_sample=[3, 4],
                bounds={
                    "default": SearchBound(p=200, k=60),
                    "betweenness": SearchBound(p=64, k=24),
                },
            ),
            density=DensityAxiomConfig(k_sample=[3, 4, 5]),
            monotonicity=MonotonicityConfig(trials=40, max_nodes=12, seed=1),
        )
    )


@pytest.fixture
def two_node() -> Graph:
    """Arc 1 -> 0."""
    return Graph(2, [(1, 0)])
