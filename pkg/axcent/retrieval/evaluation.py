"""
Retrieval evaluation: solve each conjunctive query over the term index,
rank the induced subgraph by a centrality measure and score the ranking
against the relevance judgments.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence

import numpy as np
from pydantic import BaseModel, Field

from ..measures.registry import compute
from ..measures.scores import MeasureId, SpectralParams
from ..utils.config import AppConfig
from ..utils.errors import DegenerateSpectrumError, ParameterError
from ..utils.logging import get_logger, log_metric
from ..utils.parallel import ordered_map
from .corpus import Corpus, induced_subgraph
from .metrics import ndcg_at_k, precision_at_k

NO_RANKING = "none"


def rank_by(scores: Sequence[float], ids: Optional[Sequence[int]] = None) -> List[int]:
    """
    Document ids in descending score order, ties broken by ascending id.

    Args:
        scores: One score per position
        ids: Document id of each position (defaults to the position itself)
    """
    s = np.asarray(scores, dtype=np.float64)
    doc_ids = np.arange(s.size) if ids is None else np.asarray(ids, dtype=np.int64)
    order = np.lexsort((doc_ids, -s))
    return [int(d) for d in doc_ids[order]]


class QueryResult(BaseModel):
    """Outcome of a single query."""

    query: str
    matched: int
    ranking: List[int]
    precision: float = Field(ge=0.0, le=1.0)
    ndcg: float = Field(ge=0.0, le=1.0)
    empty: bool = False

    @property
    def null_score(self) -> bool:
        return self.ndcg == 0.0


class EvalRun(BaseModel):
    """Per-query results and their means for one ranking function."""

    label: str
    measure: str
    params: Dict[str, Any] = Field(default_factory=dict)
    cutoff: int = 10
    results: List[QueryResult] = Field(default_factory=list)

    @property
    def mean_precision(self) -> float:
        return float(np.mean([r.precision for r in self.results])) if self.results else 0.0

    @property
    def mean_ndcg(self) -> float:
        return float(np.mean([r.ndcg for r in self.results])) if self.results else 0.0

    @property
    def null_score_queries(self) -> int:
        return sum(r.null_score for r in self.results)

    @property
    def empty_queries(self) -> int:
        return sum(r.empty for r in self.results)

    def summary(self) -> Dict[str, Any]:
        return {
            "label": self.label,
            "measure": self.measure,
            "params": self.params,
            f"ndcg@{self.cutoff}": self.mean_ndcg,
            f"p@{self.cutoff}": self.mean_precision,
            "queries": len(self.results),
            "null_score_queries": self.null_score_queries,
            "empty_queries": self.empty_queries,
        }


@dataclass(frozen=True)
class EvalSpec:
    """One row of an evaluation table: a label, a measure and parameter overrides."""
    label: str
    measure: str
    overrides: Dict[str, Any] = field(default_factory=dict)


def _fraction_label(value: float) -> str:
    quarters = value * 4
    if abs(quarters - round(quarters)) < 1e-12:
        return f"{int(round(quarters))}/4"
    return f"{value:g}"


def sweep_specs(config: AppConfig, measures: Optional[Sequence[str]] = None) -> List[EvalSpec]:
    """
    Evaluation rows: the no-ranking baseline, then each measure, with Katz
    and PageRank expanded over the configured parameter sweeps.
    """
    names = list(measures) if measures else [NO_RANKING] + [m.value for m in MeasureId]
    specs: List[EvalSpec] = []
    for name in names:
        if name == MeasureId.KATZ.value:
            specs += [
                EvalSpec(f"katz {_fraction_label(f)}lambda", name, {"beta_factor": f, "beta": None})
                for f in config.spectral.sweep.beta_factors
            ]
        elif name == MeasureId.PAGERANK.value:
            specs += [
                EvalSpec(f"pagerank {_fraction_label(a)}", name, {"alpha": a})
                for a in config.spectral.sweep.alphas
            ]
        else:
            specs.append(EvalSpec(name, name))
    return specs


class Evaluator:
    """
    Runs queries of a corpus through a ranking function.

    Args:
        corpus: Corpus to evaluate on
        config: Application configuration (cutoff, threads, spectral defaults)
    """

    def __init__(self, corpus: Corpus, config: AppConfig):
        self.logger = get_logger(__name__)
        self.corpus = corpus
        self.config = config
        self.cutoff = config.retrieval.cutoff

    def _rank(self, measure: str, params: SpectralParams, docs: List[int]) -> List[int]:
        if measure == NO_RANKING:
            return list(docs)
        sub, mapping = induced_subgraph(self.corpus.graph, docs)
        try:
            scores = compute(measure, sub, params, chunk=self.config.compute.sweep_chunk).scores
        except DegenerateSpectrumError:
            # nilpotent subgraph: nothing to rank by
            scores = np.zeros(sub.n)
        return rank_by(scores, mapping)

    def evaluate_query(self, query: str, measure: str, params: SpectralParams) -> QueryResult:
        if query not in self.corpus.queries:
            raise ParameterError(f"unknown query id: {query!r}")
        terms = self.corpus.queries[query]
        docs = self.corpus.match(terms)
        qrels = self.corpus.judgments(query)
        if not docs:
            self.logger.warning("Query matched no documents", query=query, terms=list(terms))
            return QueryResult(query=query, matched=0, ranking=[], precision=0.0, ndcg=0.0, empty=True)
        ranking = self._rank(measure, params, docs)
        return QueryResult(
            query=query,
            matched=len(docs),
            ranking=ranking,
            precision=precision_at_k(ranking, qrels, self.cutoff),
            ndcg=ndcg_at_k(ranking, qrels, self.cutoff),
        )

    def run(self, spec: EvalSpec, queries: Optional[Sequence[str]] = None) -> EvalRun:
        """Evaluate one row over the given (default: all) queries."""
        if spec.measure != NO_RANKING:
            MeasureId.parse(spec.measure)
        params = SpectralParams.from_config(self.config.spectral).model_copy(update=spec.overrides)
        names = list(queries) if queries is not None else list(self.corpus.queries)
        results = ordered_map(
            lambda q: self.evaluate_query(q, spec.measure, params),
            names,
            self.config.compute.threads,
        )
        run = EvalRun(label=spec.label, measure=spec.measure, params=dict(spec.overrides),
                      cutoff=self.cutoff, results=results)
        log_metric(self.logger, f"ndcg@{self.cutoff}", run.mean_ndcg, tags={"label": spec.label})
        log_metric(self.logger, f"p@{self.cutoff}", run.mean_precision, tags={"label": spec.label})
        return run

    def run_table(self, specs: Sequence[EvalSpec]) -> List[EvalRun]:
        return [self.run(spec) for spec in specs]


def run_eval(corpus: Corpus,
             measure: str,
             config: AppConfig,
             overrides: Optional[Dict[str, Any]] = None,
             queries: Optional[Sequence[str]] = None) -> EvalRun:
    """
    Evaluate a single measure (or ``"none"`` for identity order).

    Raises:
        UnknownMeasureError: measure id not recognised
    """
    spec = EvalSpec(measure, measure, dict(overrides or {}))
    return Evaluator(corpus, config).run(spec, queries)


def table_lines(runs: Sequence[EvalRun]) -> List[str]:
    """TSV table: label, NDCG@k, P@k and the null-score query count."""
    if not runs:
        return []
    k = runs[0].cutoff
    lines = [f"# ties: stable by document id\nmeasure\tNDCG@{k}\tP@{k}\tnull\n"]
    for run in runs:
        lines.append(f"{run.label}\t{run.mean_ndcg:.4f}\t{run.mean_precision:.4f}\t{run.null_score_queries}\n")
    return lines
