"""
Axiom checks: size, density and score monotonicity, the watershed scan and
the full verdict matrix.

Strict comparisons treat two scores as tied when they differ by at most
``tie_tolerance`` times the largest score of the vector they come from.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, Field

from ..core.graph import Graph, load_graph, serialize_graph
from ..measures.geometric import geometric_scores
from ..measures.registry import compute
from ..measures.scores import GEOMETRIC, TABLE_MEASURES, MeasureId, SpectralParams
from ..measures.spectral import resolve_beta
from ..utils.config import AppConfig, load_config
from ..utils.errors import (
    AxiomMismatchError,
    ConvergenceError,
    DegenerateSpectrumError,
    DivergenceError,
)
from ..utils.logging import get_logger, log_verdict_event
from .fixtures import Counterexample, all_fixtures, random_absent_arc, random_graph
from .generators import Family, GeneratorSpec


class Axiom(Enum):
    SIZE = "size"
    DENSITY = "density"
    MONOTONICITY = "monotonicity"


class SizeVerdict(Enum):
    YES = "yes"
    ONLY_K = "only k"
    ONLY_P = "only p"
    NO = "no"


YES, NO = "yes", "no"

# expected verdicts: (size, density, score monotonicity)
EXPECTED: Dict[MeasureId, Tuple[str, str, str]] = {
    MeasureId.DEGREE: ("only k", YES, YES),
    MeasureId.HARMONIC: (YES, YES, YES),
    MeasureId.CLOSENESS: (NO, NO, NO),
    MeasureId.LIN: ("only k", NO, NO),
    MeasureId.BETWEENNESS: ("only p", NO, NO),
    MeasureId.DOMINANT: ("only k", YES, NO),
    MeasureId.SEELEY: (NO, YES, NO),
    MeasureId.KATZ: ("only k", YES, YES),
    MeasureId.PAGERANK: (NO, YES, YES),
    MeasureId.HITS: ("only k", YES, NO),
    MeasureId.SALSA: (NO, YES, NO),
    MeasureId.INDEGREE_CO: (YES, YES, YES),
    MeasureId.INDEGREE_WEAK: (YES, YES, YES),
    MeasureId.BETA_CO: (YES, YES, YES),
    MeasureId.BETA_WEAK: (YES, YES, YES),
}

SKIPPABLE = (ConvergenceError, DegenerateSpectrumError, DivergenceError)


class AxiomVerdict(BaseModel):
    """Outcome of one axiom check for one measure."""

    measure: str
    axiom: str
    verdict: str
    satisfied: bool
    witness: str
    samples: Dict[str, Any] = Field(default_factory=dict)

    def tsv(self) -> str:
        return f"{self.measure}\t{self.axiom}\t{self.verdict}\t{self.witness}\n"


@dataclass
class VerdictReport:
    """All verdicts of a matrix run, with mismatches against the expected matrix."""
    verdicts: List[AxiomVerdict]
    mismatches: List[str]

    def rows(self) -> Dict[str, Dict[str, str]]:
        table: Dict[str, Dict[str, str]] = {}
        for v in self.verdicts:
            table.setdefault(v.measure, {})[v.axiom] = v.verdict
        return table

    def render(self) -> str:
        """Human-readable matrix."""
        axes = [a.value for a in Axiom]
        width = max([len(m) for m in self.rows()] + [7])
        lines = [f"{'measure':<{width}}  " + "  ".join(f"{a:<12}" for a in axes)]
        for measure, row in self.rows().items():
            lines.append(f"{measure:<{width}}  " + "  ".join(f"{row.get(a, '-'):<12}" for a in axes))
        return "\n".join(line.rstrip() for line in lines) + "\n"


class AxiomBench:
    """
    Runs axiom checks against centrality measures on the benchmark graphs.

    Args:
        config: Application configuration (axiom, spectral and compute sections)
        params: Spectral parameters; built from the config when omitted
    """

    def __init__(self, config: Optional[AppConfig] = None, params: Optional[SpectralParams] = None):
        self.logger = get_logger(__name__)
        self.config = config or load_config()
        self.params = params or SpectralParams.from_config(self.config.spectral)
        self.tie_tolerance = self.config.axioms.tie_tolerance
        self.evaluations = 0

    # ---- scoring helpers -------------------------------------------------------

    def scores(self, measure: MeasureId, g: Graph, nodes: Sequence[int],
               params: Optional[SpectralParams] = None) -> Tuple[np.ndarray, float]:
        """
        Scores of ``nodes`` plus the scale used for tie detection (largest
        absolute score of the whole vector; of the probed nodes for
        geometric measures, whose values carry no iteration noise).
        """
        self.evaluations += 1
        if measure in GEOMETRIC:
            values = geometric_scores(g, measure, nodes)
            return values, float(np.max(np.abs(values), initial=0.0))
        full = compute(measure, g, params or self.params,
                       threads=self.config.compute.threads, chunk=self.config.compute.sweep_chunk)
        return full.scores[np.asarray(nodes, dtype=np.int64)], float(np.max(np.abs(full.scores), initial=0.0))

    def compare(self, a: float, b: float, scale: float) -> int:
        """Sign of a - b, with near-equal values reported as a tie (0)."""
        if abs(a - b) <= self.tie_tolerance * scale:
            return 0
        return 1 if a > b else -1

    def _clique_vs_cycle(self, measure: MeasureId, k: int, p: int) -> int:
        spec = GeneratorSpec(Family.S, k, p)
        values, scale = self.scores(measure, spec.build(), [0, spec.cycle_bridge])
        return self.compare(float(values[1]), float(values[0]), scale)

    @staticmethod
    def eventual_threshold(pred: Callable[[int], bool], lo: int, hi: int) -> Optional[int]:
        """
        Least t in [lo, hi] such that pred holds at t and at checkpoints
        t, t+1, 2t, 4t, ... up to hi; None when pred fails at hi.

        Between checkpoints pred is assumed monotone, which is what the
        bisection relies on.
        """
        if not pred(hi):
            return None
        while True:
            if pred(lo):
                t = lo
            else:
                a, b = lo, hi  # pred(a) false, pred(b) true
                while b - a > 1:
                    mid = (a + b) // 2
                    if pred(mid):
                        b = mid
                    else:
                        a = mid
                t = b
            checkpoints = sorted({t, min(t + 1, hi)} | {c for c in _doublings(t, hi)})
            failed = [c for c in checkpoints if not pred(c)]
            if not failed:
                return t
            lo = max(failed) + 1

    # ---- size ------------------------------------------------------------------

    def check_size_axiom(self,
                         measure: "MeasureId | str",
                         k_sample: Optional[Sequence[int]] = None,
                         p_sample: Optional[Sequence[int]] = None,
                         k_bound: Optional[int] = None,
                         p_bound: Optional[int] = None) -> AxiomVerdict:
        """
        Size axiom on S(k, p).

        For each sampled k, search the least P_k such that a cycle node beats
        a clique node for every p >= P_k up to the bound; symmetrically K_p
        for each sampled p. Both branches found gives "yes", one of them
        "only p" or "only k", none "no".
        """
        mid = MeasureId.parse(measure)
        cfg = self.config.axioms.size
        bound = cfg.bound_for(mid.value)
        k_sample = list(k_sample or cfg.k_sample)
        p_sample = list(p_sample or cfg.p_sample)
        k_bound = k_bound or bound.k
        p_bound = p_bound or bound.p

        p_thresholds = {
            k: self.eventual_threshold(lambda p, k=k: self._clique_vs_cycle(mid, k, p) > 0, 3, p_bound)
            for k in k_sample
        }
        k_thresholds = {
            p: self.eventual_threshold(lambda k, p=p: self._clique_vs_cycle(mid, k, p) < 0, 3, k_bound)
            for p in p_sample
        }
        p_ok = all(t is not None for t in p_thresholds.values())
        k_ok = all(t is not None for t in k_thresholds.values())

        if p_ok and k_ok:
            verdict = SizeVerdict.YES
        elif k_ok:
            verdict = SizeVerdict.ONLY_K
        elif p_ok:
            verdict = SizeVerdict.ONLY_P
        else:
            verdict = SizeVerdict.NO

        witness = (
            f"P_k {_thresholds_text(p_thresholds, 'p', p_bound)}; "
            f"K_p {_thresholds_text(k_thresholds, 'k', k_bound)}"
        )
        return self._finish(mid, Axiom.SIZE, verdict.value, verdict is SizeVerdict.YES, witness, {
            "P_k": p_thresholds, "K_p": k_thresholds, "p_bound": p_bound, "k_bound": k_bound,
        })

    # ---- density ---------------------------------------------------------------

    def density_margin(self, measure: MeasureId, k: int, p: int, family: Family = Family.D) -> int:
        """Sign of score(clique bridge) - score(cycle bridge) on D(k, p)."""
        spec = GeneratorSpec(family, k, p)
        values, scale = self.scores(measure, spec.build(), [spec.clique_bridge, spec.cycle_bridge])
        return self.compare(float(values[0]), float(values[1]), scale)

    def check_density_axiom(self, measure: "MeasureId | str",
                            k: "int | Sequence[int] | None" = None) -> AxiomVerdict:
        """
        Density axiom on D(k, k): the clique bridge must strictly outscore
        the cycle bridge. Several k values may be given; all must pass.
        """
        mid = MeasureId.parse(measure)
        if k is None:
            ks = list(self.config.axioms.density.k_sample)
        elif isinstance(k, int):
            ks = [k]
        else:
            ks = list(k)
        signs = {kk: self.density_margin(mid, kk, kk) for kk in ks}
        failing = [kk for kk, s in signs.items() if s <= 0]
        satisfied = not failing
        if satisfied:
            witness = "x > y on D(k,k) for k in " + ",".join(map(str, ks))
        else:
            kk = failing[0]
            relation = "tie" if signs[kk] == 0 else "x < y"
            witness = f"{relation} on D({kk},{kk})"
        return self._finish(mid, Axiom.DENSITY, YES if satisfied else NO, satisfied, witness,
                            {"signs": signs})

    def watershed(self, measure: "MeasureId | str", p: int,
                  k_max: Optional[int] = None, symmetric: bool = False) -> Optional[int]:
        """Least k >= 3 with score(clique bridge) > score(cycle bridge) in D(k, p), or None."""
        mid = MeasureId.parse(measure)
        k_max = k_max or self.config.axioms.watershed.k_max
        family = Family.D_SYMMETRIC if symmetric else Family.D
        for k in range(3, k_max + 1):
            if self.density_margin(mid, k, p, family) > 0:
                self.logger.info("Watershed found", measure=mid.value, p=p, k=k, symmetric=symmetric)
                return k
        return None

    # ---- score monotonicity ----------------------------------------------------

    def _monotonicity_params(self, measure: MeasureId, after: Graph,
                             preference: Optional[Tuple[float, ...]] = None) -> SpectralParams:
        params = self.params
        if preference is not None:
            params = params.model_copy(update={"preference": list(preference)})
        if measure is MeasureId.KATZ and params.beta is None:
            # one attenuation factor valid for both graphs
            beta, _ = resolve_beta(after, params)
            params = params.model_copy(update={"beta": beta})
        return params

    def increases(self, measure: MeasureId, g: Graph, arc: Tuple[int, int],
                  preference: Optional[Tuple[float, ...]] = None) -> Tuple[bool, float, float]:
        """Whether adding ``arc`` strictly increases the score of its target."""
        after = g.with_arc(*arc)
        params = self._monotonicity_params(measure, after, preference)
        y = arc[1]
        before_v, before_scale = self.scores(measure, g, [y], params)
        after_v, after_scale = self.scores(measure, after, [y], params)
        scale = max(before_scale, after_scale)
        b, a = float(before_v[0]), float(after_v[0])
        return self.compare(a, b, scale) > 0, b, a

    def check_score_monotonicity(self,
                                 measure: "MeasureId | str",
                                 trials: Optional[int] = None,
                                 seed: Optional[int] = None,
                                 max_nodes: Optional[int] = None,
                                 fixtures: Optional[Sequence[Counterexample]] = None) -> AxiomVerdict:
        """
        Score monotonicity: replay the known counterexamples naming the
        measure, then add one random absent arc to random graphs and demand
        a strict increase of the target's score. The first violation settles
        the verdict.
        """
        mid = MeasureId.parse(measure)
        cfg = self.config.axioms.monotonicity
        trials = cfg.trials if trials is None else trials
        seed = cfg.seed if seed is None else seed
        max_nodes = max_nodes or cfg.max_nodes

        for fx in fixtures if fixtures is not None else all_fixtures():
            if mid not in fx.measures:
                continue
            ok, before, after = self.increases(mid, fx.graph, fx.arc, fx.preference)
            if not ok:
                return self._violation(mid, fx.name, fx.graph, fx.arc, before, after)

        rng = np.random.default_rng(seed)
        skipped = 0
        for trial in range(trials):
            g = random_graph(rng, max_nodes)
            arc = random_absent_arc(rng, g)
            if arc is None:
                continue
            try:
                ok, before, after = self.increases(mid, g, arc)
            except SKIPPABLE as e:
                skipped += 1
                self.logger.debug("Trial skipped", measure=mid.value, trial=trial, error=str(e))
                continue
            if not ok:
                return self._violation(mid, f"random trial {trial} (seed {seed})", g, arc, before, after)

        witness = f"strict increase in {trials - skipped} random trials (seed {seed})"
        return self._finish(mid, Axiom.MONOTONICITY, YES, True, witness,
                            {"trials": trials, "skipped": skipped, "seed": seed})

    def _violation(self, mid: MeasureId, source: str, g: Graph, arc: Tuple[int, int],
                   before: float, after: float) -> AxiomVerdict:
        witness = f"{source}: adding {arc[0]}->{arc[1]} moves score {before:.6g} -> {after:.6g}"
        return self._finish(mid, Axiom.MONOTONICITY, NO, False, witness, {
            "graph": "".join(serialize_graph(g)), "arc": list(arc), "before": before, "after": after,
        })

    def replay(self, verdict: AxiomVerdict) -> bool:
        """Re-run a monotonicity witness; True when it reproduces the verdict."""
        mid = MeasureId.parse(verdict.measure)
        if verdict.axiom != Axiom.MONOTONICITY.value or "graph" not in verdict.samples:
            raise ValueError("only monotonicity violations carry a replayable graph")
        g = load_graph(verdict.samples["graph"])
        arc = tuple(verdict.samples["arc"])
        ok, _, _ = self.increases(mid, g, (int(arc[0]), int(arc[1])))
        return ok == verdict.satisfied

    # ---- matrix ----------------------------------------------------------------

    def verdict_matrix(self, measures: Optional[Sequence["MeasureId | str"]] = None,
                       strict: bool = True, trials: Optional[int] = None) -> VerdictReport:
        """
        Run all three checks for each measure and compare with the expected
        verdicts.

        Raises:
            AxiomMismatchError: strict and some verdict differs
        """
        mids = [MeasureId.parse(m) for m in (measures or TABLE_MEASURES)]
        verdicts: List[AxiomVerdict] = []
        mismatches: List[str] = []
        for mid in mids:
            row = (
                self.check_size_axiom(mid),
                self.check_density_axiom(mid),
                self.check_score_monotonicity(mid, trials=trials),
            )
            verdicts.extend(row)
            expected = EXPECTED.get(mid)
            if expected is None:
                continue
            for got, want in zip(row, expected):
                if got.verdict != want:
                    mismatches.append(f"{mid.value} {got.axiom}: expected {want!r}, got {got.verdict!r} ({got.witness})")
        report = VerdictReport(verdicts, mismatches)
        if strict and mismatches:
            raise AxiomMismatchError(mismatches)
        return report

    def _finish(self, mid: MeasureId, axiom: Axiom, verdict: str, satisfied: bool,
                witness: str, samples: Dict[str, Any]) -> AxiomVerdict:
        log_verdict_event(self.logger, mid.value, axiom.value, verdict, witness)
        return AxiomVerdict(measure=mid.value, axiom=axiom.value, verdict=verdict,
                            satisfied=satisfied, witness=witness, samples=samples)

    def get_stats(self) -> Dict[str, Any]:
        return {"evaluations": self.evaluations, "tie_tolerance": self.tie_tolerance}


def _doublings(t: int, hi: int):
    c = max(t, 1)
    while c < hi:
        c *= 2
        yield min(c, hi)


def _thresholds_text(found: Dict[int, Optional[int]], var: str, bound: int) -> str:
    parts = [f"{key}:{value if value is not None else '-'}" for key, value in found.items()]
    text = "{" + ",".join(parts) + "}"
    if any(v is None for v in found.values()):
        text += f" (not found within {var}<={bound})"
    return text
