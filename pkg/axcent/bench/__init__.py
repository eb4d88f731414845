"""
Axiom benchmark: generated graphs, closed-form oracles, counterexamples
and the axiom checks themselves.
"""

from .axioms import EXPECTED, Axiom, AxiomBench, AxiomVerdict, SizeVerdict, VerdictReport
from .fixtures import Counterexample, all_fixtures, search_lin_counterexample, search_salsa_counterexample
from .generators import Family, GeneratorSpec, gen_D, gen_D_symmetric, gen_S, generate
from .oracles import bridged_oracle, separated_oracle, watershed_formula

__all__ = [
    "Axiom",
    "AxiomBench",
    "AxiomVerdict",
    "SizeVerdict",
    "VerdictReport",
    "EXPECTED",
    "Counterexample",
    "all_fixtures",
    "search_salsa_counterexample",
    "search_lin_counterexample",
    "Family",
    "GeneratorSpec",
    "gen_S",
    "gen_D",
    "gen_D_symmetric",
    "generate",
    "separated_oracle",
    "bridged_oracle",
    "watershed_formula",
]
