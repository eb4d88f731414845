"""
Command-line interface for axcent.
"""

import argparse
import sys
from typing import List, Optional, Sequence

from pydantic import ValidationError

from .bench.axioms import Axiom, AxiomBench, AxiomVerdict, VerdictReport
from .bench.generators import Family, generate
from .core.graph import Graph, read_graph, serialize_graph
from .measures.registry import compute
from .measures.scores import TABLE_MEASURES, MeasureId, ScoreVector, SpectralParams
from .retrieval.corpus import filter_inter_host, load_corpus
from .retrieval.evaluation import NO_RANKING, Evaluator, rank_by, sweep_specs, table_lines
from .retrieval.synthetic import make_synthetic_corpus
from .utils.config import AppConfig, load_config
from .utils.errors import AxcentError, AxiomMismatchError, ParameterError, UsageError
from .utils.io import dumps_json, emit, format_score, score_lines
from .utils.logging import get_logger, log_error, setup_logging

DATA_ERROR = 2
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


class ArgumentParser(argparse.ArgumentParser):
    """argparse parser that reports usage errors as UsageError instead of exiting."""

    def error(self, message: str):
        raise UsageError(f"{self.prog}: {message}")


def build_parser() -> ArgumentParser:
    parser = ArgumentParser(
        prog="axcent",
        description="Centrality measures and their axioms",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  axcent gen -f S -k 5 -p 7 | axcent compute -m harmonic
  axcent compute -m pagerank --alpha 0.5 --preference 0,1 -g two_node.txt
  axcent rank -m katz --beta-factor 0.25 -g graph.txt
  axcent axioms -m closeness
  axcent axioms --format matrix           # full verdict matrix
  axcent watershed -m betweenness -p 10
  axcent eval --synthetic 7 -m none -m harmonic
        """
    )
    parser.add_argument('--config', help='Configuration file (YAML)')
    parser.add_argument('--log-level', help='Log level (DEBUG, INFO, WARNING, ...)')
    parser.add_argument('--log-format', choices=['console', 'json'], help='Log record format')
    parser.add_argument('--threads', type=int, help='Worker threads for sweeps and queries')
    parser.add_argument('--seed', type=int, help='Seed for randomized trials')

    subparsers = parser.add_subparsers(dest='command', help='Available commands')

    # compute / rank share their inputs
    for name, help_text in (('compute', 'Emit per-node scores as TSV'),
                            ('rank', 'Emit nodes in descending score order')):
        sub = subparsers.add_parser(name, help=help_text)
        sub.add_argument('-m', '--measure', required=True, help='Measure id')
        _add_graph_source(sub)
        sub.add_argument('-o', '--output', help='Output file (default: standard output)')
        sub.add_argument('--normalize', action='store_true', help='Rescale scores to unit l1 norm')
        _add_spectral_options(sub)

    gen_parser = subparsers.add_parser('gen', help='Emit a benchmark graph')
    gen_parser.add_argument('-f', '--family', required=True, choices=[f.value for f in Family])
    gen_parser.add_argument('-k', type=int, required=True, help='Clique size')
    gen_parser.add_argument('-p', type=int, required=True, help='Cycle length')
    gen_parser.add_argument('-o', '--output', help='Output file (default: standard output)')

    axioms_parser = subparsers.add_parser('axioms', help='Check size, density and monotonicity axioms')
    axioms_parser.add_argument('-m', '--measure', action='append', help='Measure id (repeatable; default: all)')
    axioms_parser.add_argument('-a', '--axiom', action='append', choices=[a.value for a in Axiom],
                               help='Axiom (repeatable; default: all)')
    axioms_parser.add_argument('--format', choices=['tsv', 'json', 'matrix'], default='tsv')
    axioms_parser.add_argument('--trials', type=int, help='Random monotonicity trials')
    axioms_parser.add_argument('--strict', action='store_true',
                               help='Fail when a verdict differs from the expected matrix')
    axioms_parser.add_argument('-o', '--output', help='Output file (default: standard output)')

    ws_parser = subparsers.add_parser('watershed', help='Least clique size where the clique bridge wins')
    ws_parser.add_argument('-m', '--measure', required=True, help='Measure id')
    ws_parser.add_argument('-p', type=int, required=True, help='Cycle length')
    ws_parser.add_argument('--k-max', type=int, help='Largest clique size to try')
    ws_parser.add_argument('--symmetric-cycle', action='store_true', help='Use a symmetric cycle')
    ws_parser.add_argument('-o', '--output', help='Output file (default: standard output)')

    eval_parser = subparsers.add_parser('eval', help='Retrieval evaluation on a corpus')
    source = eval_parser.add_mutually_exclusive_group(required=True)
    source.add_argument('corpus', nargs='?', help='Corpus directory')
    source.add_argument('--synthetic', type=int, metavar='SEED', help='Use a seeded synthetic corpus')
    eval_parser.add_argument('-m', '--measure', action='append',
                             help="Measure id or 'none' (repeatable; default: every measure and sweep)")
    eval_parser.add_argument('--inter-host', action='store_true', help='Keep only inter-host links')
    eval_parser.add_argument('--format', choices=['tsv', 'json'], default='tsv')
    eval_parser.add_argument('-o', '--output', help='Output file (default: standard output)')

    return parser


def _add_graph_source(sub: argparse.ArgumentParser) -> None:
    sub.add_argument('-g', '--graph', help="Edge-list file, '-' for standard input (default)")
    sub.add_argument('-f', '--family', choices=[f.value for f in Family], help='Generate the input instead')
    sub.add_argument('-k', type=int, help='Clique size (with --family)')
    sub.add_argument('-p', type=int, help='Cycle length (with --family)')


def _add_spectral_options(sub: argparse.ArgumentParser) -> None:
    sub.add_argument('--alpha', type=float, help='PageRank damping factor')
    sub.add_argument('--beta', type=float, help='Katz attenuation factor')
    sub.add_argument('--beta-factor', type=float, help='Katz attenuation as a fraction of 1/lambda')
    sub.add_argument('--preference', help='PageRank preference vector, comma-separated')
    sub.add_argument('--tol', type=float, help='Power-iteration tolerance')
    sub.add_argument('--max-iters', type=int, help='Power-iteration cap')


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Main CLI entry point."""
    parser = build_parser()
    logger = get_logger(__name__)
    setup_logging(level="WARNING", format_type="console")

    try:
        args = parser.parse_args(argv)
        if not args.command:
            parser.print_help(sys.stderr)
            return UsageError.exit_code

        config = _load_config(args)
        setup_logging(level=config.logging.level, format_type=config.logging.format,
                      log_file=config.logging.file)

        try:
            return _dispatch(args, config)
        except ValueError as e:
            raise AxcentError(f"invalid input: {e}") from e

    except AxcentError as e:
        log_error(logger, e, e.context())
        print(f"axcent: {e}", file=sys.stderr)
        return e.exit_code
    except OSError as e:
        log_error(logger, e)
        print(f"axcent: {e}", file=sys.stderr)
        return DATA_ERROR


def _dispatch(args: argparse.Namespace, config: AppConfig) -> int:
    if args.command in ('compute', 'rank'):
        return handle_scores(args, config)
    elif args.command == 'gen':
        return handle_gen(args)
    elif args.command == 'axioms':
        return handle_axioms(args, config)
    elif args.command == 'watershed':
        return handle_watershed(args, config)
    elif args.command == 'eval':
        return handle_eval(args, config)
    raise UsageError(f"unknown command: {args.command}")


def _load_config(args: argparse.Namespace) -> AppConfig:
    config = load_config(args.config)
    updates = {}
    if args.log_level and args.log_level.upper() not in LOG_LEVELS:
        raise ParameterError(f"unknown log level {args.log_level!r}")
    if args.log_level or args.log_format:
        updates["logging"] = config.logging.model_copy(update={
            k: v for k, v in (("level", args.log_level), ("format", args.log_format)) if v
        })
    if args.threads is not None:
        if args.threads < 1:
            raise ParameterError("--threads must be >= 1")
        updates["compute"] = config.compute.model_copy(update={"threads": args.threads})
    if args.seed is not None:
        monotonicity = config.axioms.monotonicity.model_copy(update={"seed": args.seed})
        updates["axioms"] = config.axioms.model_copy(update={"monotonicity": monotonicity})
    return config.model_copy(update=updates) if updates else config


def _input_graph(args: argparse.Namespace, config: AppConfig) -> Graph:
    if args.family is not None:
        if args.graph is not None:
            raise UsageError("give either --graph or --family, not both")
        if args.k is None or args.p is None:
            raise UsageError("--family needs -k and -p")
        return generate(args.family, args.k, args.p)
    if args.k is not None or args.p is not None:
        raise UsageError("-k and -p are only valid with --family")
    return read_graph(args.graph or "-", config.compute.max_nodes)


def _spectral_params(args: argparse.Namespace, config: AppConfig) -> SpectralParams:
    preference: Optional[List[float]] = None
    if args.preference:
        try:
            preference = [float(x) for x in args.preference.split(",")]
        except ValueError:
            raise ParameterError(f"bad preference vector {args.preference!r}") from None
    try:
        return SpectralParams.from_config(
            config.spectral,
            alpha=args.alpha,
            beta=args.beta,
            beta_factor=args.beta_factor,
            tol=args.tol,
            max_iters=args.max_iters,
            preference=preference,
        )
    except ValidationError as e:
        raise ParameterError(f"invalid solver parameters: {e.errors()[0]['msg']}") from e


def handle_scores(args: argparse.Namespace, config: AppConfig) -> int:
    """Handle compute and rank."""
    logger = get_logger(__name__)
    measure = MeasureId.parse(args.measure)
    params = _spectral_params(args, config)
    g = _input_graph(args, config)

    logger.info("Computing scores", measure=measure.value, n=g.n, m=g.m, fingerprint=g.fingerprint())
    result = compute(measure, g, params, threads=config.compute.threads,
                     chunk=config.compute.sweep_chunk, normalize=args.normalize)
    header = _score_header(result, g)

    if args.command == 'compute':
        emit(score_lines(result.scores, header), args.output)
    else:
        order = rank_by(result.scores)
        lines = [f"# {line}\n" for line in header + ["order: descending score, ties by node id"]]
        lines += [f"{node}\t{format_score(result.scores[node])}\n" for node in order]
        emit(lines, args.output)
    return 0


def _score_header(result: ScoreVector, g: Graph) -> List[str]:
    return result.header() + [f"graph: n={g.n} m={g.m} fingerprint={g.fingerprint()}"]


def handle_gen(args: argparse.Namespace) -> int:
    """Handle gen."""
    g = generate(args.family, args.k, args.p)
    emit(serialize_graph(g), args.output)
    return 0


def handle_axioms(args: argparse.Namespace, config: AppConfig) -> int:
    """Handle axioms."""
    logger = get_logger(__name__)
    measures = [MeasureId.parse(m) for m in (args.measure or [m.value for m in TABLE_MEASURES])]
    axioms = [Axiom(a) for a in (args.axiom or [a.value for a in Axiom])]
    bench = AxiomBench(config)

    if len(axioms) == len(Axiom):
        report = bench.verdict_matrix(measures, strict=False, trials=args.trials)
    else:
        verdicts = [_check(bench, mid, axiom, args.trials) for mid in measures for axiom in axioms]
        report = VerdictReport(verdicts, [])

    emit(_render_verdicts(report, args.format), args.output)
    logger.info("Axiom run finished", mismatches=len(report.mismatches), **bench.get_stats())

    if args.strict and report.mismatches:
        raise AxiomMismatchError(report.mismatches)
    return 0


def _check(bench: AxiomBench, mid: MeasureId, axiom: Axiom, trials: Optional[int]) -> AxiomVerdict:
    if axiom is Axiom.SIZE:
        return bench.check_size_axiom(mid)
    if axiom is Axiom.DENSITY:
        return bench.check_density_axiom(mid)
    return bench.check_score_monotonicity(mid, trials=trials)


def _render_verdicts(report: VerdictReport, fmt: str) -> List[str]:
    if fmt == 'json':
        return [dumps_json([v.model_dump() for v in report.verdicts])]
    if fmt == 'matrix':
        return [report.render()]
    return ["measure\taxiom\tverdict\twitness\n"] + [v.tsv() for v in report.verdicts]


def handle_watershed(args: argparse.Namespace, config: AppConfig) -> int:
    """Handle watershed."""
    bench = AxiomBench(config)
    k = bench.watershed(args.measure, args.p, args.k_max, symmetric=args.symmetric_cycle)
    emit([f"{'none' if k is None else k}\n"], args.output)
    return 0


def handle_eval(args: argparse.Namespace, config: AppConfig) -> int:
    """Handle eval."""
    logger = get_logger(__name__)
    if args.synthetic is not None:
        corpus = make_synthetic_corpus(args.synthetic)
    else:
        corpus = load_corpus(args.corpus)
    if args.inter_host:
        corpus = filter_inter_host(corpus)

    names = args.measure
    for name in names or []:
        if name != NO_RANKING:
            MeasureId.parse(name)
    specs = sweep_specs(config, names)
    runs = Evaluator(corpus, config).run_table(specs)
    logger.info("Evaluation finished", rows=len(runs), queries=len(corpus.queries))

    if args.format == 'json':
        emit([dumps_json([run.summary() for run in runs])], args.output)
    else:
        emit(table_lines(runs), args.output)
    return 0


if __name__ == "__main__":
    sys.exit(main())
