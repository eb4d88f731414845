"""
Document corpus for retrieval evaluation: a link graph over documents, a
term index, relevance judgments, queries and optional host labels.

Directory layout:
    graph.txt     edge list (same format as every other graph input)
    index.tsv     term<TAB>doc,doc,...
    qrels.tsv     query<TAB>doc<TAB>grade
    queries.tsv   query<TAB>term term ...
    hosts.tsv     host<TAB>doc<TAB>label    (optional)
"""

from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Dict, FrozenSet, Iterator, List, Optional, Sequence, Tuple, Union

import numpy as np

from ..core.graph import Graph, load_graph, serialize_graph
from ..utils.errors import AxcentError, CorpusError
from ..utils.io import atomic_write
from ..utils.logging import get_logger, log_event

logger = get_logger(__name__)

GRAPH_FILE = "graph.txt"
INDEX_FILE = "index.tsv"
QRELS_FILE = "qrels.tsv"
QUERIES_FILE = "queries.tsv"
HOSTS_FILE = "hosts.tsv"


@dataclass(frozen=True)
class Corpus:
    """
    Attributes:
        graph: Link graph over document ids 0..n-1
        index: term -> documents containing it
        qrels: query -> {document: grade}; absent documents have grade 0
        queries: query -> conjunctive terms, in file order
        hosts: Per-document host label, or None when the corpus has none
    """
    graph: Graph
    index: Dict[str, FrozenSet[int]]
    qrels: Dict[str, Dict[int, int]] = field(default_factory=dict)
    queries: Dict[str, Tuple[str, ...]] = field(default_factory=dict)
    hosts: Optional[Tuple[str, ...]] = None

    @property
    def n(self) -> int:
        return self.graph.n

    def match(self, terms: Sequence[str]) -> List[int]:
        """Documents containing every term, ascending."""
        if not terms:
            return []
        sets = sorted((self.index.get(t, frozenset()) for t in terms), key=len)
        hits = set(sets[0])
        for s in sets[1:]:
            hits &= s
        return sorted(hits)

    def judgments(self, query: str) -> Dict[int, int]:
        return self.qrels.get(query, {})


def induced_subgraph(g: Graph, nodes: Sequence[int]) -> Tuple[Graph, np.ndarray]:
    """Subgraph on ``nodes`` plus the mapping from its ids back to ``g``'s."""
    return g.subgraph(nodes)


def filter_inter_host(corpus: Corpus) -> Corpus:
    """
    Copy of the corpus keeping only arcs between documents on different
    hosts.

    Raises:
        CorpusError: the corpus carries no host labels
    """
    if corpus.hosts is None:
        raise CorpusError("inter-host filtering needs host labels", HOSTS_FILE)
    _, codes = np.unique(np.asarray(corpus.hosts, dtype=object).astype(str), return_inverse=True)
    g = corpus.graph
    intra = codes[g.sources] == codes[g.targets]
    logger.info("Intra-host arcs removed", removed=int(intra.sum()), kept=int(g.m - intra.sum()))
    return replace(corpus, graph=g.without_arcs(intra))


# ---- reading ----------------------------------------------------------------------

def _rows(path: Path, columns: int) -> Iterator[Tuple[int, List[str]]]:
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise CorpusError(f"cannot read: {e.strerror}", str(path)) from e
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != columns:
            raise CorpusError(f"expected {columns} tab-separated fields, got {len(parts)}", str(path), lineno)
        yield lineno, parts


def _doc(value: str, n: int, path: Path, lineno: int) -> int:
    try:
        doc = int(value)
    except ValueError:
        raise CorpusError(f"bad document id {value!r}", str(path), lineno) from None
    if not 0 <= doc < n:
        raise CorpusError(f"document {doc} out of range for {n} documents", str(path), lineno)
    return doc


def load_corpus(directory: Union[str, Path]) -> Corpus:
    """
    Read a corpus directory.

    Raises:
        CorpusError: missing file, malformed line or out-of-range document id
    """
    root = Path(directory)
    graph_path = root / GRAPH_FILE
    try:
        graph = load_graph(graph_path.read_text(encoding="utf-8"))
    except OSError as e:
        raise CorpusError(f"cannot read: {e.strerror}", str(graph_path)) from e
    except AxcentError as e:
        raise CorpusError(str(e), str(graph_path)) from e
    n = graph.n

    index: Dict[str, FrozenSet[int]] = {}
    path = root / INDEX_FILE
    for lineno, (term, docs) in _rows(path, 2):
        ids = frozenset(_doc(d, n, path, lineno) for d in docs.split(",") if d)
        index[term] = index.get(term, frozenset()) | ids

    qrels: Dict[str, Dict[int, int]] = {}
    path = root / QRELS_FILE
    for lineno, (query, doc, grade) in _rows(path, 3):
        try:
            value = int(grade)
        except ValueError:
            raise CorpusError(f"bad grade {grade!r}", str(path), lineno) from None
        if value < 0:
            raise CorpusError(f"negative grade {value}", str(path), lineno)
        qrels.setdefault(query, {})[_doc(doc, n, path, lineno)] = value

    queries: Dict[str, Tuple[str, ...]] = {}
    path = root / QUERIES_FILE
    for _, (query, terms) in _rows(path, 2):
        queries[query] = tuple(terms.split())

    hosts: Optional[Tuple[str, ...]] = None
    path = root / HOSTS_FILE
    if path.exists():
        labels: List[Optional[str]] = [None] * n
        for lineno, (tag, doc, label) in _rows(path, 3):
            if tag != "host":
                raise CorpusError(f"expected 'host' tag, got {tag!r}", str(path), lineno)
            labels[_doc(doc, n, path, lineno)] = label
        missing = [i for i, label in enumerate(labels) if label is None]
        if missing:
            raise CorpusError(f"{len(missing)} documents without a host label (first: {missing[0]})", str(path))
        hosts = tuple(label for label in labels if label is not None)

    log_event(logger, "CORPUS_LOADED", path=str(root), documents=n, arcs=graph.m,
              terms=len(index), queries=len(queries), hosts=hosts is not None)
    return Corpus(graph, index, qrels, queries, hosts)


def write_corpus(corpus: Corpus, directory: Union[str, Path]) -> Path:
    """Write a corpus in the directory layout read by load_corpus."""
    root = Path(directory)
    root.mkdir(parents=True, exist_ok=True)
    atomic_write(root / GRAPH_FILE, serialize_graph(corpus.graph))
    atomic_write(root / INDEX_FILE, (
        f"{term}\t{','.join(map(str, sorted(docs)))}\n" for term, docs in sorted(corpus.index.items())
    ))
    atomic_write(root / QRELS_FILE, (
        f"{query}\t{doc}\t{grade}\n"
        for query, judged in corpus.qrels.items() for doc, grade in sorted(judged.items())
    ))
    atomic_write(root / QUERIES_FILE, (f"{query}\t{' '.join(terms)}\n" for query, terms in corpus.queries.items()))
    if corpus.hosts is not None:
        atomic_write(root / HOSTS_FILE, (f"host\t{doc}\t{label}\n" for doc, label in enumerate(corpus.hosts)))
    return root
