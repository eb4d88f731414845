"""
Immutable directed graph over contiguous node ids.

Arcs are stored as a deduplicated, lexicographically sorted pair of numpy
arrays; successor and predecessor lists are exposed through scipy CSR
matrices built once on first use. Loops are retained and reported.
"""

from functools import cached_property
from pathlib import Path
import sys
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple, Union

import blake3
import numpy as np
from scipy import sparse

from ..utils.errors import GraphFormatError, NodeRangeError

Arc = Tuple[int, int]

# a single line id above this is treated as a typo rather than a graph size
MAX_NODES = 1 << 31


class Graph:
    """
    Directed graph with node ids 0..n-1 and a set of arcs.

    Instances are never mutated after construction; "editing" operations
    such as with_arc return new graphs.
    """

    def __init__(self, n: int, arcs: Iterable[Arc] = ()):
        """
        Args:
            n: Number of nodes
            arcs: Ordered pairs (source, target); duplicates collapse
        """
        pairs = np.asarray(list(arcs), dtype=np.int64).reshape(-1, 2)
        self._init_arrays(n, pairs[:, 0], pairs[:, 1])

    @classmethod
    def from_arrays(cls, n: int, src: np.ndarray, dst: np.ndarray) -> "Graph":
        """Build a graph from parallel source/target arrays."""
        g = cls.__new__(cls)
        g._init_arrays(n, np.asarray(src, dtype=np.int64), np.asarray(dst, dtype=np.int64))
        return g

    def _init_arrays(self, n: int, src: np.ndarray, dst: np.ndarray) -> None:
        if n < 0:
            raise NodeRangeError(n, 0)
        if n > MAX_NODES:
            # arc keys src * n + dst must fit in int64
            raise NodeRangeError(n, MAX_NODES)
        if src.size:
            lo = int(min(src.min(), dst.min()))
            hi = int(max(src.max(), dst.max()))
            if lo < 0 or hi >= n:
                raise NodeRangeError(lo if lo < 0 else hi, n)
        keys = np.unique(src * max(n, 1) + dst)
        self._n = int(n)
        self._src = keys // max(n, 1)
        self._dst = keys % max(n, 1)
        self._src.setflags(write=False)
        self._dst.setflags(write=False)

    # ---- basic shape -------------------------------------------------------

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        """Number of arcs."""
        return int(self._src.size)

    @property
    def sources(self) -> np.ndarray:
        return self._src

    @property
    def targets(self) -> np.ndarray:
        return self._dst

    def arcs(self) -> Iterator[Arc]:
        """Arcs in (source, target) order."""
        return zip(self._src.tolist(), self._dst.tolist())

    def arc_set(self) -> frozenset:
        return frozenset(self.arcs())

    def check_node(self, x: int) -> None:
        if not 0 <= x < self._n:
            raise NodeRangeError(x, self._n)

    # ---- adjacency ---------------------------------------------------------

    @cached_property
    def adjacency(self) -> sparse.csr_matrix:
        """0/1 adjacency matrix A with A[x, y] = 1 iff x -> y."""
        data = np.ones(self.m, dtype=np.float64)
        return sparse.csr_matrix((data, (self._src, self._dst)), shape=(self._n, self._n))

    @cached_property
    def reverse_adjacency(self) -> sparse.csr_matrix:
        """Adjacency matrix of the transpose, row x listing predecessors of x."""
        return self.adjacency.T.tocsr()

    def successors(self, x: int) -> np.ndarray:
        self.check_node(x)
        a = self.adjacency
        return a.indices[a.indptr[x]:a.indptr[x + 1]]

    def predecessors(self, x: int) -> np.ndarray:
        self.check_node(x)
        r = self.reverse_adjacency
        return r.indices[r.indptr[x]:r.indptr[x + 1]]

    def successor_lists(self) -> List[List[int]]:
        a = self.adjacency
        return [a.indices[a.indptr[x]:a.indptr[x + 1]].tolist() for x in range(self._n)]

    def predecessor_lists(self) -> List[List[int]]:
        r = self.reverse_adjacency
        return [r.indices[r.indptr[x]:r.indptr[x + 1]].tolist() for x in range(self._n)]

    @cached_property
    def out_degrees(self) -> np.ndarray:
        return np.bincount(self._src, minlength=self._n).astype(np.int64)

    @cached_property
    def in_degrees(self) -> np.ndarray:
        return np.bincount(self._dst, minlength=self._n).astype(np.int64)

    @cached_property
    def loops(self) -> Tuple[int, ...]:
        """Nodes carrying a loop x -> x."""
        return tuple(self._src[self._src == self._dst].tolist())

    def has_arc(self, x: int, y: int) -> bool:
        self.check_node(x)
        self.check_node(y)
        succ = self.successors(x)
        i = np.searchsorted(succ, y)
        return bool(i < succ.size and succ[i] == y)

    def is_symmetric(self) -> bool:
        """True when the graph is fixed by transposition."""
        return self == transpose(self)

    # ---- derived graphs ----------------------------------------------------

    def with_arc(self, x: int, y: int) -> "Graph":
        """New graph with the arc x -> y added."""
        self.check_node(x)
        self.check_node(y)
        return Graph.from_arrays(self._n, np.append(self._src, x), np.append(self._dst, y))

    def without_arcs(self, mask: np.ndarray) -> "Graph":
        """New graph keeping only arcs whose mask entry is False."""
        keep = ~np.asarray(mask, dtype=bool)
        return Graph.from_arrays(self._n, self._src[keep], self._dst[keep])

    def subgraph(self, nodes: Iterable[int]) -> Tuple["Graph", np.ndarray]:
        """
        Induced subgraph on ``nodes``.

        Returns:
            (subgraph, mapping) where mapping[i] is the original id of
            subgraph node i; nodes keep their relative order.
        """
        keep = np.unique(np.fromiter((int(v) for v in nodes), dtype=np.int64))
        if keep.size and (keep[0] < 0 or keep[-1] >= self._n):
            raise NodeRangeError(int(keep[0] if keep[0] < 0 else keep[-1]), self._n)
        local = np.full(self._n, -1, dtype=np.int64)
        local[keep] = np.arange(keep.size)
        inside = (local[self._src] >= 0) & (local[self._dst] >= 0)
        sub = Graph.from_arrays(int(keep.size), local[self._src[inside]], local[self._dst[inside]])
        keep.setflags(write=False)
        return sub, keep

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Isomorphic copy where node x becomes perm[x]."""
        p = np.asarray(perm, dtype=np.int64)
        return Graph.from_arrays(self._n, p[self._src], p[self._dst])

    # ---- identity ----------------------------------------------------------

    def fingerprint(self) -> str:
        """blake3 digest of the canonical edge list."""
        return blake3.blake3("".join(serialize_graph(self)).encode("ascii")).hexdigest()[:16]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self._n == other._n
            and np.array_equal(self._src, other._src)
            and np.array_equal(self._dst, other._dst)
        )

    def __hash__(self) -> int:
        return hash((self._n, self._src.tobytes(), self._dst.tobytes()))

    def __len__(self) -> int:
        return self._n

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, m={self.m})"


def transpose(g: Graph) -> Graph:
    """Graph with every arc reversed."""
    return Graph.from_arrays(g.n, g.targets, g.sources)


def _is_count(token: str) -> bool:
    return token.isascii() and token.isdigit()


def load_graph(text: Union[str, Iterable[str]], max_nodes: int = MAX_NODES) -> Graph:
    """
    Parse an edge-list document.

    Lines starting with '#' are comments, except an optional first line
    "# nodes: N" fixing the node count. Every other non-blank line holds
    two nonnegative ASCII integers "u v".

    Args:
        text: Document as a string or an iterable of lines
        max_nodes: Largest node count accepted, header included

    Returns:
        Parsed graph; n is the header value or 1 + the largest id
    """
    lines = text.splitlines() if isinstance(text, str) else text
    declared: Optional[int] = None
    src: List[int] = []
    dst: List[int] = []

    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            if lineno == 1 and body.lower().startswith("nodes:"):
                value = body.split(":", 1)[1].strip()
                if not _is_count(value):
                    raise GraphFormatError(f"bad node-count header {line!r}", lineno)
                declared = int(value)
                if declared > max_nodes:
                    raise GraphFormatError(f"node count {declared} exceeds the limit of {max_nodes}", lineno)
            continue
        tokens = line.split()
        if len(tokens) != 2 or not all(_is_count(t) for t in tokens):
            raise GraphFormatError(f"expected two nonnegative integers, got {line!r}", lineno)
        u, v = int(tokens[0]), int(tokens[1])
        if u >= max_nodes or v >= max_nodes:
            raise NodeRangeError(max(u, v), max_nodes)
        src.append(u)
        dst.append(v)

    needed = 1 + max(max(src, default=-1), max(dst, default=-1))
    n = needed if declared is None else declared
    if n < needed:
        raise NodeRangeError(needed - 1, n)
    return Graph.from_arrays(n, np.array(src, dtype=np.int64), np.array(dst, dtype=np.int64))


def serialize_graph(g: Graph) -> Iterator[str]:
    """Edge-list lines: node-count header, then arcs sorted by (source, target)."""
    yield f"# nodes: {g.n}\n"
    for u, v in g.arcs():
        yield f"{u} {v}\n"


def read_graph(path: Union[str, Path], max_nodes: int = MAX_NODES) -> Graph:
    """Load a graph from a file, or from standard input when path is '-'."""
    if str(path) == "-":
        return load_graph(sys.stdin.read(), max_nodes)
    return load_graph(Path(path).read_text(encoding="utf-8"), max_nodes)


def l1_normalize_rows(g: Graph) -> sparse.csr_matrix:
    """
    Row-normalized adjacency operator: each nonnull row divided by its sum,
    null rows (dangling nodes) left at zero. Apply as ``y @ op``.
    """
    out = g.out_degrees.astype(np.float64)
    scale = np.divide(1.0, out, out=np.zeros_like(out), where=out > 0)
    return sparse.diags(scale).dot(g.adjacency).tocsr()
