"""
Directed multigraph helpers.
Parsing, capping, the edge-connectivity vertex-splitting transformation
and closed-neighbourhood adjacency.
"""

from collections import Counter
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple
import logging

import numpy as np

from exceptions import ParameterError, ParseError
from helpers.field_helpers import FieldContext
from helpers.matrix_helpers import FpMatrix

logger = logging.getLogger(__name__)

Edge = Tuple[int, int]


class Digraph:
    """Directed multigraph on vertices 0..n-1; edge id = position in the edge list."""

    __slots__ = ("n", "edges", "out_edges", "in_edges")

    def __init__(self, n: int, edges: Iterable[Edge] = ()):
        if n < 0:
            raise ParameterError(f"vertex count must be >= 0, got {n}")
        self.n = n
        self.edges: Tuple[Edge, ...] = tuple((int(u), int(v)) for u, v in edges)
        out_edges: List[List[int]] = [[] for _ in range(n)]
        in_edges: List[List[int]] = [[] for _ in range(n)]
        for eid, (u, v) in enumerate(self.edges):
            if not (0 <= u < n and 0 <= v < n):
                raise ParameterError(f"edge {eid} ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise ParameterError(f"edge {eid} is a self-loop at {u}")
            out_edges[u].append(eid)
            in_edges[v].append(eid)
        self.out_edges: Tuple[Tuple[int, ...], ...] = tuple(tuple(x) for x in out_edges)
        self.in_edges: Tuple[Tuple[int, ...], ...] = tuple(tuple(x) for x in in_edges)

    @property
    def m(self) -> int:
        return len(self.edges)

    def tail(self, eid: int) -> int:
        return self.edges[eid][0]

    def head(self, eid: int) -> int:
        return self.edges[eid][1]

    def out_degree(self, u: int) -> int:
        return len(self.out_edges[u])

    def in_degree(self, u: int) -> int:
        return len(self.in_edges[u])

    def out_neighbors(self, u: int) -> List[int]:
        return sorted({self.head(e) for e in self.out_edges[u]})

    def in_neighbors(self, v: int) -> List[int]:
        return sorted({self.tail(e) for e in self.in_edges[v]})

    def closed_out_neighborhood(self, u: int) -> List[int]:
        """N_out[u]: u together with its out-neighbours, ascending"""
        return sorted({u, *self.out_neighbors(u)})

    def closed_in_neighborhood(self, v: int) -> List[int]:
        """N_in[v]: v together with its in-neighbours, ascending"""
        return sorted({v, *self.in_neighbors(v)})

    def edges_between(self, u: int, v: int) -> List[int]:
        return [e for e in self.out_edges[u] if self.head(e) == v]

    def multiplicity(self, u: int, v: int) -> int:
        return len(self.edges_between(u, v))

    def has_edge(self, u: int, v: int) -> bool:
        return any(self.head(e) == v for e in self.out_edges[u])

    def with_edges(self, extra: Iterable[Edge]) -> "Digraph":
        return Digraph(self.n, [*self.edges, *extra])

    def __eq__(self, other) -> bool:
        if not isinstance(other, Digraph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    __hash__ = None

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class TransformResult:
    """
    Graph after splitting every vertex v into v, v_out = n + v, v_in = 2n + v.

    Edge ids: k copies of (v, v_out) for v = 0..n-1, then k copies of
    (v_in, v), then the rewritten original edges (u_out, v_in) in input order.
    """

    graph: Digraph
    n_original: int
    k: int

    def original_vertex(self, v: int) -> int:
        return v

    def out_node(self, v: int) -> int:
        return self.n_original + v

    def in_node(self, v: int) -> int:
        return 2 * self.n_original + v

    def out_edge_block(self, s: int) -> range:
        """The k edge ids s -> s_out"""
        return range(s * self.k, (s + 1) * self.k)

    def in_edge_block(self, t: int) -> range:
        """The k edge ids t_in -> t"""
        base = self.n_original * self.k
        return range(base + t * self.k, base + (t + 1) * self.k)


class GraphHelpers:
    """Helper class for digraph construction and transformation."""

    @staticmethod
    def parse_graph(text: str) -> Digraph:
        """
        Parse the edge-list format: header "n m", then m lines "u v".
        Lines starting with '#' and blank lines are skipped.

        Raises:
            ParseError with the 1-based line number of the offending line
        """
        header: Optional[Tuple[int, int]] = None
        edges: List[Edge] = []
        for line_number, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            fields = line.split()
            if len(fields) != 2:
                raise ParseError(f"expected two integers, got {raw!r}", line_number)
            try:
                a, b = int(fields[0]), int(fields[1])
            except ValueError:
                raise ParseError(f"non-integer field in {raw!r}", line_number)

            if header is None:
                if a < 0 or b < 0:
                    raise ParseError(f"negative header value in {raw!r}", line_number)
                header = (a, b)
                continue

            n, m = header
            if len(edges) >= m:
                raise ParseError(f"more than the declared {m} edges", line_number)
            if not (0 <= a < n and 0 <= b < n):
                raise ParseError(f"vertex id out of range 0..{n - 1} in {raw!r}", line_number)
            if a == b:
                raise ParseError(f"self-loop at vertex {a}", line_number)
            edges.append((a, b))

        if header is None:
            raise ParseError("missing 'n m' header")
        n, m = header
        if len(edges) != m:
            raise ParseError(f"header declares {m} edges, found {len(edges)}")
        return Digraph(n, edges)

    @staticmethod
    def serialize_graph(g: Digraph) -> str:
        lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges]
        return "\n".join(lines) + "\n"

    @staticmethod
    def cap_parallel_edges(g: Digraph, k: int) -> Digraph:
        """Keep the first k copies of every ordered pair, preserving order"""
        if k < 1:
            raise ParameterError(f"k must be >= 1, got {k}")
        seen: Counter = Counter()
        kept: List[Edge] = []
        for edge in g.edges:
            if seen[edge] < k:
                kept.append(edge)
            seen[edge] += 1
        if len(kept) != g.m:
            logger.debug(f"Capped {g.m - len(kept)} parallel edges at multiplicity {k}")
        return Digraph(g.n, kept)

    @staticmethod
    def collapse_parallel_edges(g: Digraph) -> Tuple[Digraph, Dict[Edge, int]]:
        """
        Collapse parallel edges to one

        Returns:
            (simple graph, multiplicity of every edge of the input)
        """
        multiplicity: Counter = Counter(g.edges)
        simple = GraphHelpers.cap_parallel_edges(g, 1)
        return simple, dict(multiplicity)

    @staticmethod
    def transform_for_kapc(g: Digraph, k: int) -> TransformResult:
        """
        Split vertices so every original vertex has exactly k out- and k in-edges.

        min(k, lambda(s, t)) is unchanged for every pair of original vertices
        when g is capped at k parallel edges.
        """
        if k < 1:
            raise ParameterError(f"k must be >= 1, got {k}")
        n = g.n
        edges: List[Edge] = []
        for v in range(n):
            edges.extend([(v, n + v)] * k)
        for v in range(n):
            edges.extend([(2 * n + v, v)] * k)
        for u, v in g.edges:
            edges.append((n + u, 2 * n + v))
        result = TransformResult(graph=Digraph(3 * n, edges), n_original=n, k=k)
        logger.debug(f"Transformed graph: n_new={3 * n}, m_new={len(edges)}")
        return result

    @staticmethod
    def closed_adjacency(g: Digraph, ctx: Optional[FieldContext] = None) -> FpMatrix:
        """A[u, v] = 1 iff u == v or (u, v) is an edge"""
        ctx = ctx or FieldContext()
        data = np.zeros((g.n, g.n), dtype=object)
        for v in range(g.n):
            data[v, v] = 1
        for u, v in g.edges:
            data[u, v] = 1
        return FpMatrix(data, ctx)

    @staticmethod
    def random_digraph(
        rng: np.random.Generator, n: int, m: int, allow_parallel: bool = True
    ) -> Digraph:
        """
        Random digraph with m edges between distinct endpoints

        Without parallel edges m is clipped to n(n-1).
        """
        if n < 2 or m == 0:
            return Digraph(n)
        pairs: Sequence[Edge] = [(u, v) for u in range(n) for v in range(n) if u != v]
        if allow_parallel:
            picks = rng.integers(0, len(pairs), size=m)
        else:
            picks = rng.choice(len(pairs), size=min(m, len(pairs)), replace=False)
        return Digraph(n, [pairs[int(i)] for i in picks])
