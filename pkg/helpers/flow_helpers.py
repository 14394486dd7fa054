"""
Max-flow oracle helpers.
Edmonds-Karp on an integer-capacity residual network gives exact
lambda(s, t) and nu(s, t) for checking the algebraic solvers.
"""

from collections import deque
from typing import List, Literal, Optional, Set, Tuple
import logging

from exceptions import ParameterError
from helpers.graph_helpers import Digraph, GraphHelpers
from utils.connectivity_utils import ConnectivityMatrix

logger = logging.getLogger(__name__)


class FlowNetwork:
    """Residual network; arc i and arc i ^ 1 are a forward/backward pair."""

    def __init__(self, node_count: int):
        self.node_count = node_count
        self.heads: List[int] = []
        self.residual: List[int] = []
        self.capacity: List[int] = []
        self.adjacency: List[List[int]] = [[] for _ in range(node_count)]

    def add_arc(self, u: int, v: int, capacity: int = 1) -> int:
        if capacity < 0:
            raise ParameterError(f"negative capacity {capacity} on arc ({u}, {v})")
        arc = len(self.heads)
        self.heads.extend([v, u])
        self.residual.extend([capacity, 0])
        self.capacity.extend([capacity, 0])
        self.adjacency[u].append(arc)
        self.adjacency[v].append(arc + 1)
        return arc

    def tail(self, arc: int) -> int:
        return self.heads[arc ^ 1]

    def flow_on(self, arc: int) -> int:
        return self.capacity[arc] - self.residual[arc]

    def _augmenting_path(self, source: int, sink: int) -> Optional[List[int]]:
        parent_arc = [-1] * self.node_count
        visited = [False] * self.node_count
        visited[source] = True
        queue = deque([source])
        while queue:
            u = queue.popleft()
            for arc in self.adjacency[u]:
                v = self.heads[arc]
                if not visited[v] and self.residual[arc] > 0:
                    visited[v] = True
                    parent_arc[v] = arc
                    if v == sink:
                        path = []
                        while v != source:
                            path.append(parent_arc[v])
                            v = self.tail(parent_arc[v])
                        return path
                    queue.append(v)
        return None

    def max_flow(self, source: int, sink: int) -> int:
        """Edmonds-Karp: augment along shortest residual paths until none remain"""
        if source == sink:
            raise ParameterError("source and sink must differ")
        total = 0
        while True:
            path = self._augmenting_path(source, sink)
            if path is None:
                return total
            bottleneck = min(self.residual[arc] for arc in path)
            for arc in path:
                self.residual[arc] -= bottleneck
                self.residual[arc ^ 1] += bottleneck
            total += bottleneck

    def reachable(self, source: int) -> Set[int]:
        """Nodes reachable from source in the residual network"""
        seen = {source}
        queue = deque([source])
        while queue:
            u = queue.popleft()
            for arc in self.adjacency[u]:
                v = self.heads[arc]
                if v not in seen and self.residual[arc] > 0:
                    seen.add(v)
                    queue.append(v)
        return seen

    def cut_capacity(self, side: Set[int]) -> int:
        return sum(
            self.capacity[arc]
            for arc in range(0, len(self.heads), 2)
            if self.tail(arc) in side and self.heads[arc] not in side
        )

    def is_conserving(self, source: int, sink: int) -> bool:
        """Net flow is zero at every node except source and sink"""
        balance = [0] * self.node_count
        for arc in range(0, len(self.heads), 2):
            f = self.flow_on(arc)
            if f < 0 or f > self.capacity[arc]:
                return False
            balance[self.tail(arc)] -= f
            balance[self.heads[arc]] += f
        return all(b == 0 for node, b in enumerate(balance) if node not in (source, sink))


class OracleHelpers:
    """Helper class for ground-truth connectivities."""

    @staticmethod
    def _check_pair(g: Digraph, s: int, t: int) -> None:
        if s == t:
            raise ParameterError(f"connectivity of ({s}, {s}) is undefined")
        if not (0 <= s < g.n and 0 <= t < g.n):
            raise ParameterError(f"vertex pair ({s}, {t}) outside 0..{g.n - 1}")

    @staticmethod
    def edge_network(g: Digraph) -> FlowNetwork:
        network = FlowNetwork(g.n)
        for u, v in g.edges:
            network.add_arc(u, v, 1)
        return network

    @staticmethod
    def edge_connectivity(g: Digraph, s: int, t: int) -> int:
        """lambda(s, t); every parallel copy carries one unit"""
        OracleHelpers._check_pair(g, s, t)
        return OracleHelpers.edge_network(g).max_flow(s, t)

    @staticmethod
    def min_cut(g: Digraph, s: int, t: int) -> Tuple[int, Set[int], FlowNetwork]:
        """
        Maximum flow and the source side of a minimum edge cut

        Returns:
            (flow value, source side, solved network)
        """
        OracleHelpers._check_pair(g, s, t)
        network = OracleHelpers.edge_network(g)
        value = network.max_flow(s, t)
        return value, network.reachable(s), network

    @staticmethod
    def vertex_network(simple: Digraph, s: int, t: int) -> Tuple[FlowNetwork, int, int]:
        """
        Vertex-split network: w -> n + w with capacity 1 for w not in {s, t},
        edge (u, v) becomes n + u -> v. Source is n + s, sink is t.
        """
        n = simple.n
        network = FlowNetwork(2 * n)
        for w in range(n):
            if w not in (s, t):
                network.add_arc(w, n + w, 1)
        for u, v in simple.edges:
            network.add_arc(n + u, v, 1)
        return network, n + s, t

    @staticmethod
    def vertex_connectivity(g: Digraph, s: int, t: int) -> int:
        """
        nu(s, t): internally vertex-disjoint s -> t paths.

        Parallel edges are collapsed; c copies of the edge (s, t) count as
        c paths, so c - 1 is added back.
        """
        OracleHelpers._check_pair(g, s, t)
        simple, multiplicity = GraphHelpers.collapse_parallel_edges(g)
        network, source, sink = OracleHelpers.vertex_network(simple, s, t)
        value = network.max_flow(source, sink)
        extra = multiplicity.get((s, t), 0)
        return value + max(0, extra - 1)

    @staticmethod
    def all_pairs_oracle(
        g: Digraph, k: int, mode: Literal["edge", "vertex"] = "edge"
    ) -> ConnectivityMatrix:
        """min(k, lambda) or min(k, nu) for every ordered distinct pair"""
        if k < 1:
            raise ParameterError(f"k must be >= 1, got {k}")
        if mode not in ("edge", "vertex"):
            raise ParameterError(f"unknown oracle mode {mode!r}")
        measure = (
            OracleHelpers.edge_connectivity if mode == "edge" else OracleHelpers.vertex_connectivity
        )
        result = ConnectivityMatrix.empty(g.n, k)
        for s in range(g.n):
            for t in range(g.n):
                if s != t:
                    result.set(s, t, min(k, measure(g, s, t)))
        logger.debug(f"Oracle ({mode}) finished for n={g.n}, k={k}")
        return result
