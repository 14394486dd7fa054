"""
k-bounded all-pairs vertex connectivity.

K carries a random weight on every edge; D_ij = A P_i (I - K)^{-1} Q_j A
for all (i, j) in [k+1]^2 hold every (k+1) x (k+1) matrix F_{s,t} at once,
and each pair is decoded from rank F_{s,t}.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Optional, Tuple

import numpy as np

from exceptions import EncodingFailure, ParameterError, SingularError
from helpers.graph_helpers import Digraph, Edge, GraphHelpers
from helpers.matrix_helpers import FpMatrix, MatrixHelpers
from services.solver_base import ConnectivitySolver
from utils.connectivity_utils import ConnectivityMatrix

logger = logging.getLogger(__name__)


@dataclass
class KapvcEncoding:
    """
    Encoded vertex connectivities.

    b_vectors is B ((k+1) x n, column u = b_u); c_vectors is C
    (n x (k+1), row v = c_v). D[i][j] is the n x n matrix D_ij.
    """

    k: int
    graph: Digraph
    k_matrix: FpMatrix
    w_inverse: FpMatrix
    b_vectors: FpMatrix
    c_vectors: FpMatrix
    adjacency: FpMatrix
    D: List[List[FpMatrix]]
    edge_set: FrozenSet[Edge]
    multiplicity: Dict[Edge, int] = field(default_factory=dict)

    @property
    def n(self) -> int:
        return self.graph.n


class KapvcService(ConnectivitySolver):
    """Service for k-APVC via (k+1) x (k+1) preconditioned flow ranks"""

    mode = "vertex"

    def build_k_matrix(self, g: Digraph, rng: np.random.Generator) -> FpMatrix:
        """Uniform random weight at every edge of the simple graph g, zero elsewhere"""
        data = np.zeros((g.n, g.n), dtype=object)
        if g.m:
            weights = self.ctx.random_vector(rng, g.m)
            for (u, v), w in zip(g.edges, weights):
                data[u, v] = w
        return FpMatrix(data, self.ctx)

    def _transfer_inverse(self, k_matrix: FpMatrix) -> FpMatrix:
        try:
            return MatrixHelpers.inverse(FpMatrix.identity(k_matrix.rows, self.ctx) - k_matrix)
        except SingularError as e:
            raise EncodingFailure(
                f"I - K singular ({k_matrix.rows}x{k_matrix.rows}, rank {e.rank})"
            ) from e

    def encode(
        self,
        g: Digraph,
        k: int,
        rng: np.random.Generator,
        b_vectors: Optional[FpMatrix] = None,
        c_vectors: Optional[FpMatrix] = None,
    ) -> KapvcEncoding:
        """
        Compute (I - K)^{-1} and all (k+1)^2 matrices D_ij

        Args:
            g: Input digraph; parallel edges are collapsed, multiplicities kept
            k: Connectivity bound
            rng: Randomness for K, B and C
            b_vectors: Fixed B instead of a random one
            c_vectors: Fixed C instead of a random one

        Raises:
            EncodingFailure if I - K is singular for this draw
        """
        if k < 1:
            raise ParameterError(f"k must be >= 1, got {k}")
        simple, multiplicity = GraphHelpers.collapse_parallel_edges(g)
        n, width, p = simple.n, k + 1, self.ctx.p

        k_matrix = self.build_k_matrix(simple, rng)
        w_inverse = self._transfer_inverse(k_matrix)

        if b_vectors is None:
            b_vectors = MatrixHelpers.random_matrix(rng, width, n, self.ctx)
        if c_vectors is None:
            c_vectors = MatrixHelpers.random_matrix(rng, n, width, self.ctx)
        if b_vectors.shape != (width, n) or c_vectors.shape != (n, width):
            raise ParameterError(
                f"B must be {width}x{n} and C {n}x{width}, got {b_vectors.shape} and {c_vectors.shape}"
            )

        adjacency = GraphHelpers.closed_adjacency(simple, self.ctx)
        D: List[List[FpMatrix]] = []
        for i in range(width):
            # A P_i scales column u of A by b_u[i]
            left = ((adjacency.data * b_vectors.data[i, :][None, :]) % p) @ w_inverse.data % p
            row: List[FpMatrix] = []
            for j in range(width):
                # (.) Q_j scales column v by c_v[j]; right multiplying by A sums v over N_in[t]
                scaled = (left * c_vectors.data[:, j][None, :]) % p
                row.append(FpMatrix((scaled @ adjacency.data) % p, self.ctx))
            D.append(row)

        logger.debug(f"Vertex encoding built: n={n}, m={simple.m}, k={k}")
        return KapvcEncoding(
            k=k,
            graph=simple,
            k_matrix=k_matrix,
            w_inverse=w_inverse,
            b_vectors=b_vectors,
            c_vectors=c_vectors,
            adjacency=adjacency,
            D=D,
            edge_set=frozenset(simple.edges),
            multiplicity=multiplicity,
        )

    def _check_pair(self, enc: KapvcEncoding, s: int, t: int) -> None:
        if s == t:
            raise ParameterError(f"query on the diagonal pair ({s}, {s})")
        if not (0 <= s < enc.n and 0 <= t < enc.n):
            raise ParameterError(f"vertex pair ({s}, {t}) outside 0..{enc.n - 1}")

    def assemble_F(self, enc: KapvcEncoding, s: int, t: int) -> FpMatrix:
        """F_{s,t}[i, j] = D_ij[s, t]"""
        self._check_pair(enc, s, t)
        width = enc.k + 1
        data = np.zeros((width, width), dtype=object)
        for i in range(width):
            for j in range(width):
                data[i, j] = enc.D[i][j].data[s, t]
        return FpMatrix(data, self.ctx)

    def neighborhood_product(self, enc: KapvcEncoding, s: int, t: int) -> FpMatrix:
        """M_{s,t} = B[*, N_out[s]] W[N_out[s], N_in[t]] C[N_in[t], *], computed directly"""
        self._check_pair(enc, s, t)
        out_nodes = enc.graph.closed_out_neighborhood(s)
        in_nodes = enc.graph.closed_in_neighborhood(t)
        width = range(enc.k + 1)
        b_part = MatrixHelpers.submatrix(enc.b_vectors, width, out_nodes)
        w_part = MatrixHelpers.submatrix(enc.w_inverse, out_nodes, in_nodes)
        c_part = MatrixHelpers.submatrix(enc.c_vectors, in_nodes, width)
        return MatrixHelpers.matmul(MatrixHelpers.matmul(b_part, w_part), c_part)

    def query(self, enc: KapvcEncoding, s: int, t: int) -> int:
        """
        min(k, nu(s, t)) w.h.p.

        Edge pairs decode as rank - 1 (never below 0), other pairs as
        min(k, rank); c > 1 parallel copies of (s, t) add c - 1 before the
        final clamp at k.
        """
        F = self.assemble_F(enc, s, t)
        r = MatrixHelpers.bounded_rank(F, enc.k + 1)
        if (s, t) in enc.edge_set:
            if r == 0:
                logger.warning(f"Degenerate draw: rank F = 0 for edge pair ({s}, {t})")
            value = max(0, r - 1)
        else:
            value = min(enc.k, r)
        extra = enc.multiplicity.get((s, t), 0) - 1
        if extra > 0:
            value += extra
        return min(enc.k, value)

    def decode_all(self, enc: KapvcEncoding) -> ConnectivityMatrix:
        result = ConnectivityMatrix.empty(enc.n, enc.k)
        for s, t in result.pairs():
            result.set(s, t, self.query(enc, s, t))
        return result

    def diagnostic_flow_rank(self, g: Digraph, s: int, t: int, rng: np.random.Generator) -> int:
        """
        rank (I - K)^{-1}[N_out[s], N_in[t]]: nu(s, t) + 1 if (s, t) is an
        edge, nu(s, t) otherwise, with high probability

        Raises:
            EncodingFailure if I - K is singular
        """
        if s == t:
            raise ParameterError(f"diagnostic on the diagonal pair ({s}, {s})")
        simple, _ = GraphHelpers.collapse_parallel_edges(g)
        w_inverse = self._transfer_inverse(self.build_k_matrix(simple, rng))
        block = MatrixHelpers.submatrix(
            w_inverse, simple.closed_out_neighborhood(s), simple.closed_in_neighborhood(t)
        )
        return MatrixHelpers.rank(block)

    def vertex_flow_vectors(
        self, g: Digraph, s: int, rng: np.random.Generator
    ) -> Tuple[FpMatrix, FpMatrix, FpMatrix]:
        """
        Flow vectors pumped at N_out[s]

        Returns:
            (F, H_s, K) with F = H_s (I - K)^{-1}; column v of F is v's flow vector
        """
        simple, _ = GraphHelpers.collapse_parallel_edges(g)
        k_matrix = self.build_k_matrix(simple, rng)
        w_inverse = self._transfer_inverse(k_matrix)
        pumped = simple.closed_out_neighborhood(s)
        H = FpMatrix.zeros(len(pumped), simple.n, self.ctx)
        for i, v in enumerate(pumped):
            H.data[i, v] = 1
        return MatrixHelpers.matmul(H, w_inverse), H, k_matrix
