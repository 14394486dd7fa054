"""
k-bounded all-pairs edge connectivity.

Random thin factors L, R give the transfer matrix K = LR on the
vertex-split graph; (I - K)^{-1} is reached through the small
(I - RL)^{-1}, and each pair is decoded as the rank of a k x k block.
"""

import logging
from collections import defaultdict
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

import numpy as np

from exceptions import EncodingFailure, ParameterError, SingularError
from helpers.field_helpers import FieldContext
from helpers.graph_helpers import Digraph, GraphHelpers, TransformResult
from helpers.matrix_helpers import FpMatrix, MatrixHelpers
from services.solver_base import ConnectivitySolver
from utils.connectivity_utils import ConnectivityMatrix

logger = logging.getLogger(__name__)


@dataclass
class KapcEncoding:
    """
    Encoded edge connectivities.

    left is m_new x k*n_new, right is k*n_new x m_new, inverse_block is the
    kn x kn block of (I - RL)^{-1} at (out-node rows, in-node columns)
    and M is kn x kn over the original n vertices, with k
    consecutive rows (columns) per source (sink) in vertex order.
    """

    k: int
    transform: TransformResult
    left: FpMatrix
    right: FpMatrix
    inverse_block: FpMatrix
    M: FpMatrix

    @property
    def n(self) -> int:
        return self.transform.n_original

    def out_block_index(self, s: int) -> range:
        return range(s * self.k, (s + 1) * self.k)

    def in_block_index(self, t: int) -> range:
        return range(t * self.k, (t + 1) * self.k)


class KapcService(ConnectivitySolver):
    """Service for k-APC via low-rank flow-vector encoding"""

    mode = "edge"

    def prepare(self, g: Digraph, k: int) -> Digraph:
        return GraphHelpers.cap_parallel_edges(g, k)

    def build_random_factors(
        self, transform: TransformResult, k: int, rng: np.random.Generator
    ) -> Tuple[FpMatrix, FpMatrix]:
        """
        Draw L and R.

        Row e of L is nonzero only at columns i*n_new + head(e); column f of
        R only at rows i*n_new + tail(f), for i in 0..k-1.
        """
        graph = transform.graph
        n_new, m_new = graph.n, graph.m
        width = k * n_new
        left = np.zeros((m_new, width), dtype=object)
        right = np.zeros((width, m_new), dtype=object)
        if m_new:
            heads = np.array([v for _, v in graph.edges], dtype=np.intp)
            tails = np.array([u for u, _ in graph.edges], dtype=np.intp)
            layers = np.arange(k, dtype=np.intp) * n_new
            edge_ids = np.arange(m_new, dtype=np.intp)

            x = self.ctx.random_vector(rng, (m_new, k))
            left[edge_ids[:, None], layers[None, :] + heads[:, None]] = x

            y = self.ctx.random_vector(rng, (k, m_new))
            right[layers[:, None] + tails[None, :], edge_ids[None, :]] = y
        return FpMatrix(left, self.ctx), FpMatrix(right, self.ctx)

    def blockwise_RL(
        self, transform: TransformResult, left: FpMatrix, right: FpMatrix, k: int
    ) -> FpMatrix:
        """
        R·L assembled from one k x |E(u,v)| by |E(u,v)| x k product per
        vertex pair joined by edges.
        """
        graph = transform.graph
        n_new = graph.n
        p = self.ctx.p
        result = np.zeros((k * n_new, k * n_new), dtype=object)
        groups: Dict[Tuple[int, int], List[int]] = defaultdict(list)
        for eid, edge in enumerate(graph.edges):
            groups[edge].append(eid)

        layers = np.arange(k, dtype=np.intp) * n_new
        for (u, v), eids in groups.items():
            ids = np.asarray(eids, dtype=np.intp)
            rows = layers + u
            cols = layers + v
            r_block = right.data[np.ix_(rows, ids)]
            l_block = left.data[np.ix_(ids, cols)]
            result[np.ix_(rows, cols)] = (result[np.ix_(rows, cols)] + r_block @ l_block) % p
        return FpMatrix(result, self.ctx)

    def encode(self, g: Digraph, k: int, rng: np.random.Generator) -> KapcEncoding:
        """
        Build M = L~ (I - RL)^{-1} R~ for a graph capped at k parallel edges

        Raises:
            EncodingFailure if I - RL is singular for this draw
        """
        if k < 1:
            raise ParameterError(f"k must be >= 1, got {k}")
        transform = GraphHelpers.transform_for_kapc(GraphHelpers.cap_parallel_edges(g, k), k)
        left, right = self.build_random_factors(transform, k, rng)
        rl = self.blockwise_RL(transform, left, right, k)

        width = rl.rows
        row_idx, col_idx = self._block_indices(transform, k)
        # only the in-node columns of (I - RL)^{-1} are ever read
        selector = np.zeros((width, col_idx.size), dtype=object)
        selector[col_idx, np.arange(col_idx.size)] = 1
        try:
            columns = MatrixHelpers.solve(
                FpMatrix.identity(width, self.ctx) - rl, FpMatrix(selector, self.ctx)
            )
        except SingularError as e:
            raise EncodingFailure(f"I - RL singular ({width}x{width}, rank {e.rank})") from e
        inverse_block = FpMatrix(columns.data[row_idx, :], self.ctx)

        M = self._assemble_M(transform, left, right, inverse_block, k)
        logger.debug(f"Edge encoding built: n={g.n}, m_new={transform.graph.m}, k={k}")
        return KapcEncoding(
            k=k, transform=transform, left=left, right=right, inverse_block=inverse_block, M=M
        )

    @staticmethod
    def _block_indices(transform: TransformResult, k: int) -> Tuple[np.ndarray, np.ndarray]:
        """Rows (i, s_out) and columns (i, t_in) of (I - RL)^{-1}, k per original vertex"""
        n, n_new = transform.n_original, transform.graph.n
        if n == 0:
            return np.empty(0, dtype=np.intp), np.empty(0, dtype=np.intp)
        layers = np.arange(k, dtype=np.intp) * n_new
        row_idx = np.concatenate([layers + transform.out_node(s) for s in range(n)])
        col_idx = np.concatenate([layers + transform.in_node(t) for t in range(n)])
        return row_idx, col_idx

    def _assemble_M(
        self,
        transform: TransformResult,
        left: FpMatrix,
        right: FpMatrix,
        inverse_block: FpMatrix,
        k: int,
    ) -> FpMatrix:
        # L~ and R~ have k nonzeros per row / column: gather and apply k x k blocks
        n = transform.n_original
        n_new = transform.graph.n
        p = self.ctx.p
        if n == 0:
            return FpMatrix.zeros(0, 0, self.ctx)

        layers = np.arange(k, dtype=np.intp) * n_new
        gathered = inverse_block.data

        half = np.zeros((k * n, k * n), dtype=object)
        for s in range(n):
            edges = np.asarray(transform.out_edge_block(s), dtype=np.intp)
            l_coef = left.data[np.ix_(edges, layers + transform.out_node(s))]
            block = slice(s * k, (s + 1) * k)
            half[block, :] = (l_coef @ gathered[block, :]) % p

        M = np.zeros((k * n, k * n), dtype=object)
        for t in range(n):
            edges = np.asarray(transform.in_edge_block(t), dtype=np.intp)
            r_coef = right.data[np.ix_(layers + transform.in_node(t), edges)]
            block = slice(t * k, (t + 1) * k)
            M[:, block] = (half[:, block] @ r_coef) % p
        return FpMatrix(M, self.ctx)

    def query(self, enc: KapcEncoding, s: int, t: int) -> int:
        """
        min(k, lambda(s, t)) w.h.p.: rank of the k x k block M[E_out(s), E_in(t)]

        Raises:
            ParameterError for s == t or vertices out of range
        """
        if s == t:
            raise ParameterError(f"query on the diagonal pair ({s}, {s})")
        if not (0 <= s < enc.n and 0 <= t < enc.n):
            raise ParameterError(f"vertex pair ({s}, {t}) outside 0..{enc.n - 1}")
        rows, cols = enc.out_block_index(s), enc.in_block_index(t)
        block = FpMatrix(enc.M.data[rows.start:rows.stop, cols.start:cols.stop], self.ctx)
        return MatrixHelpers.bounded_rank(block, enc.k)

    def decode_all(self, enc: KapcEncoding) -> ConnectivityMatrix:
        result = ConnectivityMatrix.empty(enc.n, enc.k)
        for s, t in result.pairs():
            result.set(s, t, self.query(enc, s, t))
        return result

    def flow_vectors(
        self, transform: TransformResult, left: FpMatrix, right: FpMatrix, s: int
    ) -> Tuple[FpMatrix, FpMatrix, FpMatrix]:
        """
        Dense flow matrix for source s on the split graph.

        Returns:
            (F, H_s, K) with F = H_s (I - K)^{-1} and K = LR; column e of F
            is the flow vector of edge e

        Raises:
            EncodingFailure if I - K is singular
        """
        K = MatrixHelpers.matmul(left, right)
        m_new = K.rows
        try:
            transfer_inverse = MatrixHelpers.inverse(FpMatrix.identity(m_new, self.ctx) - K)
        except SingularError as e:
            raise EncodingFailure(f"I - K singular (rank {e.rank})") from e
        pumped = list(transform.out_edge_block(s))
        H = FpMatrix.zeros(len(pumped), m_new, self.ctx)
        for i, eid in enumerate(pumped):
            H.data[i, eid] = 1
        return MatrixHelpers.matmul(H, transfer_inverse), H, K
