"""
Dense matrix helpers over F_p.
Exact multiply, inverse, rank, bounded rank, submatrices and the
low-rank inverse update. Entries are Python ints in numpy object arrays.
"""

from typing import Iterable, List, Optional, Sequence, Tuple
import logging

import numpy as np

from exceptions import DimensionError, FieldMismatchError, ParameterError, SingularError
from helpers.field_helpers import FieldContext, FieldElement

logger = logging.getLogger(__name__)


class IndexSet(tuple):
    """Ordered row or column indices without duplicates."""

    def __new__(cls, indices: Iterable[int] = ()):
        items = tuple(int(i) for i in indices)
        if len(set(items)) != len(items):
            raise ParameterError(f"index set has duplicates: {items}")
        return super().__new__(cls, items)


class FpMatrix:
    """Dense rows x cols matrix over F_p, row-major; entries are reduced into [0, p)."""

    __slots__ = ("data", "ctx")

    def __init__(self, data: np.ndarray, ctx: FieldContext):
        data = np.asarray(data, dtype=object)
        if data.ndim != 2:
            raise DimensionError(f"expected a 2-d array, got {data.ndim}-d")
        self.data = data % ctx.p
        self.ctx = ctx

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    @property
    def shape(self) -> Tuple[int, int]:
        return self.data.shape

    @classmethod
    def zeros(cls, rows: int, cols: int, ctx: FieldContext) -> "FpMatrix":
        return cls(np.zeros((rows, cols), dtype=object), ctx)

    @classmethod
    def identity(cls, n: int, ctx: FieldContext) -> "FpMatrix":
        data = np.zeros((n, n), dtype=object)
        for i in range(n):
            data[i, i] = 1
        return cls(data, ctx)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], ctx: FieldContext, cols: Optional[int] = None) -> "FpMatrix":
        """Build from nested lists, reducing every entry mod p"""
        width = cols if cols is not None else (len(rows[0]) if rows else 0)
        data = np.zeros((len(rows), width), dtype=object)
        for i, row in enumerate(rows):
            if len(row) != width:
                raise DimensionError(f"row {i} has {len(row)} entries, expected {width}")
            for j, value in enumerate(row):
                data[i, j] = int(value) % ctx.p
        return cls(data, ctx)

    def to_rows(self) -> List[List[int]]:
        return [[int(v) for v in row] for row in self.data]

    def entry(self, i: int, j: int) -> FieldElement:
        return FieldElement(int(self.data[i, j]), self.ctx)

    def __getitem__(self, key: Tuple[int, int]) -> int:
        i, j = key
        return int(self.data[i, j])

    def transpose(self) -> "FpMatrix":
        return FpMatrix(self.data.T.copy(), self.ctx)

    def __add__(self, other: "FpMatrix") -> "FpMatrix":
        MatrixHelpers._check_same(self, other)
        if self.shape != other.shape:
            raise DimensionError(f"cannot add {self.shape} and {other.shape}")
        return FpMatrix((self.data + other.data) % self.ctx.p, self.ctx)

    def __sub__(self, other: "FpMatrix") -> "FpMatrix":
        MatrixHelpers._check_same(self, other)
        if self.shape != other.shape:
            raise DimensionError(f"cannot subtract {other.shape} from {self.shape}")
        return FpMatrix((self.data - other.data) % self.ctx.p, self.ctx)

    def __matmul__(self, other: "FpMatrix") -> "FpMatrix":
        return MatrixHelpers.matmul(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FpMatrix):
            return NotImplemented
        return (
            self.ctx.p == other.ctx.p
            and self.shape == other.shape
            and bool(np.all(self.data == other.data))
        )

    __hash__ = None

    def is_zero(self) -> bool:
        return not bool(np.any(self.data))

    def __repr__(self) -> str:
        return f"FpMatrix({self.rows}x{self.cols} mod {self.ctx.p}, {self.to_rows()})"


class MatrixHelpers:
    """Helper class for exact linear algebra over F_p."""

    @staticmethod
    def _check_same(a: FpMatrix, b: FpMatrix) -> None:
        if a.ctx.p != b.ctx.p:
            raise FieldMismatchError(f"matrices over F_{a.ctx.p} and F_{b.ctx.p}")

    @staticmethod
    def matmul(a: FpMatrix, b: FpMatrix) -> FpMatrix:
        """
        Exact product over F_p

        Args:
            a: rows x inner matrix
            b: inner x cols matrix

        Returns:
            The product a·b with canonical entries

        Raises:
            DimensionError if a.cols != b.rows
        """
        MatrixHelpers._check_same(a, b)
        if a.cols != b.rows:
            raise DimensionError(f"cannot multiply {a.shape} by {b.shape}")
        if a.cols == 0:
            return FpMatrix.zeros(a.rows, b.cols, a.ctx)
        # sums of unreduced products stay exact as Python ints
        return FpMatrix((a.data @ b.data) % a.ctx.p, a.ctx)

    @staticmethod
    def _eliminate(
        data: np.ndarray,
        ctx: FieldContext,
        limit: Optional[int] = None,
        search_cols: Optional[int] = None,
    ) -> Tuple[np.ndarray, List[int]]:
        """
        Forward Gaussian elimination with first-nonzero pivoting

        Args:
            data: Matrix entries, left untouched
            ctx: Field context
            limit: Stop after this many pivots
            search_cols: Only look for pivots in the first search_cols columns

        Returns:
            (row echelon copy with unit pivots, pivot column list)
        """
        p = ctx.p
        work = data.copy()
        rows, cols = work.shape
        span = cols if search_cols is None else search_cols
        pivots: List[int] = []
        r = 0
        for c in range(span):
            if r == rows or (limit is not None and len(pivots) >= limit):
                break
            candidates = np.nonzero(work[r:, c])[0]
            if candidates.size == 0:
                continue
            pr = r + int(candidates[0])
            if pr != r:
                work[[r, pr]] = work[[pr, r]]
            inv = ctx.inv_int(int(work[r, c]))
            work[r, c:] = (work[r, c:] * inv) % p

            below = r + 1 + np.nonzero(work[r + 1:, c])[0]
            if below.size:
                pivot_row = work[r, c:]
                work[below, c:] = (work[below, c:] - np.outer(work[below, c], pivot_row)) % p
            pivots.append(c)
            r += 1
        return work, pivots

    @staticmethod
    def rank(a: FpMatrix) -> int:
        """Exact rank by full elimination"""
        if a.rows == 0 or a.cols == 0:
            return 0
        _, pivots = MatrixHelpers._eliminate(a.data, a.ctx)
        return len(pivots)

    @staticmethod
    def bounded_rank(a: FpMatrix, k: int) -> int:
        """
        min(k, rank a), halting elimination after k pivots

        Raises:
            ParameterError if k < 1
        """
        if k < 1:
            raise ParameterError(f"bound k must be >= 1, got {k}")
        if a.rows == 0 or a.cols == 0:
            return 0
        _, pivots = MatrixHelpers._eliminate(a.data, a.ctx, limit=k)
        return len(pivots)

    @staticmethod
    def solve(a: FpMatrix, b: FpMatrix) -> FpMatrix:
        """
        X with A·X = B: forward elimination on [A | B], then back
        substitution on the B half only

        Args:
            a: Square n x n matrix
            b: n x m right-hand sides

        Raises:
            DimensionError for non-square A or mismatched B
            SingularError (with the rank reached) when A is singular
        """
        MatrixHelpers._check_same(a, b)
        if a.rows != a.cols:
            raise DimensionError(f"cannot solve with non-square {a.shape}")
        if b.rows != a.rows:
            raise DimensionError(f"right-hand side has {b.rows} rows, expected {a.rows}")
        n, p = a.rows, a.ctx.p
        if n == 0:
            return FpMatrix.zeros(0, b.cols, a.ctx)

        work, pivots = MatrixHelpers._eliminate(np.hstack([a.data, b.data]), a.ctx, search_cols=n)
        if len(pivots) < n:
            raise SingularError(f"{n}x{n} matrix is singular (rank {len(pivots)})", rank=len(pivots))

        # unit upper triangular on the left; clear column c above the diagonal
        upper = work[:, :n]
        x = work[:, n:]
        for c in range(n - 1, 0, -1):
            above = np.nonzero(upper[:c, c])[0]
            if above.size:
                x[above] = (x[above] - np.outer(upper[above, c], x[c])) % p
        return FpMatrix(x.copy(), a.ctx)

    @staticmethod
    def inverse(a: FpMatrix) -> FpMatrix:
        """
        Inverse as the solution of A·X = I

        Raises:
            DimensionError for non-square input
            SingularError (with the rank reached) when A is singular
        """
        if a.rows != a.cols:
            raise DimensionError(f"cannot invert non-square {a.shape}")
        return MatrixHelpers.solve(a, FpMatrix.identity(a.rows, a.ctx))

    @staticmethod
    def submatrix(a: FpMatrix, rows: Sequence[int], cols: Sequence[int]) -> FpMatrix:
        """
        A[S, T] with the order of S and T preserved

        Raises:
            IndexError if any index is out of range
        """
        row_set, col_set = IndexSet(rows), IndexSet(cols)
        for i in row_set:
            if not 0 <= i < a.rows:
                raise IndexError(f"row index {i} out of range for {a.rows} rows")
        for j in col_set:
            if not 0 <= j < a.cols:
                raise IndexError(f"column index {j} out of range for {a.cols} columns")
        ri = np.asarray(row_set, dtype=np.intp)
        ci = np.asarray(col_set, dtype=np.intp)
        return FpMatrix(a.data[np.ix_(ri, ci)].copy(), a.ctx)

    @staticmethod
    def low_rank_inverse_update(left: FpMatrix, right: FpMatrix) -> FpMatrix:
        """
        (I - LR)^{-1} computed as I + L (I - RL)^{-1} R

        Args:
            left: a x b matrix L
            right: b x a matrix R

        Returns:
            The a x a inverse of I - LR

        Raises:
            DimensionError if shapes do not chain
            SingularError if I - RL is singular
        """
        MatrixHelpers._check_same(left, right)
        a, b = left.shape
        if right.shape != (b, a):
            raise DimensionError(f"R must be {b}x{a}, got {right.shape}")
        ctx = left.ctx
        small = FpMatrix.identity(b, ctx) - MatrixHelpers.matmul(right, left)
        small_inv = MatrixHelpers.inverse(small)
        update = MatrixHelpers.matmul(MatrixHelpers.matmul(left, small_inv), right)
        return FpMatrix.identity(a, ctx) + update

    @staticmethod
    def random_matrix(rng: np.random.Generator, rows: int, cols: int, ctx: FieldContext) -> FpMatrix:
        return FpMatrix(ctx.random_vector(rng, (rows, cols)).reshape(rows, cols), ctx)

    @staticmethod
    def random_rank_matrix(
        rng: np.random.Generator, rows: int, cols: int, rank: int, ctx: FieldContext
    ) -> FpMatrix:
        """Product of random rows x rank and rank x cols factors; rank exactly `rank` w.h.p."""
        if rank == 0:
            return FpMatrix.zeros(rows, cols, ctx)
        left = MatrixHelpers.random_matrix(rng, rows, rank, ctx)
        right = MatrixHelpers.random_matrix(rng, rank, cols, ctx)
        return MatrixHelpers.matmul(left, right)

    @staticmethod
    def projected_bounded_rank(a: FpMatrix, k: int, rng: np.random.Generator) -> int:
        """
        Rank of Γ·A for a random k x rows Γ.

        Equals min(k, rank A) except with probability at most k/p.
        """
        if k < 1:
            raise ParameterError(f"bound k must be >= 1, got {k}")
        gamma = MatrixHelpers.random_matrix(rng, k, a.rows, a.ctx)
        return MatrixHelpers.rank(MatrixHelpers.matmul(gamma, a))
