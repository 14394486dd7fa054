import numpy as np
import pytest

from exceptions import DimensionError, ParameterError, SingularError
from helpers.matrix_helpers import FpMatrix, IndexSet, MatrixHelpers


def naive_product(a, b, p):
    rows, inner, cols = a.rows, a.cols, b.cols
    return [
        [sum(a[i, t] * b[t, j] for t in range(inner)) % p for j in range(cols)]
        for i in range(rows)
    ]


def test_matmul_examples(ctx, rng):
    m = MatrixHelpers.random_matrix(rng, 5, 5, ctx)
    assert MatrixHelpers.matmul(FpMatrix.identity(5, ctx), m) == m
    a = FpMatrix.from_rows([[3]], ctx)
    b = FpMatrix.from_rows([[ctx.p - 2]], ctx)
    assert MatrixHelpers.matmul(a, b).to_rows() == [[(3 * (ctx.p - 2)) % ctx.p]]

    left = MatrixHelpers.random_matrix(rng, 4, 3, ctx)
    right = MatrixHelpers.random_matrix(rng, 3, 2, ctx)
    assert (left @ right).to_rows() == naive_product(left, right, ctx.p)


def test_matmul_dimension_mismatch(ctx):
    with pytest.raises(DimensionError):
        MatrixHelpers.matmul(FpMatrix.zeros(2, 3, ctx), FpMatrix.zeros(2, 3, ctx))


def test_matmul_with_empty_inner_dimension(ctx):
    product = MatrixHelpers.matmul(FpMatrix.zeros(2, 0, ctx), FpMatrix.zeros(0, 3, ctx))
    assert product == FpMatrix.zeros(2, 3, ctx)


def test_inverse_examples(ctx7, ctx, rng):
    assert MatrixHelpers.inverse(FpMatrix.identity(4, ctx)) == FpMatrix.identity(4, ctx)
    assert MatrixHelpers.inverse(FpMatrix.from_rows([[2]], ctx7)).to_rows() == [[4]]

    a = MatrixHelpers.random_matrix(rng, 20, 20, ctx)
    assert a @ MatrixHelpers.inverse(a) == FpMatrix.identity(20, ctx)


def test_inverse_errors(ctx7):
    with pytest.raises(DimensionError):
        MatrixHelpers.inverse(FpMatrix.zeros(2, 3, ctx7))
    singular = FpMatrix.from_rows([[1, 2, 3], [2, 4, 6], [0, 1, 1]], ctx7)
    with pytest.raises(SingularError) as info:
        MatrixHelpers.inverse(singular)
    assert info.value.rank == 2


def test_inverse_both_sides_on_random_matrices(ctx, rng):
    for _ in range(100):
        n = int(rng.integers(1, 31))
        a = MatrixHelpers.random_matrix(rng, n, n, ctx)
        inv = MatrixHelpers.inverse(a)
        identity = FpMatrix.identity(n, ctx)
        assert inv @ a == identity
        assert a @ inv == identity


def test_bounded_rank_examples(ctx, rng):
    assert MatrixHelpers.bounded_rank(FpMatrix.identity(3, ctx), 2) == 2
    for k in (1, 5):
        assert MatrixHelpers.bounded_rank(FpMatrix.zeros(4, 6, ctx), k) == 0

    m = MatrixHelpers.random_rank_matrix(rng, 8, 6, 4, ctx)
    assert MatrixHelpers.rank(m) == 4
    assert MatrixHelpers.bounded_rank(m, 10) == 4
    assert MatrixHelpers.bounded_rank(m, 3) == 3


def test_bounded_rank_rejects_nonpositive_bound(ctx):
    for k in (0, -1):
        with pytest.raises(ParameterError):
            MatrixHelpers.bounded_rank(FpMatrix.identity(2, ctx), k)


def test_rank_examples(ctx, rng):
    assert MatrixHelpers.rank(FpMatrix.identity(6, ctx)) == 6
    row = [int(v) for v in ctx.random_vector(rng, 5)]
    row[0] = 1
    assert MatrixHelpers.rank(FpMatrix.from_rows([row, row], ctx)) == 1
    a = MatrixHelpers.random_matrix(rng, 10, 10, ctx)
    assert MatrixHelpers.rank(a) == MatrixHelpers.bounded_rank(a, 10)


def test_bounded_rank_agrees_with_full_rank(ctx7, ctx):
    rng = np.random.default_rng(6)
    for trial in range(1000):
        field = ctx7 if trial % 2 else ctx
        rows, cols = (int(x) for x in rng.integers(1, 13, size=2))
        target = int(rng.integers(0, min(rows, cols) + 1))
        a = MatrixHelpers.random_rank_matrix(rng, rows, cols, target, field)
        full = MatrixHelpers.rank(a)
        for k in range(1, 13):
            assert MatrixHelpers.bounded_rank(a, k) == min(k, full)


def test_rank_of_transpose(ctx7, rng):
    for _ in range(50):
        rows, cols = (int(x) for x in rng.integers(1, 9, size=2))
        a = MatrixHelpers.random_matrix(rng, rows, cols, ctx7)
        assert MatrixHelpers.rank(a) == MatrixHelpers.rank(a.transpose())


def test_submatrix(ctx, rng):
    a = MatrixHelpers.random_matrix(rng, 4, 5, ctx)
    assert MatrixHelpers.submatrix(a, range(4), range(5)) == a
    assert MatrixHelpers.submatrix(a, [2], [3]).to_rows() == [[a[2, 3]]]
    reversed_rows = MatrixHelpers.submatrix(a, [3, 2, 1, 0], range(5))
    assert reversed_rows.to_rows() == a.to_rows()[::-1]
    assert MatrixHelpers.submatrix(a, [], [1, 2]).shape == (0, 2)


def test_submatrix_errors(ctx):
    a = FpMatrix.identity(3, ctx)
    with pytest.raises(IndexError):
        MatrixHelpers.submatrix(a, [3], [0])
    with pytest.raises(IndexError):
        MatrixHelpers.submatrix(a, [0], [-1])
    with pytest.raises(ParameterError):
        IndexSet([1, 1])


def test_low_rank_inverse_update_examples(ctx, rng):
    zero = FpMatrix.zeros(6, 2, ctx)
    right = MatrixHelpers.random_matrix(rng, 2, 6, ctx)
    assert MatrixHelpers.low_rank_inverse_update(zero, right) == FpMatrix.identity(6, ctx)

    left = MatrixHelpers.random_matrix(rng, 6, 2, ctx)
    result = MatrixHelpers.low_rank_inverse_update(left, right)
    big = FpMatrix.identity(6, ctx) - left @ right
    assert result @ big == FpMatrix.identity(6, ctx)
    assert result == MatrixHelpers.inverse(big)


def test_low_rank_inverse_update_matches_direct_inverse(ctx):
    rng = np.random.default_rng(31)
    checked = 0
    while checked < 100:
        a = int(rng.integers(1, 21))
        b = int(rng.integers(1, 6))
        left = MatrixHelpers.random_matrix(rng, a, b, ctx)
        right = MatrixHelpers.random_matrix(rng, b, a, ctx)
        small = FpMatrix.identity(b, ctx) - right @ left
        if MatrixHelpers.rank(small) < b:
            continue
        big = FpMatrix.identity(a, ctx) - left @ right
        assert MatrixHelpers.rank(big) == a
        assert MatrixHelpers.low_rank_inverse_update(left, right) == MatrixHelpers.inverse(big)
        checked += 1


def test_low_rank_inverse_update_singular(ctx7):
    # R L = [[1]] so I - RL = 0
    left = FpMatrix.from_rows([[1], [0]], ctx7)
    right = FpMatrix.from_rows([[1, 0]], ctx7)
    with pytest.raises(SingularError):
        MatrixHelpers.low_rank_inverse_update(left, right)
    with pytest.raises(DimensionError):
        MatrixHelpers.low_rank_inverse_update(left, FpMatrix.zeros(2, 2, ctx7))


def test_solve_satisfies_system(ctx):
    rng = np.random.default_rng(41)
    for _ in range(50):
        n = int(rng.integers(1, 16))
        m = int(rng.integers(0, 6))
        a = MatrixHelpers.random_matrix(rng, n, n, ctx)
        b = MatrixHelpers.random_matrix(rng, n, m, ctx)
        x = MatrixHelpers.solve(a, b)
        assert x.shape == (n, m)
        assert a @ x == b


def test_solve_on_identity_columns_gives_inverse_columns(ctx, rng):
    a = MatrixHelpers.random_matrix(rng, 12, 12, ctx)
    cols = [7, 2, 9]
    selector = MatrixHelpers.submatrix(FpMatrix.identity(12, ctx), range(12), cols)
    expected = MatrixHelpers.submatrix(MatrixHelpers.inverse(a), range(12), cols)
    assert MatrixHelpers.solve(a, selector) == expected


def test_solve_errors(ctx7):
    with pytest.raises(DimensionError):
        MatrixHelpers.solve(FpMatrix.zeros(2, 3, ctx7), FpMatrix.zeros(2, 1, ctx7))
    with pytest.raises(DimensionError):
        MatrixHelpers.solve(FpMatrix.identity(2, ctx7), FpMatrix.zeros(3, 1, ctx7))
    singular = FpMatrix.from_rows([[1, 2], [3, 6]], ctx7)
    with pytest.raises(SingularError) as info:
        MatrixHelpers.solve(singular, FpMatrix.identity(2, ctx7))
    assert info.value.rank == 1
    assert MatrixHelpers.solve(FpMatrix.zeros(0, 0, ctx7), FpMatrix.zeros(0, 2, ctx7)).shape == (0, 2)


def test_entries_are_reduced_on_construction(ctx7):
    m = FpMatrix(np.array([[9, -1], [7, 3]], dtype=object), ctx7)
    assert m.to_rows() == [[2, 6], [0, 3]]
    assert m == FpMatrix.from_rows([[2, 6], [0, 3]], ctx7)


def test_random_projection_preserves_bounded_rank(ctx):
    rng = np.random.default_rng(62)
    successes = 0
    for _ in range(1000):
        r = int(rng.integers(0, 11))
        k = int(rng.integers(1, 6))
        m = MatrixHelpers.random_rank_matrix(rng, 10, 10, r, ctx)
        successes += MatrixHelpers.projected_bounded_rank(m, k + 1, rng) == min(k + 1, r)
    assert successes >= 999
