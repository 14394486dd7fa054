import numpy as np
import pytest

from exceptions import DivisionByZeroError, FieldMismatchError, ParameterError
from helpers.field_helpers import M61, FieldContext, FieldElement, FieldHelpers


def test_add_examples(ctx7, ctx):
    assert ctx7.add(ctx7.element(3), ctx7.element(5)).value == 1
    for x in range(7):
        assert ctx7.add(ctx7.zero(), ctx7.element(x)).value == x
    assert ctx.add(ctx.element(M61 - 1), ctx.one()).value == 0


def test_mul_sub_neg_examples(ctx7, ctx):
    assert ctx7.mul(ctx7.element(3), ctx7.element(5)).value == 1
    for x in range(7):
        assert ctx7.mul(ctx7.one(), ctx7.element(x)).value == x
    assert ctx7.sub(ctx7.element(2), ctx7.element(5)).value == 4
    assert ctx7.neg(ctx7.element(3)).value == 4
    assert ctx7.neg(ctx7.zero()).value == 0
    assert ctx.mul(ctx.element(1 << 60), ctx.element(2)).value == (1 << 61) % M61 == 1


def test_mul_matches_big_integer_reduction(ctx, rng):
    for _ in range(1000):
        a, b = (int(x) for x in rng.integers(0, M61, size=2))
        assert ctx.mul(ctx.element(a), ctx.element(b)).value == (a * b) % M61


def test_inverse_examples(ctx7, ctx):
    assert ctx7.inv(ctx7.element(3)).value == 5
    assert ctx7.inv(ctx7.one()).value == 1
    assert ctx.inv(ctx.element(2)).value == (M61 + 1) // 2


def test_inverse_of_zero_raises(ctx7):
    with pytest.raises(DivisionByZeroError):
        ctx7.inv(ctx7.zero())
    with pytest.raises(ZeroDivisionError):
        ctx7.element(4) / 0


def test_mixed_context_rejected(ctx7):
    other = FieldContext(p=11)
    with pytest.raises(FieldMismatchError):
        ctx7.add(ctx7.element(1), other.element(1))
    with pytest.raises(FieldMismatchError):
        ctx7.element(1) * other.element(2)


def test_element_must_be_canonical(ctx7):
    with pytest.raises(ParameterError):
        FieldElement(7, ctx7)
    assert ctx7.element(-1).value == 6


def test_context_rejects_composite_and_oversized_moduli():
    for bad in (0, 1, 4, 91, 1 << 61, (1 << 64) + 13):
        with pytest.raises(ValueError):
            FieldContext(p=bad)
    assert FieldContext(p=2).p == 2
    assert FieldHelpers.check_prime(M61) == M61


def test_random_element_is_deterministic(ctx):
    a = [ctx.random_element(np.random.default_rng(7)) for _ in range(3)]
    assert a[0] == a[1] == a[2]
    r1, r2 = np.random.default_rng(7), np.random.default_rng(7)
    assert [FieldHelpers.random_element(r1, ctx) for _ in range(10)] == [
        FieldHelpers.random_element(r2, ctx) for _ in range(10)
    ]


def test_distinct_seeds_give_distinct_sequences(ctx):
    r1, r2 = np.random.default_rng(1), np.random.default_rng(2)
    first = [ctx.random_element(r1).value for _ in range(10)]
    second = [ctx.random_element(r2).value for _ in range(10)]
    assert first != second


def test_random_element_mean_and_range(ctx7, ctx):
    rng = np.random.default_rng(99)
    draws = [FieldHelpers.random_element(rng, ctx).value for _ in range(100_000)]
    mean = sum(draws) / len(draws)
    expected = (ctx.p - 1) / 2
    assert abs(mean - expected) / expected < 0.01
    assert max(draws) < ctx.p

    small = ctx7.random_vector(rng, 10_000)
    assert set(int(v) for v in small) <= set(range(7))


def test_field_axioms_on_random_triples(ctx):
    rng = np.random.default_rng(2024)
    values = rng.integers(0, ctx.p, size=(10_000, 3))
    zero, one = ctx.zero(), ctx.one()
    for a, b, c in values:
        a, b, c = ctx.element(int(a)), ctx.element(int(b)), ctx.element(int(c))
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a + b == b + a
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c
        assert a + zero == a and a * one == a
        assert a + (-a) == zero
        if a.value:
            assert ctx.inv(a) * a == one


def test_power_and_division(ctx7):
    a = ctx7.element(3)
    assert (a**6).value == 1
    assert (a**-1).value == 5
    assert (ctx7.element(6) / ctx7.element(3)).value == 2


def test_prime_bound():
    assert FieldHelpers.prime_bound_ok(M61, 4000)
    assert not FieldHelpers.prime_bound_ok(M61, 10_000)
    assert not FieldHelpers.prime_bound_ok(7, 2)
