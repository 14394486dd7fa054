"""
Prime field helpers.
Arithmetic over F_p with canonical residues in [0, p).
"""

from typing import Any, Union
import logging

import numpy as np
from pydantic import BaseModel, ConfigDict, field_validator
from sympy import isprime

from exceptions import DivisionByZeroError, FieldMismatchError, ParameterError

logger = logging.getLogger(__name__)

M61 = (1 << 61) - 1  # 2^61 - 1 = 2305843009213693951
DEFAULT_PRIME = M61

# random draws go through numpy int64
MAX_PRIME = (1 << 63) - 1


def _reduce_m61(x: int) -> int:
    """Reduce 0 <= x < 2^122 modulo 2^61 - 1 by folding the high half."""
    r = (x >> 61) + (x & M61)
    if r >= M61:
        r -= M61
    return r


class FieldHelpers:
    """Helper class for prime checks and sampling."""

    @staticmethod
    def check_prime(p: int) -> int:
        """
        Validate a word-sized prime modulus

        Args:
            p: Candidate modulus

        Returns:
            p unchanged

        Raises:
            ParameterError if p is not a prime in [2, 2^63)
        """
        if p < 2 or p > MAX_PRIME:
            raise ParameterError(f"modulus {p} outside [2, 2^63)")
        if not isprime(p):
            raise ParameterError(f"modulus {p} is not prime")
        return p

    @staticmethod
    def random_element(rng: np.random.Generator, ctx: "FieldContext") -> "FieldElement":
        """Uniform element of F_p drawn from rng"""
        return FieldElement(int(rng.integers(0, ctx.p, dtype=np.int64)), ctx)

    @staticmethod
    def prime_bound_ok(p: int, count: int) -> bool:
        """True iff 2 * count^5 <= p, the Schwartz-Zippel threshold both algorithms want"""
        return 2 * count**5 <= p


class FieldContext(BaseModel):
    """The prime modulus governing all arithmetic."""

    model_config = ConfigDict(frozen=True)

    p: int = DEFAULT_PRIME

    @field_validator("p")
    @classmethod
    def _validate_prime(cls, value: int) -> int:
        return FieldHelpers.check_prime(value)

    def reduce(self, x: int) -> int:
        if self.p == M61 and 0 <= x < (1 << 122):
            return _reduce_m61(x)
        return x % self.p

    def element(self, value: int) -> "FieldElement":
        return FieldElement(value % self.p, self)

    def zero(self) -> "FieldElement":
        return FieldElement(0, self)

    def one(self) -> "FieldElement":
        return FieldElement(1, self)

    def _check(self, *operands: "FieldElement") -> None:
        for operand in operands:
            if operand.ctx.p != self.p:
                raise FieldMismatchError(
                    f"operand from F_{operand.ctx.p} used in F_{self.p}"
                )

    def add(self, a: "FieldElement", b: "FieldElement") -> "FieldElement":
        self._check(a, b)
        s = a.value + b.value
        if s >= self.p:
            s -= self.p
        return FieldElement(s, self)

    def sub(self, a: "FieldElement", b: "FieldElement") -> "FieldElement":
        self._check(a, b)
        s = a.value - b.value
        if s < 0:
            s += self.p
        return FieldElement(s, self)

    def neg(self, a: "FieldElement") -> "FieldElement":
        self._check(a)
        return FieldElement(self.p - a.value if a.value else 0, self)

    def mul(self, a: "FieldElement", b: "FieldElement") -> "FieldElement":
        self._check(a, b)
        return FieldElement(self.reduce(a.value * b.value), self)

    def inv(self, a: "FieldElement") -> "FieldElement":
        """Multiplicative inverse via Fermat: a^(p-2)"""
        self._check(a)
        if a.value == 0:
            raise DivisionByZeroError(f"cannot invert zero in F_{self.p}")
        return FieldElement(pow(a.value, self.p - 2, self.p), self)

    def div(self, a: "FieldElement", b: "FieldElement") -> "FieldElement":
        return self.mul(a, self.inv(b))

    def pow(self, a: "FieldElement", exponent: int) -> "FieldElement":
        self._check(a)
        if exponent < 0:
            return self.pow(self.inv(a), -exponent)
        return FieldElement(pow(a.value, exponent, self.p), self)

    def inv_int(self, value: int) -> int:
        """Inverse of a raw residue, used by elimination kernels"""
        if value % self.p == 0:
            raise DivisionByZeroError(f"cannot invert zero in F_{self.p}")
        return pow(value, self.p - 2, self.p)

    def random_element(self, rng: np.random.Generator) -> "FieldElement":
        return FieldHelpers.random_element(rng, self)

    def random_vector(self, rng: np.random.Generator, size: Any) -> np.ndarray:
        """Uniform residues as an object array of Python ints"""
        return rng.integers(0, self.p, size=size, dtype=np.int64).astype(object)


class FieldElement:
    """An element of F_p; a value type bound to its context."""

    __slots__ = ("value", "ctx")

    def __init__(self, value: int, ctx: FieldContext):
        if not 0 <= value < ctx.p:
            raise ParameterError(f"{value} is not a canonical residue mod {ctx.p}")
        self.value = value
        self.ctx = ctx

    def _coerce(self, other: Union["FieldElement", int]) -> "FieldElement":
        if isinstance(other, FieldElement):
            return other
        return self.ctx.element(other)

    def __add__(self, other):
        return self.ctx.add(self, self._coerce(other))

    __radd__ = __add__

    def __sub__(self, other):
        return self.ctx.sub(self, self._coerce(other))

    def __rsub__(self, other):
        return self.ctx.sub(self._coerce(other), self)

    def __mul__(self, other):
        return self.ctx.mul(self, self._coerce(other))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self.ctx.div(self, self._coerce(other))

    def __neg__(self):
        return self.ctx.neg(self)

    def __pow__(self, exponent: int):
        return self.ctx.pow(self, exponent)

    def __int__(self) -> int:
        return self.value

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElement):
            return self.value == other.value and self.ctx.p == other.ctx.p
        if isinstance(other, int):
            return self.value == other % self.ctx.p
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.value, self.ctx.p))

    def __repr__(self) -> str:
        return f"FieldElement({self.value} mod {self.ctx.p})"
