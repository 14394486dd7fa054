"""
ConnectivityMatrix: the n x n answer table shared by solvers, oracle and API.
"""

from typing import List, Optional, Sequence, Tuple

from pydantic import BaseModel, model_validator

from exceptions import ParameterError, ParseError

DIAGONAL = "-"


class ConnectivityMatrix(BaseModel):
    """min(k, connectivity) for ordered pairs; None marks the diagonal."""

    n: int
    k: int
    values: List[List[Optional[int]]]

    @model_validator(mode="after")
    def _check_shape(self) -> "ConnectivityMatrix":
        if len(self.values) != self.n or any(len(row) != self.n for row in self.values):
            raise ValueError(f"values must be {self.n}x{self.n}")
        for s, row in enumerate(self.values):
            for t, value in enumerate(row):
                if s == t:
                    if value is not None:
                        raise ValueError(f"diagonal entry ({s}, {s}) must be empty")
                elif value is None or not 0 <= value <= self.k:
                    raise ValueError(f"entry ({s}, {t}) = {value} outside [0, {self.k}]")
        return self

    @classmethod
    def empty(cls, n: int, k: int) -> "ConnectivityMatrix":
        values = [[None if s == t else 0 for t in range(n)] for s in range(n)]
        return cls(n=n, k=k, values=values)

    def get(self, s: int, t: int) -> int:
        if s == t:
            raise ParameterError(f"no value is defined for the pair ({s}, {s})")
        return self.values[s][t]

    def set(self, s: int, t: int, value: int) -> None:
        if s == t:
            raise ParameterError(f"no value is defined for the pair ({s}, {s})")
        if not 0 <= value <= self.k:
            raise ParameterError(f"value {value} outside [0, {self.k}]")
        self.values[s][t] = value

    def pairs(self) -> List[Tuple[int, int]]:
        return [(s, t) for s in range(self.n) for t in range(self.n) if s != t]

    def mismatches(self, other: "ConnectivityMatrix") -> List[Tuple[int, int, int, int]]:
        """(s, t, ours, theirs) for every differing pair"""
        if other.n != self.n:
            raise ParameterError(f"cannot compare {self.n}x{self.n} with {other.n}x{other.n}")
        return [
            (s, t, self.values[s][t], other.values[s][t])
            for s, t in self.pairs()
            if self.values[s][t] != other.values[s][t]
        ]

    def to_text(self) -> str:
        """n lines of n tab-separated fields, '-' on the diagonal"""
        lines = [
            "\t".join(DIAGONAL if value is None else str(value) for value in row)
            for row in self.values
        ]
        return "".join(line + "\n" for line in lines)

    @classmethod
    def from_text(cls, text: str, k: int) -> "ConnectivityMatrix":
        rows = [line for line in text.splitlines() if line.strip()]
        n = len(rows)
        values: List[List[Optional[int]]] = []
        for i, line in enumerate(rows, start=1):
            fields = line.split("\t")
            if len(fields) != n:
                raise ParseError(f"expected {n} fields, got {len(fields)}", i)
            try:
                values.append([None if f == DIAGONAL else int(f) for f in fields])
            except ValueError:
                raise ParseError(f"non-integer field in {line!r}", i)
        return cls(n=n, k=k, values=values)

    @staticmethod
    def majority(matrices: Sequence["ConnectivityMatrix"]) -> "ConnectivityMatrix":
        """
        Per-pair vote over an odd number of trial results.

        Takes the median, which is the majority value whenever one exists
        and never ties for an odd count.
        """
        if not matrices or len(matrices) % 2 == 0:
            raise ParameterError(f"majority needs an odd number of trials, got {len(matrices)}")
        first = matrices[0]
        result = ConnectivityMatrix.empty(first.n, first.k)
        for s, t in result.pairs():
            votes = sorted(m.values[s][t] for m in matrices)
            result.values[s][t] = votes[len(votes) // 2]
        return result
