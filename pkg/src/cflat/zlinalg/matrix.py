"""Dense integer matrices with exact arithmetic.

``IntMatrix`` is an immutable rectangular matrix of Python ints.  All
operations are exact; nothing here ever touches floating point.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from ..errors import DomainError
from . import backend


class IntMatrix:
    """Immutable matrix of arbitrary-precision integers.

    >>> m = IntMatrix([[2, 4], [6, 8]])
    >>> m.det()
    -8
    >>> (m * IntMatrix.identity(2)) == m
    True
    """

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, entries: Iterable[Sequence[int]]):
        data = tuple(tuple(row) for row in entries)
        if data:
            width = len(data[0])
            for row in data:
                if len(row) != width:
                    raise DomainError("ragged rows in matrix input")
                for e in row:
                    if not isinstance(e, int) or isinstance(e, bool):
                        raise DomainError(f"non-integer matrix entry {e!r}")
        else:
            width = 0
        object.__setattr__(self, "_data", data)
        object.__setattr__(self, "rows", len(data))
        object.__setattr__(self, "cols", width)

    def __setattr__(self, name, value):
        raise AttributeError("IntMatrix is immutable")

    # -- constructors ------------------------------------------------

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls([[0] * cols for _ in range(rows)])

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], rows: int | None = None) -> "IntMatrix":
        """Build a matrix whose j-th column is ``columns[j]``."""
        if not columns:
            if rows is None:
                raise DomainError("from_columns with no columns needs an explicit row count")
            return cls([[] for _ in range(rows)])
        height = len(columns[0])
        return cls([[col[i] for col in columns] for i in range(height)])

    # -- access ------------------------------------------------------

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self._data[i][j]

    def row(self, i: int) -> tuple[int, ...]:
        return self._data[i]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self._data)

    def to_lists(self) -> list[list[int]]:
        """Mutable copy, the form the elimination kernels work on."""
        return [list(row) for row in self._data]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_identity(self) -> bool:
        if not self.is_square:
            return False
        return all(
            e == (1 if i == j else 0)
            for i, row in enumerate(self._data)
            for j, e in enumerate(row)
        )

    def is_zero(self) -> bool:
        return all(e == 0 for row in self._data for e in row)

    # -- arithmetic --------------------------------------------------

    def __mul__(self, other: "IntMatrix") -> "IntMatrix":
        if not isinstance(other, IntMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise DomainError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        return IntMatrix(backend.matmul(self.to_lists(), other.to_lists()))

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        self._same_shape(other)
        return IntMatrix(
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self._data, other._data)
            ]
        )

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        self._same_shape(other)
        return IntMatrix(
            [
                [a - b for a, b in zip(ra, rb)]
                for ra, rb in zip(self._data, other._data)
            ]
        )

    def __neg__(self) -> "IntMatrix":
        return IntMatrix([[-e for e in row] for row in self._data])

    def scale(self, c: int) -> "IntMatrix":
        return IntMatrix([[c * e for e in row] for row in self._data])

    def _same_shape(self, other: "IntMatrix") -> None:
        if self.rows != other.rows or self.cols != other.cols:
            raise DomainError(
                f"shape mismatch: {self.rows}x{self.cols} vs {other.rows}x{other.cols}"
            )

    def transpose(self) -> "IntMatrix":
        return IntMatrix(
            [[self._data[i][j] for i in range(self.rows)] for j in range(self.cols)]
        )

    def apply_vector(self, vec: Sequence[int]) -> tuple[int, ...]:
        """Matrix times column vector."""
        if len(vec) != self.cols:
            raise DomainError(f"vector length {len(vec)} != column count {self.cols}")
        return tuple(sum(e * x for e, x in zip(row, vec)) for row in self._data)

    def pow(self, k: int) -> "IntMatrix":
        """Nonnegative integer power of a square matrix."""
        if not self.is_square:
            raise DomainError("matrix power needs a square matrix")
        if k < 0:
            raise DomainError("negative matrix power not supported")
        out = IntMatrix.identity(self.rows)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def det(self) -> int:
        """Exact determinant (fraction-free elimination)."""
        if not self.is_square:
            raise DomainError("determinant of a non-square matrix")
        return backend.det_inplace(self.to_lists())

    def mod(self, m: int) -> "IntMatrix":
        return IntMatrix([[e % m for e in row] for row in self._data])

    # -- equality / hashing / repr -----------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, IntMatrix) and self._data == other._data

    def __hash__(self) -> int:
        return hash(self._data)

    def __repr__(self) -> str:
        body = ", ".join(str(list(row)) for row in self._data)
        return f"IntMatrix([{body}])"
