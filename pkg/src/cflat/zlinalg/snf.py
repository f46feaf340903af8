"""Smith normal form and the lattice operations derived from it.

Everything is exact integer arithmetic.  The decomposition carries its
unimodular transforms so callers can verify ``u * m * v == d``
directly; derived operations (cokernel, kernel basis, solution of
linear systems over Z, counts of solutions mod m) all reduce to one
Smith decomposition.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt
from typing import Sequence

from ..errors import DomainError, InternalCheckError
from . import backend
from .abelian import AbelianGroup
from .matrix import IntMatrix


@dataclass(frozen=True)
class SNFDecomposition:
    """Witnessed Smith normal form: ``u * matrix * v == d``.

    ``d`` is diagonal with nonnegative entries forming a divisibility
    chain; ``u`` and ``v`` are unimodular.
    """

    matrix: IntMatrix
    d: IntMatrix
    u: IntMatrix
    v: IntMatrix

    @property
    def diagonal(self) -> tuple[int, ...]:
        """The full diagonal of ``d`` (length min(rows, cols), zeros kept)."""
        n = min(self.d.rows, self.d.cols)
        return tuple(self.d[i, i] for i in range(n))

    @property
    def divisors(self) -> tuple[int, ...]:
        """The nonzero invariant factors, in ascending divisibility order."""
        return tuple(e for e in self.diagonal if e)

    @property
    def rank(self) -> int:
        return len(self.divisors)

    def check(self) -> None:
        """Re-verify every witness property; raises on any failure."""
        if self.u * self.matrix * self.v != self.d:
            raise InternalCheckError("u*m*v != d")
        if abs(self.u.det()) != 1 or abs(self.v.det()) != 1:
            raise InternalCheckError("transform is not unimodular")
        diag = self.diagonal
        for i in range(self.d.rows):
            for j in range(self.d.cols):
                if i != j and self.d[i, j]:
                    raise InternalCheckError("d is not diagonal")
        seen_zero = False
        for e in diag:
            if e < 0:
                raise InternalCheckError("negative diagonal entry")
            if e == 0:
                seen_zero = True
            elif seen_zero:
                raise InternalCheckError("zero divisor before a nonzero one")
        for a, b in zip(self.divisors, self.divisors[1:]):
            if b % a:
                raise InternalCheckError(f"divisor chain broken: {a} does not divide {b}")


def smith_normal_form(m: IntMatrix) -> SNFDecomposition:
    """Smith normal form with unimodular transforms.

    >>> dec = smith_normal_form(IntMatrix([[2, 4], [6, 8]]))
    >>> dec.divisors
    (2, 4)
    """
    d = m.to_lists()
    u = IntMatrix.identity(m.rows).to_lists()
    v = IntMatrix.identity(m.cols).to_lists()
    backend.snf_inplace(d, u, v)
    return SNFDecomposition(matrix=m, d=IntMatrix(d), u=IntMatrix(u), v=IntMatrix(v))


def cokernel(m: IntMatrix) -> AbelianGroup:
    """Z^rows modulo the lattice spanned by the columns of ``m``.

    >>> str(cokernel(IntMatrix([[2, 0], [0, 3]])))
    'Z/6'
    """
    dec = smith_normal_form(m)
    divisors = dec.divisors
    free = m.rows - len(divisors)
    torsion = [e for e in divisors if e > 1]
    return AbelianGroup(free, tuple(torsion))


def kernel_basis(m: IntMatrix) -> IntMatrix:
    """A primitive basis of the integer kernel lattice of ``m``.

    Returns a cols x k matrix whose columns form a basis of
    ``{x : m @ x = 0}``; the columns extend to a basis of Z^cols, so
    the basis is primitive.  k may be zero.
    """
    dec = smith_normal_form(m)
    diag = dec.diagonal
    free_cols = [j for j in range(m.cols) if j >= len(diag) or diag[j] == 0]
    columns = [dec.v.column(j) for j in free_cols]
    return IntMatrix.from_columns(columns, rows=m.cols)


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    f = 3
    top = isqrt(p)
    while f <= top:
        if p % f == 0:
            return False
        f += 2
    return True


def rank_mod(m: IntMatrix, p: int) -> int:
    """Rank of ``m`` over the prime field F_p."""
    if not _is_prime(p):
        raise DomainError(f"rank_mod needs a prime modulus, got {p}")
    return backend.rank_mod_inplace(m.to_lists(), p)


def fixed_card_mod(m: IntMatrix, modulus: int) -> int:
    """Number of solutions of ``m @ x == 0`` in (Z/modulus)^cols.

    The modulus may be composite.  Computed from the Smith divisors:
    each diagonal entry d contributes gcd(d, modulus) solutions (a zero
    entry contributes the full modulus), and columns beyond the
    diagonal are free.

    >>> fixed_card_mod(IntMatrix([[-1, 1], [1, -1]]), 2)
    2
    """
    if modulus < 2:
        raise DomainError(f"modulus must be >= 2, got {modulus}")
    dec = smith_normal_form(m)
    count = 1
    diag = dec.diagonal
    for e in diag:
        count *= modulus if e == 0 else gcd(e, modulus)
    count *= modulus ** (m.cols - len(diag))
    return count


def solve_columns(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    """Solve ``a @ x == b`` column by column over the integers.

    Raises DomainError when some column of ``b`` is not in the column
    lattice of ``a``.  When a solution exists it is produced exactly;
    free coordinates are set to zero.
    """
    if a.rows != b.rows:
        raise DomainError(f"row mismatch: {a.rows} vs {b.rows}")
    dec = smith_normal_form(a)
    diag = dec.diagonal
    ub = dec.u * b
    cols_x = []
    for jb in range(b.cols):
        z = [0] * a.cols
        for i in range(a.rows):
            rhs = ub[i, jb]
            d = diag[i] if i < len(diag) else 0
            if d == 0:
                if rhs != 0:
                    raise DomainError("system has no rational solution")
            else:
                if rhs % d:
                    raise DomainError("system has no integral solution")
                if i < a.cols:
                    z[i] = rhs // d
        cols_x.append(z)
    zmat = IntMatrix.from_columns(cols_x, rows=a.cols)
    return dec.v * zmat


def inverse_unimodular(m: IntMatrix) -> IntMatrix:
    """Exact inverse of a unimodular square matrix.

    Uses the Smith transforms: the Smith form of a unimodular matrix is
    the identity, so inverse = v * u.
    """
    if not m.is_square:
        raise DomainError("inverse of a non-square matrix")
    dec = smith_normal_form(m)
    if not dec.d.is_identity():
        raise DomainError("matrix is not unimodular")
    return dec.v * dec.u
