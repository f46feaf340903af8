"""Finitely generated abelian groups in invariant-factor form."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, prod
from typing import Iterable

from ..errors import DomainError


def divisor_chain(values: Iterable[int]) -> tuple[int, ...]:
    """Normalize torsion coefficients into an ascending divisor chain.

    Unit factors are dropped, zeros are rejected (a zero is a free
    summand, not torsion), and the result satisfies d1 | d2 | ... .

    >>> divisor_chain([2, 3])
    (6,)
    >>> divisor_chain([4, 6])
    (2, 12)
    """
    ds = [abs(v) for v in values]
    if any(v == 0 for v in ds):
        raise DomainError("zero is not a torsion coefficient")
    ds = [v for v in ds if v != 1]
    # pairwise gcd/lcm exchange until the chain condition holds
    changed = True
    while changed:
        changed = False
        for i in range(len(ds)):
            for j in range(i + 1, len(ds)):
                if ds[j] % ds[i]:
                    g = gcd(ds[i], ds[j])
                    ds[i], ds[j] = g, ds[i] * ds[j] // g
                    changed = True
    ds = [v for v in ds if v != 1]
    ds.sort()
    return tuple(ds)


@dataclass(frozen=True)
class AbelianGroup:
    """Z^free_rank plus cyclic factors Z/d1 + ... + Z/dk, d1 | d2 | ... .

    The torsion tuple is always a normalized divisor chain with every
    entry >= 2, so equal groups compare equal.
    """

    free_rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        if self.free_rank < 0:
            raise DomainError("negative free rank")
        ds = tuple(self.torsion)
        if any(d < 2 for d in ds):
            raise DomainError(f"torsion coefficients must be >= 2, got {ds}")
        for a, b in zip(ds, ds[1:]):
            if b % a:
                raise DomainError(f"torsion {ds} is not a divisor chain")
        object.__setattr__(self, "torsion", ds)

    @classmethod
    def from_invariants(cls, free_rank: int, coefficients: Iterable[int]) -> "AbelianGroup":
        """Build from arbitrary (unordered, unnormalized) coefficients."""
        return cls(free_rank, divisor_chain(coefficients))

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0

    def torsion_cardinality(self) -> int:
        return prod(self.torsion)

    def cardinality(self) -> int:
        """Order of the group; raises if infinite."""
        if self.free_rank:
            raise DomainError("infinite group has no cardinality")
        return self.torsion_cardinality()

    def torsion_subgroup(self) -> "AbelianGroup":
        return AbelianGroup(0, self.torsion)

    def __str__(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " + ".join(parts) if parts else "0"
