"""First cohomology of a finite-order integer lattice automorphism.

A ``GLattice`` is the lattice Z^n together with one automorphism g0 of
finite order k -- equivalently a module over the cyclic group of order
k.  The module computes H^1 of that action three independent ways:

* an elimination oracle: ker(norm) / im(g0 - 1) via a primitive kernel
  basis and a cokernel,
* a counting formula: the number of fixed vectors mod k corrected by
  the fixed rank at an auxiliary prime q coprime to k (the correction
  divides exactly; non-divisibility is a checked internal error),
* for prime k, a two-dimension count p^(fixdim_p - fixdim_q).

It also produces the coinvariant lattice and a sufficient-condition
certificate for vanishing of H^1.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import DomainError, InternalCheckError
from .zlinalg import (
    AbelianGroup,
    IntMatrix,
    cokernel,
    fixed_card_mod,
    kernel_basis,
    rank_mod,
    smith_normal_form,
)
from .zlinalg.snf import _is_prime, solve_columns

_ORDER_BOUND = 10_000


@dataclass(frozen=True)
class GLattice:
    """Z^rank with a finite-order automorphism ``g0`` of order ``order``."""

    rank: int
    g0: IntMatrix
    order: int


def make_glattice(g0: IntMatrix) -> GLattice:
    """Validate ``g0`` (square, det = +-1, finite order) and wrap it."""
    if not g0.is_square:
        raise DomainError(f"automorphism matrix must be square, got {g0.rows}x{g0.cols}")
    if abs(g0.det()) != 1:
        raise DomainError("matrix is not a lattice automorphism (det != +-1)")
    ident = IntMatrix.identity(g0.rows)
    power = g0
    order = 1
    while power != ident:
        power = power * g0
        order += 1
        if order > _ORDER_BOUND:
            raise DomainError(f"automorphism order exceeds bound {_ORDER_BOUND}")
    return GLattice(rank=g0.rows, g0=g0, order=order)


def _norm_matrix(lat: GLattice) -> IntMatrix:
    """Sum of g0^i for i = 0 .. order-1."""
    total = IntMatrix.identity(lat.rank)
    power = lat.g0
    for _ in range(lat.order - 1):
        total = total + power
        power = power * lat.g0
    return total


def _difference(lat: GLattice) -> IntMatrix:
    return lat.g0 - IntMatrix.identity(lat.rank)


def h1_oracle(lat: GLattice) -> AbelianGroup:
    """H^1 of the action by direct elimination: ker(norm)/im(g0 - 1).

    The image of g0 - 1 lies inside the kernel lattice of the norm map
    (their composite is g0^k - 1 = 0), so the generators of the image
    have exact integer coordinates in a primitive basis of that kernel;
    H^1 is the cokernel of those coordinates.  The result is always
    finite.
    """
    norm = _norm_matrix(lat)
    kb = kernel_basis(norm)  # rank x r, primitive
    diff = _difference(lat)
    try:
        coords = solve_columns(kb, diff)  # r x rank
    except DomainError as exc:
        raise InternalCheckError(
            f"image of (g0 - 1) escaped the norm kernel: {exc}"
        ) from exc
    group = cokernel(coords)
    if group.free_rank != 0:
        raise InternalCheckError("H^1 of a finite cyclic action must be finite")
    return group


def h1_card_formula(lat: GLattice, q: int) -> int:
    """Cardinality of H^1 by the fixed-point counting formula.

    ``q`` must be a prime not dividing the order k.  The count of fixed
    vectors of g0 on (Z/k)^n is divided by k to the power of the fixed
    dimension at q; the division is exact on valid input and a failure
    is reported as an internal inconsistency.
    """
    k = lat.order
    _require_coprime_prime(q, k)
    if k == 1:
        return 1
    diff = _difference(lat)
    fixed = fixed_card_mod(diff, k)
    fixdim_q = lat.rank - rank_mod(diff, q)
    denom = k**fixdim_q
    if fixed % denom:
        raise InternalCheckError(
            f"fixed-point count {fixed} is not divisible by k^fixdim = {denom}"
        )
    return fixed // denom


def h1_card_prime_formula(lat: GLattice, q: int) -> int:
    """Cardinality of H^1 when the order k is prime: k^(fixdim_k - fixdim_q)."""
    k = lat.order
    if not _is_prime(k):
        raise DomainError(f"prime-order formula needs prime order, got {k}")
    _require_coprime_prime(q, k)
    diff = _difference(lat)
    fixdim_k = lat.rank - rank_mod(diff, k)
    fixdim_q = lat.rank - rank_mod(diff, q)
    if fixdim_k < fixdim_q:
        raise InternalCheckError(
            f"fixed dimension dropped below the coprime reference: {fixdim_k} < {fixdim_q}"
        )
    return k ** (fixdim_k - fixdim_q)


class TrivialityCertificate(enum.Enum):
    """Outcome of the sufficient vanishing test for H^1."""

    PROVEN_TRIVIAL = "proven_trivial"
    INCONCLUSIVE = "inconclusive"


def h1_triviality_certificate(lat: GLattice, q: int) -> TrivialityCertificate:
    """Sufficient condition for H^1 = 0.

    If for every prime p dividing the order the fixed dimension mod p
    equals the fixed dimension mod q (q prime, coprime to the order),
    the cohomology vanishes.  The test never proves nontriviality.
    """
    k = lat.order
    _require_coprime_prime(q, k)
    if k == 1:
        return TrivialityCertificate.PROVEN_TRIVIAL
    diff = _difference(lat)
    fixdim_q = lat.rank - rank_mod(diff, q)
    for p in _prime_divisors(k):
        fixdim_p = lat.rank - rank_mod(diff, p)
        if fixdim_p != fixdim_q:
            return TrivialityCertificate.INCONCLUSIVE
    return TrivialityCertificate.PROVEN_TRIVIAL


def coinvariants(lat: GLattice) -> tuple[AbelianGroup, AbelianGroup]:
    """The coinvariant lattice Z^n / im(g0 - 1) and its torsion part.

    The torsion of the coinvariants is another model of H^1 of the
    action; ``tests`` and the mapping-torus homology route both lean on
    that identification.
    """
    full = cokernel(_difference(lat))
    return full, full.torsion_subgroup()


@dataclass(frozen=True)
class H1Report:
    """All H^1 computations for one lattice action, cross-checked."""

    lattice: GLattice
    group: AbelianGroup
    cardinality: int
    formula_value: int
    prime_formula_value: int | None
    q_used: int
    certificate: TrivialityCertificate


def h1_report(lat: GLattice, q: int | None = None) -> H1Report:
    """Run the oracle, the formula(s) and the certificate together.

    Picks the smallest admissible prime q when none is given.  Any
    disagreement between routes is an internal error, never a report.
    """
    if q is None:
        q = _smallest_coprime_prime(lat.order)
    group = h1_oracle(lat)
    card = group.cardinality()
    formula = h1_card_formula(lat, q)
    if formula != card:
        raise InternalCheckError(
            f"counting formula {formula} disagrees with oracle {card}"
        )
    prime_value: int | None = None
    if _is_prime(lat.order):
        prime_value = h1_card_prime_formula(lat, q)
        if prime_value != card:
            raise InternalCheckError(
                f"prime-order formula {prime_value} disagrees with oracle {card}"
            )
    cert = h1_triviality_certificate(lat, q)
    if cert is TrivialityCertificate.PROVEN_TRIVIAL and not group.is_trivial:
        raise InternalCheckError("triviality certificate contradicts the oracle")
    return H1Report(
        lattice=lat,
        group=group,
        cardinality=card,
        formula_value=formula,
        prime_formula_value=prime_value,
        q_used=q,
        certificate=cert,
    )


def _require_coprime_prime(q: int, k: int) -> None:
    if not _is_prime(q):
        raise DomainError(f"auxiliary modulus must be prime, got {q}")
    if k % q == 0:
        raise DomainError(f"auxiliary prime {q} divides the order {k}")


def _prime_divisors(k: int) -> list[int]:
    out = []
    n = k
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def _smallest_coprime_prime(k: int) -> int:
    q = 2
    while k % q == 0 or not _is_prime(q):
        q += 1
    return q
