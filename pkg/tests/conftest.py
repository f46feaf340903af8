"""Shared deterministic generators for the test suite.

Everything random is driven by explicitly seeded random.Random
instances, so every run sees the same matrices.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations

from cflat.zlinalg import IntMatrix, inverse_unimodular

SEED = 20260816


def random_matrix(rng: random.Random, rows: int, cols: int, bound: int) -> IntMatrix:
    return IntMatrix(
        [[rng.randint(-bound, bound) for _ in range(cols)] for _ in range(rows)]
    )


def random_unimodular(rng: random.Random, n: int, steps: int = 12) -> IntMatrix:
    """Product of shears, swaps and sign flips: always det = +-1."""
    m = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for _ in range(steps):
        kind = rng.randrange(3)
        i = rng.randrange(n)
        j = rng.randrange(n)
        if kind == 0 and i != j:
            c = rng.randint(-3, 3)
            for t in range(n):
                m[i][t] += c * m[j][t]
        elif kind == 1 and i != j:
            m[i], m[j] = m[j], m[i]
        elif kind == 2:
            m[i] = [-x for x in m[i]]
    return IntMatrix(m)


# companion matrices of the cyclotomic polynomials whose roots are the
# eigenvalues a finite-order integer matrix can have in rank <= 2
_CYCLOTOMIC_BLOCKS = {
    1: [[1]],
    2: [[-1]],
    3: [[0, -1], [1, -1]],
    4: [[0, -1], [1, 0]],
    6: [[0, -1], [1, 1]],
}


def _block_diag(blocks: list[list[list[int]]]) -> IntMatrix:
    n = sum(len(b) for b in blocks)
    m = [[0] * n for _ in range(n)]
    at = 0
    for b in blocks:
        k = len(b)
        for i in range(k):
            for j in range(k):
                m[at + i][at + j] = b[i][j]
        at += k
    return IntMatrix(m)


def random_finite_order_matrix(
    rng: random.Random, max_rank: int = 5, allow_identity: bool = False
) -> IntMatrix:
    """A random integer matrix of finite order: a block sum of
    rotation/reflection blocks conjugated by a random unimodular
    matrix.  Orders realized: 2, 3, 4, 6 (and 1 when allowed)."""
    while True:
        blocks = []
        rank = 0
        while rank < max_rank:
            order = rng.choice((1, 1, 2, 2, 3, 4, 6))
            block = _CYCLOTOMIC_BLOCKS[order]
            if rank + len(block) > max_rank:
                break
            blocks.append(block)
            rank += len(block)
            if rng.random() < 0.35:
                break
        if not blocks:
            continue
        if not allow_identity and all(b == _CYCLOTOMIC_BLOCKS[1] for b in blocks):
            continue
        core = _block_diag(blocks)
        w = random_unimodular(rng, core.rows)
        return w * core * inverse_unimodular(w)


def _minor_det(m: IntMatrix, rows: tuple[int, ...], cols: tuple[int, ...]) -> int:
    """Cofactor-expansion determinant of a small submatrix."""
    k = len(rows)
    if k == 1:
        return m[rows[0], cols[0]]
    total = 0
    sign = 1
    for t in range(k):
        sub = _minor_det(m, rows[1:], cols[:t] + cols[t + 1 :])
        total += sign * m[rows[0], cols[t]] * sub
        sign = -sign
    return total


def gcd_minor_divisors(m: IntMatrix) -> list[int]:
    """Independent elementary-divisor oracle: the k-th divisor is
    gcd(k x k minors) / gcd((k-1) x (k-1) minors).  Exponential in the
    size, so only for small matrices."""
    from math import gcd

    divisors = []
    prev = 1
    for k in range(1, min(m.rows, m.cols) + 1):
        g = 0
        for rows in combinations(range(m.rows), k):
            for cols in combinations(range(m.cols), k):
                g = gcd(g, _minor_det(m, rows, cols))
        if g == 0:
            break
        divisors.append(g // prev)
        prev = g
    return divisors


def random_angles(rng: random.Random, count: int, max_denom: int) -> tuple[Fraction, ...]:
    out = []
    for _ in range(count):
        q = rng.randint(1, max_denom)
        p = rng.randrange(q)
        out.append(Fraction(p, q))
    return tuple(out)
