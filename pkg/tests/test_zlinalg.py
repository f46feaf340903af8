"""Integer linear algebra: Smith forms, witnesses, derived operations."""

import random

import pytest

from conftest import SEED, gcd_minor_divisors, random_matrix, random_unimodular
from cflat.errors import DomainError
from cflat.zlinalg import (
    AbelianGroup,
    IntMatrix,
    KERNEL_BACKEND,
    cokernel,
    divisor_chain,
    fixed_card_mod,
    inverse_unimodular,
    kernel_basis,
    rank_mod,
    smith_normal_form,
    solve_columns,
)

# ----------------------------------------------------------------------
# matrices
# ----------------------------------------------------------------------


def test_matrix_construction_and_access():
    m = IntMatrix([[1, 2, 3], [4, 5, 6]])
    assert (m.rows, m.cols) == (2, 3)
    assert m[1, 2] == 6
    assert m.row(0) == (1, 2, 3)
    assert m.column(2) == (3, 6)
    assert m.transpose().to_lists() == [[1, 4], [2, 5], [3, 6]]


def test_matrix_rejects_bad_input():
    with pytest.raises(DomainError):
        IntMatrix([[1, 2], [3]])
    with pytest.raises(DomainError):
        IntMatrix([[1, True]])
    with pytest.raises(DomainError):
        IntMatrix([[1.5]])


def test_matrix_arithmetic():
    a = IntMatrix([[1, 2], [3, 4]])
    b = IntMatrix([[0, 1], [1, 0]])
    assert (a * b).to_lists() == [[2, 1], [4, 3]]
    assert (a + b - b) == a
    assert (-a).scale(-1) == a
    assert a.pow(0).is_identity()
    assert a.pow(3) == a * a * a
    assert a.det() == -2
    assert b.det() == -1
    assert a.apply_vector((1, 0)) == (1, 3)


def test_known_backend():
    assert KERNEL_BACKEND in ("python", "c")


# ----------------------------------------------------------------------
# smith forms
# ----------------------------------------------------------------------


def test_snf_frozen_example():
    dec = smith_normal_form(IntMatrix([[2, 4], [6, 8]]))
    assert dec.divisors == (2, 4)
    dec.check()


def test_snf_identity_and_zero():
    assert smith_normal_form(IntMatrix.identity(3)).divisors == (1, 1, 1)
    assert smith_normal_form(IntMatrix.zeros(2, 3)).divisors == ()


def test_snf_shapes_preserved():
    m = IntMatrix([[0, 3, 0], [4, 0, 0]])
    dec = smith_normal_form(m)
    assert (dec.d.rows, dec.d.cols) == (2, 3)
    assert dec.u.is_square and dec.u.rows == 2
    assert dec.v.is_square and dec.v.rows == 3
    assert dec.divisors == (1, 12)
    dec.check()


def test_snf_property_sweep():
    rng = random.Random(SEED)
    for _ in range(300):
        rows = rng.randint(1, 5)
        cols = rng.randint(1, 5)
        m = random_matrix(rng, rows, cols, 30)
        dec = smith_normal_form(m)
        dec.check()
        divs = dec.divisors
        assert all(d > 0 for d in divs)
        for a, b in zip(divs, divs[1:]):
            assert b % a == 0
        # off-diagonal of d is zero and the diagonal is exactly divs
        for i in range(rows):
            for j in range(cols):
                if i != j:
                    assert dec.d[i, j] == 0
        assert tuple(x for x in dec.diagonal if x) == divs


def test_snf_matches_minor_gcd_oracle():
    rng = random.Random(SEED + 1)
    for _ in range(200):
        rows = rng.randint(1, 4)
        cols = rng.randint(1, 4)
        m = random_matrix(rng, rows, cols, 12)
        assert list(smith_normal_form(m).divisors) == gcd_minor_divisors(m)


def test_snf_invariant_under_unimodular_change():
    rng = random.Random(SEED + 2)
    for _ in range(60):
        n = rng.randint(1, 4)
        m = random_matrix(rng, n, n, 9)
        p = random_unimodular(rng, n)
        q = random_unimodular(rng, n)
        assert smith_normal_form(p * m * q).divisors == smith_normal_form(m).divisors


# ----------------------------------------------------------------------
# abelian groups and cokernels
# ----------------------------------------------------------------------


def test_divisor_chain_normalization():
    assert divisor_chain([6, 4]) == (2, 12)
    assert divisor_chain([1, 1, 5]) == (5,)
    assert divisor_chain([]) == ()
    with pytest.raises(DomainError):
        divisor_chain([0])


def test_abelian_group_api():
    g = AbelianGroup.from_invariants(2, (2, 4))
    assert str(g) == "Z^2 + Z/2 + Z/4"
    assert not g.is_finite
    assert g.torsion_cardinality() == 8
    assert g.torsion_subgroup() == AbelianGroup.from_invariants(0, (2, 4))
    assert str(AbelianGroup.from_invariants(0, ())) == "0"
    assert AbelianGroup.from_invariants(0, (4, 6)) == AbelianGroup(0, (2, 12))
    with pytest.raises(DomainError):
        AbelianGroup.from_invariants(1, ()).cardinality()
    with pytest.raises(DomainError):
        AbelianGroup(0, (4, 2))
    with pytest.raises(DomainError):
        AbelianGroup.from_invariants(-1, ())


def test_cokernel_examples():
    assert cokernel(IntMatrix([[2, 0], [0, 3]])) == AbelianGroup.from_invariants(0, (6,))
    assert cokernel(IntMatrix.zeros(2, 2)) == AbelianGroup.from_invariants(2, ())
    assert cokernel(IntMatrix.identity(4)).is_trivial
    assert cokernel(IntMatrix([[2, 1], [0, 2]])) == AbelianGroup.from_invariants(0, (4,))


def test_kernel_basis():
    m = IntMatrix([[1, 1]])
    basis = kernel_basis(m)
    assert basis.cols == 1
    assert m.apply_vector(basis.column(0)) == (0,)
    rng = random.Random(SEED + 3)
    for _ in range(100):
        rows = rng.randint(1, 4)
        cols = rng.randint(1, 5)
        mm = random_matrix(rng, rows, cols, 8)
        dec = smith_normal_form(mm)
        basis = kernel_basis(mm)
        assert basis.cols == cols - dec.rank
        for j in range(basis.cols):
            assert mm.apply_vector(basis.column(j)) == (0,) * rows


# ----------------------------------------------------------------------
# modular ranks and fixed-point counts
# ----------------------------------------------------------------------


def test_rank_mod():
    m = IntMatrix([[2, 0], [0, 3]])
    assert rank_mod(m, 2) == 1
    assert rank_mod(m, 3) == 1
    assert rank_mod(m, 5) == 2
    with pytest.raises(DomainError):
        rank_mod(m, 4)
    with pytest.raises(DomainError):
        rank_mod(m, 1)


def test_fixed_card_mod():
    swap = IntMatrix([[0, 1], [1, 0]])
    diff = swap - IntMatrix.identity(2)
    assert fixed_card_mod(diff, 2) == 2
    assert fixed_card_mod(IntMatrix.zeros(2, 2), 5) == 25
    assert fixed_card_mod(IntMatrix([[2]]), 4) == 2
    assert fixed_card_mod(IntMatrix([[6]]), 4) == 2
    with pytest.raises(DomainError):
        fixed_card_mod(diff, 1)


def test_fixed_card_matches_enumeration():
    rng = random.Random(SEED + 4)
    for _ in range(80):
        n = rng.randint(1, 3)
        modulus = rng.choice((2, 3, 4, 6))
        m = random_matrix(rng, n, n, 5)
        count = 0
        for code in range(modulus**n):
            vec = []
            c = code
            for _ in range(n):
                vec.append(c % modulus)
                c //= modulus
            if all(x % modulus == 0 for x in m.apply_vector(vec)):
                count += 1
        assert fixed_card_mod(m, modulus) == count


# ----------------------------------------------------------------------
# solving and inverting
# ----------------------------------------------------------------------


def test_solve_columns_roundtrip():
    rng = random.Random(SEED + 5)
    for _ in range(80):
        rows = rng.randint(1, 4)
        cols = rng.randint(1, 4)
        a = random_matrix(rng, rows, cols, 6)
        x = random_matrix(rng, cols, 2, 6)
        b = a * x
        sol = solve_columns(a, b)
        assert a * sol == b


def test_solve_columns_rejects_unsolvable():
    a = IntMatrix([[2]])
    with pytest.raises(DomainError):
        solve_columns(a, IntMatrix([[1]]))
    a = IntMatrix([[1], [0]])
    with pytest.raises(DomainError):
        solve_columns(a, IntMatrix([[0], [1]]))


def test_inverse_unimodular():
    rng = random.Random(SEED + 6)
    for _ in range(60):
        n = rng.randint(1, 5)
        w = random_unimodular(rng, n)
        assert (w * inverse_unimodular(w)).is_identity()
    with pytest.raises(DomainError):
        inverse_unimodular(IntMatrix([[2]]))
