"""Catalog group homology against hand-written presentation matrices
and the classically known values, plus the splitting machinery."""

import random
from fractions import Fraction

import pytest

from conftest import SEED, random_finite_order_matrix
from cflat.bieberbach import (
    AffineMap,
    BieberbachGroupSpec,
    CATALOG_NAMES,
    abelianization,
    catalog,
    catalog_group,
    cyclic_splitting,
    holonomy_group,
    is_holonomy_cyclic,
    mapping_torus,
    tors_h1_two_ways,
    translation_map,
)
from cflat.errors import DomainError
from cflat.glattice import coinvariants, h1_oracle, make_glattice
from cflat.zlinalg import AbelianGroup, IntMatrix, cokernel

# name -> (first homology, holonomy order, holonomy cyclic)
KNOWN = {
    "S1": (AbelianGroup(1, ()), 1, True),
    "T2": (AbelianGroup(2, ()), 1, True),
    "T3": (AbelianGroup(3, ()), 1, True),
    "K": (AbelianGroup(1, (2,)), 2, True),
    "G1": (AbelianGroup(3, ()), 1, True),
    "G2": (AbelianGroup(1, (2, 2)), 2, True),
    "G3": (AbelianGroup(1, (3,)), 3, True),
    "G4": (AbelianGroup(1, (2,)), 4, True),
    "G5": (AbelianGroup(1, ()), 6, True),
    "G6": (AbelianGroup(0, (4, 4)), 4, False),
    "B1": (AbelianGroup(2, (2,)), 2, True),
    "B2": (AbelianGroup(2, ()), 2, True),
    "B3": (AbelianGroup(1, (2, 2)), 4, False),
    "B4": (AbelianGroup(1, (4,)), 4, False),
}


def test_catalog_is_complete():
    assert CATALOG_NAMES == tuple(KNOWN)
    assert set(catalog()) == set(KNOWN)
    with pytest.raises(DomainError):
        catalog_group("X99")


def test_catalog_homology_and_holonomy():
    for name, (h1, order, cyclic) in KNOWN.items():
        spec = catalog_group(name)
        assert abelianization(spec).group == h1, name
        assert len(holonomy_group(spec)) == order, name
        assert is_holonomy_cyclic(spec) is cyclic, name


def test_homology_against_hand_presentations():
    """Relation matrices written out by hand from the generators'
    actions and the lifted squares/commutator, one per flavor:
    one screw generator (K, G2) and two (G6, B4)."""
    hand = {
        "K": [[-2, 0, 0], [0, 0, -1], [0, 0, 2]],
        "G2": [[0, 0, 0, -1], [0, -2, 0, 0], [0, 0, -2, 0], [0, 0, 0, 2]],
        "G6": [
            [0, 0, -2, 0, -1, 0, -1],
            [-2, 0, 0, 0, 0, -1, 1],
            [0, -2, 0, -2, 0, 0, 1],
            [0, 0, 0, 0, 2, 0, 0],
            [0, 0, 0, 0, 0, 2, 0],
        ],
        "B4": [
            [0, 0, 0, -1, 0, 0],
            [-2, 0, 0, 0, -1, 1],
            [0, -2, -2, 0, 0, 1],
            [0, 0, 0, 2, 0, 0],
            [0, 0, 0, 0, 2, 0],
        ],
    }
    for name, rows in hand.items():
        assert cokernel(IntMatrix(rows)) == abelianization(catalog_group(name)).group


def test_projection_kills_relations():
    for name in CATALOG_NAMES:
        ab = abelianization(catalog_group(name))
        rel = ab.relation_matrix
        for j in range(rel.cols):
            img = ab.project(rel.column(j))
            assert img.is_zero(), name


def test_affine_map_algebra():
    a = AffineMap(IntMatrix([[0, -1], [1, 0]]), (Fraction(1, 4), Fraction(0)))
    b = AffineMap(IntMatrix([[1, 0], [0, -1]]), (Fraction(0), Fraction(1, 2)))
    ident = translation_map(2, (0, 0))
    assert (a * a.inverse()) == ident
    assert (a.inverse() * a) == ident
    assert ((a * b) * a.inverse()) == (a * (b * a.inverse()))
    assert translation_map(2, (1, 2)).integral_translation() == (1, 2)
    with pytest.raises(DomainError):
        translation_map(2, (Fraction(1, 2), 0)).integral_translation()


def test_spec_validation():
    with pytest.raises(DomainError):
        BieberbachGroupSpec(
            "bad", 2, (AffineMap(IntMatrix([[2, 0], [0, 1]]), (Fraction(0),) * 2),)
        )
    with pytest.raises(DomainError):
        # a listed pure translation must be integral
        BieberbachGroupSpec("bad", 1, (translation_map(1, (Fraction(1, 2),)),))


def test_listed_integral_translations_are_absorbed():
    base = catalog_group("K")
    extra = translation_map(2, (3, -1))
    widened = BieberbachGroupSpec("Kplus", 2, base.gens + (extra,))
    assert abelianization(widened).group == abelianization(base).group


def test_mapping_torus_homology():
    rng = random.Random(SEED + 30)
    for _ in range(50):
        lat = make_glattice(random_finite_order_matrix(rng, max_rank=4))
        full, _ = coinvariants(lat)
        spec = mapping_torus(lat)
        assert spec.dim == lat.rank + 1
        got = abelianization(spec).group
        assert got == AbelianGroup(full.free_rank + 1, full.torsion)


def test_mapping_torus_of_reflection_is_klein():
    spec = mapping_torus(make_glattice(IntMatrix([[-1]])))
    assert abelianization(spec).group == KNOWN["K"][0]
    assert len(holonomy_group(spec)) == 2


def test_torsion_two_ways():
    rng = random.Random(SEED + 31)
    for _ in range(60):
        lat = make_glattice(random_finite_order_matrix(rng, max_rank=4))
        a, b = tors_h1_two_ways(lat)
        assert a == b
    a, b = tors_h1_two_ways(make_glattice(IntMatrix([[-1]])))
    assert a == b == AbelianGroup(0, (2,))


# name -> complement group in the character splitting
SPLIT_COMPLEMENT = {
    "S1": AbelianGroup(0, ()),
    "T2": AbelianGroup(1, ()),
    "T3": AbelianGroup(2, ()),
    "K": AbelianGroup(0, (2,)),
    "G1": AbelianGroup(2, ()),
    "G2": AbelianGroup(0, (2, 2)),
    "G3": AbelianGroup(0, (3,)),
    "G4": AbelianGroup(0, (2,)),
    "G5": AbelianGroup(0, ()),
    "B1": AbelianGroup(1, (2,)),
    "B2": AbelianGroup(1, ()),
}


def test_cyclic_splitting_postconditions():
    from math import gcd

    for name, expected_b in SPLIT_COMPLEMENT.items():
        spec = catalog_group(name)
        ab = abelianization(spec)
        split = cyclic_splitting(spec)
        assert split.holonomy_order == KNOWN[name][1]
        assert gcd(split.a_character_value, split.holonomy_order) == 1
        assert split.b_group == expected_b, name
        # the splitting reassembles to the full homology
        assert AbelianGroup.from_invariants(
            1 + split.b_group.free_rank, split.b_group.torsion
        ) == ab.group, name
        # a is an infinite-order element: nonzero free part
        assert any(split.a.free), name
        assert len(split.b_free_gens) == split.b_group.free_rank


def test_cyclic_splitting_rejects_klein_four_holonomy():
    for name in ("G6", "B3", "B4"):
        with pytest.raises(DomainError):
            cyclic_splitting(catalog_group(name))


def test_cyclic_splitting_of_mapping_tori():
    rng = random.Random(SEED + 32)
    for _ in range(40):
        lat = make_glattice(random_finite_order_matrix(rng, max_rank=3))
        spec = mapping_torus(lat)
        assert is_holonomy_cyclic(spec)
        split = cyclic_splitting(spec)
        assert split.holonomy_order == lat.order
        # complement carries the full torsion: H^1 of the fiber action
        assert split.b_group.torsion == h1_oracle(lat).torsion
