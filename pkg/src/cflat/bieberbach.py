"""Crystallographic (Bieberbach) groups at desk scale.

A group is described by affine generators (integer linear part, exact
rational translation) acting on R^dim with translation lattice Z^dim.
The module carries a named catalog -- the circle, the two compact flat
surfaces, and the ten compact flat 3-manifold groups -- and computes
holonomy closures, abelianizations (with a usable projection onto the
computed invariant-factor coordinates), mapping tori of lattice
automorphisms, and the splitting of first homology along a cyclic
holonomy character.

Presentations are mechanical: generators are the full lattice basis
plus the listed non-translation generators; relations are the
conjugation action on the lattice and the lifts of the holonomy
group's defining relators (cyclic, or the Klein four-group).  First
homology is the cokernel of the resulting relation matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import DomainError, InternalCheckError
from .glattice import GLattice, coinvariants
from .zlinalg import AbelianGroup, IntMatrix, smith_normal_form
from .zlinalg.snf import SNFDecomposition, inverse_unimodular

_HOLONOMY_BOUND = 1000


# ======================================================================
# affine maps and group specs
# ======================================================================


@dataclass(frozen=True)
class AffineMap:
    """x |-> linear @ x + translation, with exact rational translation."""

    linear: IntMatrix
    translation: tuple[Fraction, ...]

    def __post_init__(self):
        if not self.linear.is_square:
            raise DomainError("affine generator needs a square linear part")
        if len(self.translation) != self.linear.rows:
            raise DomainError("translation length does not match the dimension")
        object.__setattr__(
            self, "translation", tuple(Fraction(t) for t in self.translation)
        )

    @property
    def dim(self) -> int:
        return self.linear.rows

    def __mul__(self, other: "AffineMap") -> "AffineMap":
        if self.dim != other.dim:
            raise DomainError("dimension mismatch in affine composition")
        lin = self.linear * other.linear
        moved = _apply_linear(self.linear, other.translation)
        tr = tuple(a + b for a, b in zip(self.translation, moved))
        return AffineMap(lin, tr)

    def inverse(self) -> "AffineMap":
        inv = inverse_unimodular(self.linear)
        tr = tuple(-t for t in _apply_linear(inv, self.translation))
        return AffineMap(inv, tr)

    def is_translation(self) -> bool:
        return self.linear.is_identity()

    def integral_translation(self) -> tuple[int, ...]:
        """The translation vector, required to be integral."""
        out = []
        for t in self.translation:
            if t.denominator != 1:
                raise DomainError(f"translation {t} is not integral")
            out.append(t.numerator)
        return tuple(out)


def _apply_linear(m: IntMatrix, vec: Sequence[Fraction]) -> tuple[Fraction, ...]:
    return tuple(
        sum((Fraction(m[i, j]) * vec[j] for j in range(m.cols)), Fraction(0))
        for i in range(m.rows)
    )


def translation_map(dim: int, vec: Sequence[Fraction | int]) -> AffineMap:
    return AffineMap(IntMatrix.identity(dim), tuple(Fraction(v) for v in vec))


@dataclass(frozen=True)
class BieberbachGroupSpec:
    """A named crystallographic group with translation lattice Z^dim.

    The listed generators together with the lattice basis generate the
    group; torsion-freeness (and the lattice being exactly Z^dim) is
    catalog data the algorithms trust rather than verify.
    """

    name: str
    dim: int
    gens: tuple[AffineMap, ...]

    def __post_init__(self):
        for g in self.gens:
            if g.dim != self.dim:
                raise DomainError(f"generator dimension {g.dim} != {self.dim}")
            if abs(g.linear.det()) != 1:
                raise DomainError("generator linear part is not unimodular")
            if g.is_translation():
                g.integral_translation()  # raises if fractional

    def screw_gens(self) -> tuple[AffineMap, ...]:
        """The listed generators with nontrivial linear part."""
        return tuple(g for g in self.gens if not g.is_translation())


# ======================================================================
# holonomy
# ======================================================================


def holonomy_group(spec: BieberbachGroupSpec) -> tuple[IntMatrix, ...]:
    """Closure of the generators' linear parts, identity first.

    Breadth-first over the generating set, so the order is
    reproducible.  Bails out past 1000 elements.
    """
    gens = [g.linear for g in spec.gens if not g.linear.is_identity()]
    ident = IntMatrix.identity(spec.dim)
    seen = {ident}
    order_found = [ident]
    frontier = [ident]
    while frontier:
        nxt = []
        for m in frontier:
            for g in gens:
                prod = m * g
                if prod not in seen:
                    seen.add(prod)
                    order_found.append(prod)
                    nxt.append(prod)
                    if len(seen) > _HOLONOMY_BOUND:
                        raise DomainError(
                            f"holonomy closure exceeded bound {_HOLONOMY_BOUND}"
                        )
        frontier = nxt
    return tuple(order_found)


def _matrix_order(m: IntMatrix, bound: int = _HOLONOMY_BOUND) -> int:
    ident = IntMatrix.identity(m.rows)
    power = m
    k = 1
    while power != ident:
        power = power * m
        k += 1
        if k > bound:
            raise DomainError(f"element order exceeds bound {bound}")
    return k


def is_holonomy_cyclic(spec: BieberbachGroupSpec) -> bool:
    hol = holonomy_group(spec)
    return any(_matrix_order(m) == len(hol) for m in hol)


# ======================================================================
# abelianization
# ======================================================================


@dataclass(frozen=True)
class H1Element:
    """An element of a computed first homology group, in invariant
    coordinates: free part over Z, torsion part reduced mod the chain."""

    free: tuple[int, ...]
    torsion: tuple[int, ...]

    def is_zero(self) -> bool:
        return not any(self.free) and not any(self.torsion)


@dataclass(frozen=True)
class AbelianizationData:
    """First homology of a group spec plus the projection machinery.

    ``group`` is Z^b + torsion chain.  Presentation coordinates are
    Z^(dim + s) where s counts the listed non-translation generators;
    ``project`` maps a presentation vector to invariant coordinates and
    kills exactly the relation lattice.
    """

    spec: BieberbachGroupSpec
    group: AbelianGroup
    relation_matrix: IntMatrix
    dec: SNFDecomposition
    u_inv: IntMatrix
    free_positions: tuple[int, ...]
    torsion_positions: tuple[int, ...]
    gen_words: tuple[tuple[int, ...], ...]  # listed generator -> presentation vector

    @property
    def n_presentation_gens(self) -> int:
        return self.relation_matrix.rows

    def project(self, vec: Sequence[int]) -> H1Element:
        """Class of a presentation-coordinate vector in H_1."""
        if len(vec) != self.n_presentation_gens:
            raise DomainError(
                f"expected length {self.n_presentation_gens}, got {len(vec)}"
            )
        w = self.dec.u.apply_vector(vec)
        free = tuple(w[i] for i in self.free_positions)
        moduli = self.group.torsion
        tors = tuple(w[i] % d for i, d in zip(self.torsion_positions, moduli))
        return H1Element(free=free, torsion=tors)

    def gen_image(self, idx: int) -> H1Element:
        """Class of the idx-th listed generator."""
        return self.project(self.gen_words[idx])

    def functional_on_basis(
        self, gen_values: Sequence[int], modulus: int
    ) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """Convert a Z/modulus functional given on presentation
        generators into values on (free basis, torsion basis).

        The functional must kill the relation lattice mod ``modulus``;
        a violation means it is not well defined on homology.
        """
        if len(gen_values) != self.n_presentation_gens:
            raise DomainError("functional length mismatch")
        rel = self.relation_matrix
        for j in range(rel.cols):
            tot = sum(gen_values[i] * rel[i, j] for i in range(rel.rows))
            if tot % modulus:
                raise InternalCheckError(
                    "functional does not vanish on the relation lattice"
                )
        # value on the i-th invariant basis vector = row . u_inv e_i
        row = [
            sum(gen_values[i] * self.u_inv[i, j] for i in range(self.u_inv.rows))
            % modulus
            for j in range(self.u_inv.cols)
        ]
        free = tuple(row[i] for i in self.free_positions)
        tors = tuple(row[i] for i in self.torsion_positions)
        return free, tors


def _holonomy_relators(spec: BieberbachGroupSpec) -> list[tuple[list[int], AffineMap]]:
    """Defining relators of the holonomy group, lifted to affine words.

    Returns (exponent vector over the screw generators, evaluated affine
    word).  Supports the shapes the catalog needs: no screw generators,
    one (cyclic holonomy), or two commuting involutions (Klein
    four-group holonomy).
    """
    screws = spec.screw_gens()
    s = len(screws)
    if s == 0:
        return []
    if s == 1:
        alpha = screws[0]
        k = _matrix_order(alpha.linear)
        word = alpha
        for _ in range(k - 1):
            word = word * alpha
        return [([k], word)]
    if s == 2:
        a, b = screws
        la, lb = a.linear, b.linear
        if (
            _matrix_order(la) == 2
            and _matrix_order(lb) == 2
            and la * lb == lb * la
            and la != lb
            and len(holonomy_group(spec)) == 4
        ):
            comm = a * b * a.inverse() * b.inverse()
            return [([2, 0], a * a), ([0, 2], b * b), ([0, 0], comm)]
        raise DomainError(
            "unsupported holonomy: two screw generators that are not "
            "commuting involutions"
        )
    raise DomainError(f"unsupported holonomy: {s} screw generators")


def abelianization(spec: BieberbachGroupSpec) -> AbelianizationData:
    """First homology of the group, with projection witnesses.

    Relation columns: the conjugation action of each screw generator on
    the lattice basis, and each lifted holonomy relator expressed as
    (minus its lattice value, its exponent vector).
    """
    n = spec.dim
    screws = spec.screw_gens()
    s = len(screws)
    total = n + s
    columns: list[list[int]] = []
    ident = IntMatrix.identity(n)
    for g in screws:
        conj = g.linear - ident
        for i in range(n):
            col = [conj[row, i] for row in range(n)] + [0] * s
            columns.append(col)
    for exps, word in _holonomy_relators(spec):
        if not word.is_translation():
            raise InternalCheckError("holonomy relator lift is not a translation")
        w = word.integral_translation()
        col = [-e for e in w] + list(exps)
        columns.append(col)
    rel = IntMatrix.from_columns(columns, rows=total)
    dec = smith_normal_form(rel)
    diag = dec.diagonal
    full = list(diag) + [0] * (total - len(diag))
    free_pos = tuple(i for i, d in enumerate(full) if d == 0)
    tors_pos = tuple(i for i, d in enumerate(full) if d >= 2)
    group = AbelianGroup(len(free_pos), tuple(full[i] for i in tors_pos))
    gen_words = []
    screw_index = 0
    for g in spec.gens:
        if g.is_translation():
            vec = list(g.integral_translation()) + [0] * s
        else:
            vec = [0] * total
            vec[n + screw_index] = 1
            screw_index += 1
        gen_words.append(tuple(vec))
    return AbelianizationData(
        spec=spec,
        group=group,
        relation_matrix=rel,
        dec=dec,
        u_inv=inverse_unimodular(dec.u),
        free_positions=free_pos,
        torsion_positions=tors_pos,
        gen_words=tuple(gen_words),
    )


# ======================================================================
# mapping torus
# ======================================================================


def mapping_torus(lat: GLattice) -> BieberbachGroupSpec:
    """The flat (n+1)-manifold group of a finite-order automorphism.

    New coordinate last: the extra generator acts by the automorphism
    on the old block and translates the new coordinate by 1/order, so
    its order-th power is the new lattice vector.
    """
    n = lat.rank
    k = lat.order
    dim = n + 1
    gens = [translation_map(dim, [1 if j == i else 0 for j in range(dim)]) for i in range(n)]
    block = [
        [lat.g0[i, j] if i < n and j < n else (1 if i == j else 0) for j in range(dim)]
        for i in range(dim)
    ]
    screw = AffineMap(
        IntMatrix(block),
        tuple(Fraction(0) if i < n else Fraction(1, k) for i in range(dim)),
    )
    return BieberbachGroupSpec(
        name=f"MT{dim}k{k}", dim=dim, gens=tuple(gens) + (screw,)
    )


def tors_h1_two_ways(lat: GLattice) -> tuple[AbelianGroup, AbelianGroup]:
    """Torsion of H_1 of the mapping torus, two independent routes.

    Route one abelianizes the mapping-torus group; route two takes the
    torsion of the coinvariant lattice of the automorphism.  Both are
    returned so the agreement stays an observable fact rather than an
    assumption.
    """
    ab = abelianization(mapping_torus(lat))
    _, tors_coinv = coinvariants(lat)
    return ab.group.torsion_subgroup(), tors_coinv


# ======================================================================
# splitting along a cyclic holonomy character
# ======================================================================


@dataclass(frozen=True)
class CyclicSplitting:
    """H_1 = <a> (+) B with the holonomy character faithful on <a>.

    ``a`` has infinite order, the character maps it onto the full
    (cyclic) holonomy group, and B -- spanned by ``b_free_gens`` and all
    torsion -- lies in the character's kernel, so it contains the whole
    torsion subgroup.
    """

    a: H1Element
    a_character_value: int  # in Z/holonomy_order, coprime to it
    b_free_gens: tuple[H1Element, ...]
    b_group: AbelianGroup
    holonomy_order: int


def cyclic_splitting(spec: BieberbachGroupSpec) -> CyclicSplitting:
    """Split H_1 along the holonomy character.

    Only defined for cyclic holonomy; the Klein four-group holonomy
    entries are rejected.  The free part is changed to a basis whose
    first vector carries the whole character image (an extended-gcd
    column operation packaged as a Smith step on the character row);
    everything else, torsion included, lands in the kernel.
    """
    hol = holonomy_group(spec)
    k = len(hol)
    gen0 = None
    for m in hol:
        if _matrix_order(m) == k:
            gen0 = m
            break
    if gen0 is None:
        raise DomainError(f"holonomy of {spec.name} is not cyclic (order {k})")
    powers = {}
    power = IntMatrix.identity(spec.dim)
    for e in range(k):
        powers[power] = e
        power = power * gen0
    ab = abelianization(spec)
    n = spec.dim
    screws = spec.screw_gens()
    gen_values = [0] * n + [powers[g.linear] for g in screws]
    free_vals, tors_vals = ab.functional_on_basis(gen_values, k)
    if any(v % k for v in tors_vals):
        raise InternalCheckError(
            "holonomy character does not kill the torsion subgroup"
        )
    b = ab.group.free_rank
    if b == 0:
        raise InternalCheckError("cyclic holonomy with no free homology")
    row = IntMatrix([list(free_vals)])
    dec = smith_normal_form(row)
    d = dec.d[0, 0]
    sign = dec.u[0, 0]
    from math import gcd

    if gcd(sign * d, k) != 1:
        raise InternalCheckError(
            "holonomy character is not surjective on free homology"
        )
    # columns of dec.v are the new free basis; first carries the image
    moduli = ab.group.torsion
    zero_tors = tuple(0 for _ in moduli)
    new_basis = [
        H1Element(free=dec.v.column(j), torsion=zero_tors) for j in range(b)
    ]
    a_elt = new_basis[0]
    b_free = tuple(new_basis[1:])
    b_group = AbelianGroup(b - 1, moduli)
    return CyclicSplitting(
        a=a_elt,
        a_character_value=(sign * d) % k,
        b_free_gens=b_free,
        b_group=b_group,
        holonomy_order=k,
    )


# ======================================================================
# the catalog
# ======================================================================


def _diag(*entries: int) -> IntMatrix:
    n = len(entries)
    return IntMatrix([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)])


def _screw(linear: IntMatrix, *tr) -> AffineMap:
    return AffineMap(linear, tuple(Fraction(t) for t in tr))


def _torus(name: str, dim: int) -> BieberbachGroupSpec:
    gens = tuple(
        translation_map(dim, [1 if j == i else 0 for j in range(dim)])
        for i in range(dim)
    )
    return BieberbachGroupSpec(name=name, dim=dim, gens=gens)


def _rot3() -> IntMatrix:
    return IntMatrix([[0, -1], [1, -1]])


def _rot4() -> IntMatrix:
    return IntMatrix([[0, -1], [1, 0]])


def _rot6() -> IntMatrix:
    return IntMatrix([[0, -1], [1, 1]])


def _axis_block(rot: IntMatrix) -> IntMatrix:
    """1 (+) rot acting on coordinates (y, z); screw axis is x."""
    return IntMatrix(
        [
            [1, 0, 0],
            [0, rot[0, 0], rot[0, 1]],
            [0, rot[1, 0], rot[1, 1]],
        ]
    )


def _build_catalog() -> dict[str, BieberbachGroupSpec]:
    t3 = [translation_map(3, v) for v in ([1, 0, 0], [0, 1, 0], [0, 0, 1])]
    cat: dict[str, BieberbachGroupSpec] = {}
    cat["S1"] = _torus("S1", 1)
    cat["T2"] = _torus("T2", 2)
    cat["T3"] = _torus("T3", 3)
    # flat Klein bottle: one translation and one glide
    cat["K"] = BieberbachGroupSpec(
        name="K",
        dim=2,
        gens=(
            translation_map(2, [1, 0]),
            _screw(_diag(-1, 1), 0, Fraction(1, 2)),
        ),
    )
    # orientable 3-dimensional groups: screw motions along the x-axis
    cat["G1"] = _torus("G1", 3)
    cat["G2"] = BieberbachGroupSpec(
        name="G2",
        dim=3,
        gens=(*t3, _screw(_diag(1, -1, -1), Fraction(1, 2), 0, 0)),
    )
    cat["G3"] = BieberbachGroupSpec(
        name="G3",
        dim=3,
        gens=(*t3, _screw(_axis_block(_rot3()), Fraction(1, 3), 0, 0)),
    )
    cat["G4"] = BieberbachGroupSpec(
        name="G4",
        dim=3,
        gens=(*t3, _screw(_axis_block(_rot4()), Fraction(1, 4), 0, 0)),
    )
    cat["G5"] = BieberbachGroupSpec(
        name="G5",
        dim=3,
        gens=(*t3, _screw(_axis_block(_rot6()), Fraction(1, 6), 0, 0)),
    )
    # Klein four-group holonomy: two half-turn screws on skew axes
    cat["G6"] = BieberbachGroupSpec(
        name="G6",
        dim=3,
        gens=(
            *t3,
            _screw(_diag(1, -1, -1), Fraction(1, 2), Fraction(1, 2), 0),
            _screw(_diag(-1, 1, -1), 0, Fraction(1, 2), Fraction(1, 2)),
        ),
    )
    # nonorientable 3-dimensional groups
    cat["B1"] = BieberbachGroupSpec(
        name="B1",
        dim=3,
        gens=(*t3, _screw(_diag(-1, 1, 1), 0, Fraction(1, 2), 0)),
    )
    swap_xy = IntMatrix([[0, 1, 0], [1, 0, 0], [0, 0, 1]])
    cat["B2"] = BieberbachGroupSpec(
        name="B2",
        dim=3,
        gens=(*t3, _screw(swap_xy, 0, 0, Fraction(1, 2))),
    )
    cat["B3"] = BieberbachGroupSpec(
        name="B3",
        dim=3,
        gens=(
            *t3,
            _screw(_diag(1, -1, -1), Fraction(1, 2), 0, 0),
            _screw(_diag(1, 1, -1), 0, Fraction(1, 2), 0),
        ),
    )
    cat["B4"] = BieberbachGroupSpec(
        name="B4",
        dim=3,
        gens=(
            *t3,
            _screw(_diag(1, -1, -1), Fraction(1, 2), 0, 0),
            _screw(_diag(1, 1, -1), 0, Fraction(1, 2), Fraction(1, 2)),
        ),
    )
    return cat


_CATALOG = _build_catalog()

CATALOG_NAMES: tuple[str, ...] = (
    "S1",
    "T2",
    "T3",
    "K",
    "G1",
    "G2",
    "G3",
    "G4",
    "G5",
    "G6",
    "B1",
    "B2",
    "B3",
    "B4",
)


def catalog() -> Mapping[str, BieberbachGroupSpec]:
    """The built-in groups: circle, flat surfaces, flat 3-manifolds."""
    return dict(_CATALOG)


def catalog_group(name: str) -> BieberbachGroupSpec:
    try:
        return _CATALOG[name]
    except KeyError:
        raise DomainError(
            f"unknown group {name!r}; known: {', '.join(CATALOG_NAMES)}"
        ) from None
