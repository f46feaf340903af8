"""Flat vector bundles over the catalog manifolds as sums of line reps.

A flat real or complex line bundle over a compact flat manifold is a
character of the fundamental group into {±1} or U(1); both factor
through first homology, so a line bundle is stored as its list of
rational angles (turns in [0,1)) on the computed free and torsion
generators of H_1.  Real characters take values in {0, 1/2}.

From these the module computes first and second Stiefel-Whitney data,
first Chern classes of complex line bundles (valued in Hom of the
torsion subgroup into Z/holonomy-order), orientation characters,
structure statements for bundles with cyclic total holonomy, and the
mod-2 cup tables of the one- and two-dimensional bases.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .bieberbach import (
    AbelianizationData,
    BieberbachGroupSpec,
    H1Element,
    abelianization,
    catalog_group,
    holonomy_group,
)
from .errors import DomainError, InternalCheckError
from .zlinalg import IntMatrix

Mod2Class = tuple[int, ...]


# ======================================================================
# base manifolds
# ======================================================================


@dataclass(frozen=True)
class BaseData:
    """A catalog base with its homology and mod-2 cohomology layout.

    ``mod2_sources`` lists, in display order, where each bit of a
    degree-one mod-2 class lives: ("free", i) for the i-th free
    generator, ("tors", j) for the j-th torsion generator (only
    even-order torsion carries a bit).
    """

    spec: BieberbachGroupSpec
    ab: AbelianizationData
    holonomy: tuple[IntMatrix, ...]
    mod2_labels: tuple[str, ...]
    mod2_sources: tuple[tuple[str, int], ...]


_FREE_LABELS = ("x", "y", "z", "w")


@lru_cache(maxsize=None)
def base_data(name: str) -> BaseData:
    spec = catalog_group(name)
    ab = abelianization(spec)
    hol = holonomy_group(spec)
    if name == "K":
        # the conventional surface basis: alpha dual to the torsion
        # generator, beta dual to the free generator
        labels = ("alpha", "beta")
        sources = (("tors", 0), ("free", 0))
    else:
        labels_list = []
        sources_list = []
        for i in range(ab.group.free_rank):
            labels_list.append(_FREE_LABELS[i] if i < 4 else f"x{i}")
            sources_list.append(("free", i))
        for j, d in enumerate(ab.group.torsion):
            if d % 2 == 0:
                labels_list.append(f"s{j + 1}")
                sources_list.append(("tors", j))
        labels = tuple(labels_list)
        sources = tuple(sources_list)
    return BaseData(
        spec=spec, ab=ab, holonomy=hol, mod2_labels=labels, mod2_sources=sources
    )


def mod2_zero(base: str) -> Mod2Class:
    return tuple(0 for _ in base_data(base).mod2_sources)


def mod2_add(a: Mod2Class, b: Mod2Class) -> Mod2Class:
    if len(a) != len(b):
        raise DomainError("mod-2 class length mismatch")
    return tuple((x + y) % 2 for x, y in zip(a, b))


def mod2_str(base: str, bits: Mod2Class) -> str:
    labels = base_data(base).mod2_labels
    terms = [lab for lab, bit in zip(labels, bits) if bit]
    return "+".join(terms) if terms else "0"


# ======================================================================
# line representations and bundles
# ======================================================================


@dataclass(frozen=True)
class LineRep:
    """A character of H_1 of the base: one angle (turn in [0,1)) per
    free generator and per torsion generator.  kind is "real" (angles
    in {0, 1/2}) or "complex"."""

    kind: str
    free: tuple[Fraction, ...]
    torsion: tuple[Fraction, ...] = ()

    def __post_init__(self):
        if self.kind not in ("real", "complex"):
            raise DomainError(f"unknown line kind {self.kind!r}")
        object.__setattr__(self, "free", tuple(Fraction(v) for v in self.free))
        object.__setattr__(self, "torsion", tuple(Fraction(v) for v in self.torsion))
        for v in (*self.free, *self.torsion):
            if not 0 <= v < 1:
                raise DomainError(f"angle {v} outside [0, 1)")
            if self.kind == "real" and v not in (Fraction(0), Fraction(1, 2)):
                raise DomainError(f"real character angle must be 0 or 1/2, got {v}")

    @property
    def rank(self) -> int:
        return 1 if self.kind == "real" else 2

    def is_trivial(self) -> bool:
        return not any(self.free) and not any(self.torsion)

    def conjugate(self) -> "LineRep":
        return LineRep(
            self.kind,
            tuple((-v) % 1 for v in self.free),
            tuple((-v) % 1 for v in self.torsion),
        )


def validate_line(base: str, rep: LineRep) -> None:
    """Check the character is a well-defined one on H_1 of the base."""
    data = base_data(base)
    g = data.ab.group
    if len(rep.free) != g.free_rank:
        raise DomainError(
            f"{base} has {g.free_rank} free generators, got {len(rep.free)} angles"
        )
    if len(rep.torsion) != len(g.torsion):
        raise DomainError(
            f"{base} has {len(g.torsion)} torsion generators, got {len(rep.torsion)} angles"
        )
    for angle, d in zip(rep.torsion, g.torsion):
        if (angle * d).denominator != 1:
            raise DomainError(
                f"angle {angle} is not defined on a torsion generator of order {d}"
            )


@dataclass(frozen=True)
class FlatBundleSpec:
    """A sum of flat line bundles over one catalog base."""

    base: str
    summands: tuple[LineRep, ...]

    def __post_init__(self):
        for rep in self.summands:
            validate_line(self.base, rep)

    @property
    def rank(self) -> int:
        return sum(rep.rank for rep in self.summands)

    @property
    def total_dim(self) -> int:
        return base_data(self.base).spec.dim + self.rank


def line_with_w1(base: str, bits: Mod2Class, kind: str = "real") -> LineRep:
    """The real character whose degree-one class has the given bits."""
    data = base_data(base)
    if len(bits) != len(data.mod2_sources):
        raise DomainError("bit-vector length mismatch")
    g = data.ab.group
    free = [Fraction(0)] * g.free_rank
    tors = [Fraction(0)] * len(g.torsion)
    for bit, (where, idx) in zip(bits, data.mod2_sources):
        if bit:
            if where == "free":
                free[idx] = Fraction(1, 2)
            else:
                tors[idx] = Fraction(1, 2)
    return LineRep(kind, tuple(free), tuple(tors))


def evaluate_on_generator(base: str, rep: LineRep, gen_index: int) -> Fraction:
    """The character's angle on a listed group generator (mod 1)."""
    data = base_data(base)
    el = data.ab.gen_image(gen_index)
    return _evaluate(rep, el)


def _evaluate(rep: LineRep, el: H1Element) -> Fraction:
    total = Fraction(0)
    for angle, c in zip(rep.free, el.free):
        total += angle * c
    for angle, c in zip(rep.torsion, el.torsion):
        total += angle * c
    return total % 1


# ======================================================================
# characteristic classes of line bundles
# ======================================================================


def w1_of_line(base: str, rep: LineRep) -> Mod2Class:
    """First Stiefel-Whitney class of a real character, as bits in the
    base's degree-one mod-2 basis."""
    if rep.kind != "real":
        raise DomainError("w1_of_line takes a real character")
    validate_line(base, rep)
    data = base_data(base)
    bits = []
    for where, idx in data.mod2_sources:
        v = rep.free[idx] if where == "free" else rep.torsion[idx]
        bits.append(1 if v == Fraction(1, 2) else 0)
    return tuple(bits)


@dataclass(frozen=True)
class C1Class:
    """First Chern class of a flat complex line bundle: an element of
    Hom(torsion of H_1, Z/modulus) where modulus is the base's holonomy
    order."""

    values: tuple[int, ...]
    modulus: int

    @property
    def is_trivial(self) -> bool:
        return not any(self.values)

    def mod2_bit(self) -> int:
        """Reduction of the class mod 2 (sum of components)."""
        return sum(self.values) % 2


def c1_of_line(base: str, rep: LineRep) -> C1Class:
    """First Chern class of a complex character.

    The character restricted to the torsion subgroup must take values
    in the holonomy-order roots of unity; a flat complex line bundle
    over the base always does, so a violation is rejected as input
    error.  The class is trivial exactly when the bundle is trivial,
    and torsion-free H_1 forces triviality.
    """
    if rep.kind != "complex":
        raise DomainError("c1_of_line takes a complex character")
    validate_line(base, rep)
    data = base_data(base)
    k = len(data.holonomy)
    values = []
    for angle, d in zip(rep.torsion, data.ab.group.torsion):
        scaled = angle * k
        if scaled.denominator != 1:
            order = d // gcd(angle.numerator, d)
            raise DomainError(
                f"character of order {order} on torsion does not divide "
                f"the holonomy order {k}"
            )
        values.append(scaled.numerator % k)
    return C1Class(values=tuple(values), modulus=k)


def orientation_character(bundle: FlatBundleSpec) -> Mod2Class:
    """w1 of the bundle: sum of the real summands' first classes."""
    bits = mod2_zero(bundle.base)
    for rep in bundle.summands:
        if rep.kind == "real":
            bits = mod2_add(bits, w1_of_line(bundle.base, rep))
    return bits


def det_line(bundle: FlatBundleSpec) -> LineRep:
    """The determinant character of the bundle (a real line rep)."""
    data = base_data(bundle.base)
    g = data.ab.group
    free = [Fraction(0)] * g.free_rank
    tors = [Fraction(0)] * len(g.torsion)
    for rep in bundle.summands:
        if rep.kind == "real":
            free = [(a + b) % 1 for a, b in zip(free, rep.free)]
            tors = [(a + b) % 1 for a, b in zip(tors, rep.torsion)]
    return LineRep("real", tuple(free), tuple(tors))


# ======================================================================
# cup products on the surface bases
# ======================================================================


@dataclass(frozen=True)
class CupTable:
    """Mod-2 cup pairing H^1 x H^1 -> H^2 = Z/2 on a fixed basis.

    ``pairing[i][j]`` is the top-class coefficient of the product of
    basis classes i and j.
    """

    base: str
    labels: tuple[str, ...]
    pairing: tuple[tuple[int, ...], ...]

    def cup(self, a: Mod2Class, b: Mod2Class) -> int:
        n = len(self.labels)
        if len(a) != n or len(b) != n:
            raise DomainError("class length does not match the cup table")
        total = 0
        for i in range(n):
            if a[i]:
                for j in range(n):
                    if b[j]:
                        total += self.pairing[i][j]
        return total % 2


_CUP_PAIRINGS = {
    # torus: x.y = top, squares vanish
    "T2": ((0, 1), (1, 0)),
    # flat Klein bottle in the (alpha, beta) basis: alpha^2 = top,
    # alpha.beta = top, beta^2 = 0 (dual to the mod-2 intersection form)
    "K": ((1, 1), (1, 0)),
    # the circle has no degree-2 cohomology
    "S1": ((0,),),
}


def tangent_w1(base: str) -> Mod2Class:
    """w1 of the tangent bundle of the base: the determinant character
    of the holonomy representation, pushed to the homology basis."""
    data = base_data(base)
    spec = data.spec
    screws = spec.screw_gens()
    n = spec.dim
    vals = [0] * n + [(0 if g.linear.det() == 1 else 1) for g in screws]
    free_bits, tors_bits = data.ab.functional_on_basis(vals, 2)
    bits = []
    for where, idx in data.mod2_sources:
        bits.append(free_bits[idx] % 2 if where == "free" else tors_bits[idx] % 2)
    return tuple(bits)


def cup_table(base: str) -> CupTable:
    """The mod-2 cup pairing of a dimension <= 2 base, health-checked.

    Checks: symmetry; nondegeneracy for the closed surfaces; and the
    Wu relation w1^2 = w2 = 0 for the (flat, zero Euler characteristic)
    surfaces.
    """
    data = base_data(base)
    if base not in _CUP_PAIRINGS:
        raise DomainError(f"no cup table for base {base!r} (dimension > 2)")
    pairing = _CUP_PAIRINGS[base]
    table = CupTable(base=base, labels=data.mod2_labels, pairing=pairing)
    n = len(table.labels)
    for i in range(n):
        for j in range(n):
            if pairing[i][j] != pairing[j][i]:
                raise InternalCheckError("cup pairing is not symmetric")
    if data.spec.dim == 2:
        det = (
            pairing[0][0] * pairing[1][1] - pairing[0][1] * pairing[1][0]
        ) % 2
        if det != 1:
            raise InternalCheckError("cup pairing is degenerate")
        w1 = tangent_w1(base)
        if table.cup(w1, w1) != 0:
            raise InternalCheckError("Wu relation failed: w1^2 != 0")
    return table


# ======================================================================
# Whitney data of bundles
# ======================================================================


@dataclass(frozen=True)
class CharClassVector:
    """(w1, w2, c1 list) of a flat bundle.  w2 is None over a
    one-dimensional base."""

    base: str
    w1: Mod2Class
    w2: int | None
    c1: tuple[C1Class, ...]


def sw_vector(bundle: FlatBundleSpec) -> CharClassVector:
    """Stiefel-Whitney data of a sum of flat line bundles.

    w1 adds over the real summands.  w2 (surface bases only) is the
    Whitney pairwise sum of the real first classes plus the mod-2
    reductions of the complex summands' Chern classes.
    """
    data = base_data(bundle.base)
    dim = data.spec.dim
    if dim > 2:
        raise DomainError("Whitney vectors are computed over bases of dimension <= 2")
    w1 = orientation_character(bundle)
    c1s = tuple(
        c1_of_line(bundle.base, rep)
        for rep in bundle.summands
        if rep.kind == "complex"
    )
    if dim == 1:
        return CharClassVector(base=bundle.base, w1=w1, w2=None, c1=c1s)
    table = cup_table(bundle.base)
    real_w1s = [
        w1_of_line(bundle.base, rep)
        for rep in bundle.summands
        if rep.kind == "real"
    ]
    w2 = 0
    for i in range(len(real_w1s)):
        for j in range(i + 1, len(real_w1s)):
            w2 += table.cup(real_w1s[i], real_w1s[j])
    for c in c1s:
        w2 += c.mod2_bit()
    return CharClassVector(base=bundle.base, w1=w1, w2=w2 % 2, c1=c1s)


# ======================================================================
# structure of the total space
# ======================================================================


def total_holonomy(bundle: FlatBundleSpec) -> tuple[tuple[IntMatrix, tuple[Fraction, ...]], ...]:
    """Closure of (base linear part, summand angles) over the group
    generators -- the holonomy image of the total space."""
    data = base_data(bundle.base)
    spec = data.spec
    gens = []
    for idx, g in enumerate(spec.gens):
        el = data.ab.gen_image(idx)
        angles = tuple(_evaluate(rep, el) for rep in bundle.summands)
        gens.append((g.linear, angles))
    ident = (IntMatrix.identity(spec.dim), tuple(Fraction(0) for _ in bundle.summands))
    seen = {ident}
    frontier = [ident]
    order_found = [ident]
    while frontier:
        nxt = []
        for m, a in frontier:
            for gm, ga in gens:
                prod = (m * gm, tuple((x + y) % 1 for x, y in zip(a, ga)))
                if prod not in seen:
                    seen.add(prod)
                    order_found.append(prod)
                    nxt.append(prod)
                    if len(seen) > 4096:
                        raise DomainError("total holonomy closure exceeded bound 4096")
        frontier = nxt
    return tuple(order_found)


def _total_holonomy_cyclic(bundle: FlatBundleSpec) -> bool:
    group = total_holonomy(bundle)
    n = len(group)
    ident = group[0]
    for elt in group:
        k = 1
        cur = elt
        while cur != ident:
            cur = (cur[0] * elt[0], tuple((x + y) % 1 for x, y in zip(cur[1], elt[1])))
            k += 1
        if k == n:
            return True
    return False


def _require_cyclic(bundle: FlatBundleSpec, what: str) -> None:
    if not _total_holonomy_cyclic(bundle):
        raise DomainError(f"{what} needs cyclic total holonomy")


@dataclass(frozen=True)
class CyclicStructureResult:
    """The bundle is trivial_rank trivial lines plus (optionally) one
    determinant line."""

    trivial_rank: int
    det_summand: LineRep | None


def cyclic_structure(bundle: FlatBundleSpec) -> CyclicStructureResult:
    """Structure of a flat bundle with cyclic total holonomy.

    Orientable such bundles are trivial; nonorientable ones split as a
    trivial bundle plus the determinant line.
    """
    _require_cyclic(bundle, "cyclic_structure")
    s = bundle.rank
    w1 = orientation_character(bundle)
    if not any(w1):
        return CyclicStructureResult(trivial_rank=s, det_summand=None)
    return CyclicStructureResult(trivial_rank=s - 1, det_summand=det_line(bundle))


@dataclass(frozen=True)
class TangentStructureResult:
    """Tangent structure of the total space: parallelizable, or a
    trivial bundle plus one line with the recorded w1."""

    parallelizable: bool
    total_dim: int
    split_line_w1: Mod2Class | None


def tangent_structure(bundle: FlatBundleSpec) -> TangentStructureResult:
    """Tangent bundle structure of the total space over a catalog base.

    The total space is parallelizable exactly when it is orientable,
    i.e. when w1 of the base tangent bundle plus w1 of the fibre bundle
    vanishes; otherwise the tangent bundle is trivial except for one
    line bundle with that class.
    """
    _require_cyclic(bundle, "tangent_structure")
    w1_total = mod2_add(tangent_w1(bundle.base), orientation_character(bundle))
    m = bundle.total_dim
    if not any(w1_total):
        return TangentStructureResult(
            parallelizable=True, total_dim=m, split_line_w1=None
        )
    return TangentStructureResult(
        parallelizable=False, total_dim=m, split_line_w1=w1_total
    )
