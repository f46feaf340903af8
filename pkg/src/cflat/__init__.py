"""cflat: exact algebraic invariants of complete flat manifolds.

Integer and rational arithmetic only -- Smith normal forms with
unimodular witnesses, first cohomology of cyclic lattice actions,
homology of the low-dimensional Bieberbach groups, characteristic
classes of flat line-bundle sums, and the classification tables and
canonical forms built on top of them.
"""

from .bieberbach import (
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
)
from .classify import (
    affine_class_bound,
    affine_equivalent,
    aut_action,
    circle_canonical,
    classification_report,
    diffeo_classes,
    dim4_table,
    inequivalent_family,
    klein_rho_canonical,
    stably_diffeomorphic,
    torus_moduli_canonical,
)
from .errors import DomainError, InternalCheckError
from .flatbundle import (
    FlatBundleSpec,
    LineRep,
    c1_of_line,
    cup_table,
    cyclic_structure,
    line_with_w1,
    sw_vector,
    tangent_structure,
    tangent_w1,
    w1_of_line,
)
from .glattice import (
    GLattice,
    TrivialityCertificate,
    h1_oracle,
    h1_report,
    make_glattice,
)
from .zlinalg import (
    AbelianGroup,
    IntMatrix,
    KERNEL_BACKEND,
    SNFDecomposition,
    cokernel,
    fixed_card_mod,
    kernel_basis,
    rank_mod,
    smith_normal_form,
)

__version__ = "0.1.0"

__all__ = [
    "AbelianGroup",
    "BieberbachGroupSpec",
    "CATALOG_NAMES",
    "DomainError",
    "FlatBundleSpec",
    "GLattice",
    "IntMatrix",
    "InternalCheckError",
    "KERNEL_BACKEND",
    "LineRep",
    "SNFDecomposition",
    "TrivialityCertificate",
    "abelianization",
    "affine_class_bound",
    "affine_equivalent",
    "aut_action",
    "c1_of_line",
    "catalog",
    "catalog_group",
    "circle_canonical",
    "classification_report",
    "cokernel",
    "cup_table",
    "cyclic_splitting",
    "cyclic_structure",
    "diffeo_classes",
    "dim4_table",
    "fixed_card_mod",
    "h1_oracle",
    "h1_report",
    "holonomy_group",
    "inequivalent_family",
    "is_holonomy_cyclic",
    "kernel_basis",
    "klein_rho_canonical",
    "line_with_w1",
    "make_glattice",
    "mapping_torus",
    "rank_mod",
    "smith_normal_form",
    "stably_diffeomorphic",
    "sw_vector",
    "tangent_structure",
    "tangent_w1",
    "tors_h1_two_ways",
    "torus_moduli_canonical",
    "w1_of_line",
    "__version__",
]
