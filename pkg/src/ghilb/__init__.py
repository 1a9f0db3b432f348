"""Exact G-Hilbert scheme computations for finite abelian subgroups of SL3(C).

Given diagonal generators, the package enumerates the torus-fixed points of
the G-Hilbert scheme as classified monomial staircases, computes the McKay
quiver and its wedge tensor matrices, assembles and checks the crepant
toric resolution, and verifies the equivariant Hom dimensions and the
exactness of the associated complexes with exact rational arithmetic.
"""

from .ggraph import (
    GGraph,
    MonomialIdeal,
    brute_force_fixed_points,
    complement,
    enumerate_fixed_points,
    fixed_points_2d,
    is_ggraph,
    verify_count_identity,
)
from .groups import AbelianGroup, Character, GroupSpec, GroupSpecError, build_group
from .homcalc import hom_dim, hom_matrix
from .koszul import (
    ChartPoint,
    ModuleRep,
    build_rep,
    cpxnil_homology,
    koszul_homology,
    verify_adhm,
)
from .mckay import cartan_2d, intersection_matrix, mckay_matrices, quiver_dot
from .toric import Fan, LatticePair, build_fan, chart_cone, check_smooth, lattices
from .verify import verification_report

__version__ = "0.1.0"

__all__ = [
    "AbelianGroup",
    "Character",
    "ChartPoint",
    "Fan",
    "GGraph",
    "GroupSpec",
    "GroupSpecError",
    "LatticePair",
    "ModuleRep",
    "MonomialIdeal",
    "brute_force_fixed_points",
    "build_fan",
    "build_group",
    "build_rep",
    "cartan_2d",
    "chart_cone",
    "check_smooth",
    "complement",
    "cpxnil_homology",
    "enumerate_fixed_points",
    "fixed_points_2d",
    "hom_dim",
    "hom_matrix",
    "intersection_matrix",
    "is_ggraph",
    "koszul_homology",
    "lattices",
    "mckay_matrices",
    "quiver_dot",
    "verification_report",
    "verify_adhm",
    "verify_count_identity",
]
