"""
splurge_equivariant - finite, truncated models of equivariant (∞,1)-categories.

Copyright (c) 2025, Jim Schilling

This module is licensed under the MIT License.

This package builds finite groups and orbit categories, truncated simplicial
sets and simplicial spaces, finite simplicial categories and their G-objects,
and checks fixed-point adjunctions and cellularity conditions on instances.
"""

from .bisimp import (
    SegalPrecategory,
    TruncBiSSet,
    build_pq,
    completeness_evidence,
    reduce,
    segal_check,
    transpose,
)
from .elmendorf import check_elmendorf_adjunction, elmendorf_lan, elmendorf_restrict, fixed_point_diagram
from .equivariant import (
    GMap,
    GObject,
    check_fixed_point_adjunction,
    check_cellularity_1,
    check_cellularity_2,
    check_cellularity_2_scat,
    check_cellularity_3,
    fixed_points,
    tensor_orbit,
)
from .fingroup import FiniteGroup, Subgroup, group_by_name, orbit_category, subgroups
from .generators import generating_cofibrations
from .homology import homology
from .scat import SCategory, SFunctor, attach_cells, coherent_nerve
from .serialization import decode, encode
from .simpset import TruncSSet, boundary, horn, is_quasicategory, nerve, standard_simplex
from .suite import CheckSuite, run_suite

__version__ = "2025.1.0"

__all__ = [
    # Groups and orbits
    "FiniteGroup",
    "Subgroup",
    "group_by_name",
    "subgroups",
    "orbit_category",
    # Simplicial sets
    "TruncSSet",
    "standard_simplex",
    "boundary",
    "horn",
    "nerve",
    "is_quasicategory",
    "homology",
    # Simplicial spaces
    "TruncBiSSet",
    "SegalPrecategory",
    "transpose",
    "segal_check",
    "completeness_evidence",
    "reduce",
    "build_pq",
    # Simplicial categories
    "SCategory",
    "SFunctor",
    "attach_cells",
    "coherent_nerve",
    # Equivariant objects and checks
    "GObject",
    "GMap",
    "fixed_points",
    "tensor_orbit",
    "check_fixed_point_adjunction",
    "check_cellularity_1",
    "check_cellularity_2",
    "check_cellularity_2_scat",
    "check_cellularity_3",
    "elmendorf_restrict",
    "elmendorf_lan",
    "fixed_point_diagram",
    "check_elmendorf_adjunction",
    "generating_cofibrations",
    # Suites and serialization
    "CheckSuite",
    "run_suite",
    "encode",
    "decode",
]

__domains__ = [
    "bisimplicial",
    "category",
    "cli",
    "config",
    "equivariant",
    "exceptions",
    "file",
    "group",
    "homology",
    "orbit",
    "reports",
    "serialization",
    "simplicial",
    "simplicial-category",
    "suite",
    "util",
]
