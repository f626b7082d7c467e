"""Singer difference sets, Wada dessins and their Frobenius automorphisms."""

__version__ = "0.1.0"

from .autgrp import (
    AutReport,
    FrobeniusGroupReport,
    VertexMap,
    check_automorphism,
    check_prime_case_conditions,
    frobenius_group_report,
    subgroup_feasibility,
)
from .dessin import Dessin, build_dessin, dessin_report, is_wada, signature_and_genus, walk_cells
from .diffset import (
    DifferenceSet,
    OrbitDecomposition,
    equivalent,
    fixed_vertices,
    frobenius_orbits,
    frobenius_shift_family,
    is_frobenius_fixed,
    transform,
    verify_difference_set,
)
from .errors import (
    BudgetExhausted,
    DessinError,
    FieldTooLarge,
    FNotDividingQ,
    InvalidParameters,
    NotADifferenceSet,
    NotAnAutomorphism,
    NotFrobeniusFixed,
    OrbitShapeError,
    SizeGuardError,
)
from .gf import FieldCtx, FieldElement, build_field
from .ordering import (
    CompatibilityReport,
    OrderedDifferenceSet,
    find_compatible_ordering,
    is_frobenius_compatible,
    is_wada_compatible,
)
from .singer import SpaceParams, generate_singer_set, space_params

__all__ = [name for name in dir() if not name.startswith("_")]
