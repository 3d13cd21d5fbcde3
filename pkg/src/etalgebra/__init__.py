"""Exact computations with etale subalgebras of central simple algebras.

Subpackages of note: :mod:`.fields` and :mod:`.poly` (exact kernel),
:mod:`.algebra` (structure constants), :mod:`.etale` (types and subfields),
:mod:`.moduli` (psi, phi and ideal systems), :mod:`.plucker` (Grassmannian
and quadrics), :mod:`.oracle` (finite-field enumeration), :mod:`.cli`.
"""

from .algebra import (Algebra, Element, Partition, RightIdeal, ideal_from_idempotent,
                      load_algebra, make_matrix_algebra, make_quaternion_algebra,
                      make_structure_constant_algebra, min_poly, reduced_rank)
from .errors import (AlgebraError, BoundaryError, BudgetExceededError, DomainError,
                     InvalidInputError, NotDecomposableError, NotInUError,
                     TransversalityError)
from .etale import EtaleSubalgebra, is_subfield, minimal_idempotents, primitive_element, type_of
from .fields import GF, QQ, ExtensionField, load_field
from .linalg import Subspace
from .moduli import (IdealSystem, PsiConfig, ideal_system_from_subalgebra, lagrange_idempotents,
                     phi, psi, subalgebra_from_ideal_system)
from .oracle import enum_etale_subalgebras, enum_ideal_systems, verify_moduli_count
from .plucker import (PluckerPoint, PointPairOnQuadric, QuadraticSpace, line_quadric_intersect,
                      pair_to_line, plucker_embed, plucker_inverse, wedge_form)
from .poly import Poly, find_roots, splitting_extension

__version__ = "0.1.0"

__all__ = [
    "Algebra",
    "Element",
    "Partition",
    "RightIdeal",
    "ideal_from_idempotent",
    "load_algebra",
    "make_matrix_algebra",
    "make_quaternion_algebra",
    "make_structure_constant_algebra",
    "min_poly",
    "reduced_rank",
    "AlgebraError",
    "BoundaryError",
    "BudgetExceededError",
    "DomainError",
    "InvalidInputError",
    "NotDecomposableError",
    "NotInUError",
    "TransversalityError",
    "EtaleSubalgebra",
    "is_subfield",
    "minimal_idempotents",
    "primitive_element",
    "type_of",
    "GF",
    "QQ",
    "ExtensionField",
    "load_field",
    "Subspace",
    "IdealSystem",
    "PsiConfig",
    "ideal_system_from_subalgebra",
    "lagrange_idempotents",
    "phi",
    "psi",
    "subalgebra_from_ideal_system",
    "enum_etale_subalgebras",
    "enum_ideal_systems",
    "verify_moduli_count",
    "PluckerPoint",
    "PointPairOnQuadric",
    "QuadraticSpace",
    "line_quadric_intersect",
    "pair_to_line",
    "plucker_embed",
    "plucker_inverse",
    "wedge_form",
    "Poly",
    "find_roots",
    "splitting_extension",
]
