"""Exact arithmetic for family algebras End(V) (x) S(g), the PBW star product
and the Hochschild cochains built from them."""

from .config import AlgebraSpec, SpecError, from_presets, parse_spec
from .enveloping import UEElement, pbw_inverse, pbw_symmetrize, star_coefficient, star_product
from .expr import ExpressionError, parse_matrix, parse_poly
from .family import FamilyAlgebra, InvariantBasis, MatPoly, MatUE, embeds_scalar
from .hochschild import Cochain, circ, d_hochschild, gerstenhaber_bracket
from .lie import (
    BasisChange,
    LieAlgebra,
    LieValidationError,
    Representation,
    abelian,
    affine2,
    casimir,
    heisenberg3,
    killing_form,
    preset,
    rep_preset,
    sl2,
    validate_lie,
    validate_rep,
)
from .linalg import QMatrix, nullspace
from .poisson import m2_closed_form, phi_closed_form, poisson_bracket
from .poly import SymPoly, TPoly
from .suites import SUITES, SuiteReport, run_identity_suite

__version__ = "0.1.0"

__all__ = [
    "AlgebraSpec", "SpecError", "from_presets", "parse_spec",
    "UEElement", "pbw_inverse", "pbw_symmetrize", "star_coefficient", "star_product",
    "ExpressionError", "parse_matrix", "parse_poly",
    "FamilyAlgebra", "InvariantBasis", "MatPoly", "MatUE", "embeds_scalar",
    "Cochain", "circ", "d_hochschild", "gerstenhaber_bracket",
    "BasisChange", "LieAlgebra", "LieValidationError", "Representation",
    "abelian", "affine2", "casimir", "heisenberg3", "killing_form", "preset", "rep_preset", "sl2",
    "validate_lie", "validate_rep",
    "QMatrix", "nullspace",
    "m2_closed_form", "phi_closed_form", "poisson_bracket",
    "SymPoly", "TPoly",
    "SUITES", "SuiteReport", "run_identity_suite",
]
