"""Symbolic osp(1|2n): structure constants, U(g) (x) W(g_1) normal forms,
the symplectic Dirac operator, and explicit osp(1|2)-modules."""

from .dirac import (
    DiracSquareCertificate,
    KostantResult,
    alpha,
    casimir,
    dirac_operator,
    dirac_square_residual,
    even_casimir_delta,
    evaluate_polynomial,
    hc_image,
    kostant_constant,
    matrix_from_weyl,
    verify_dirac_square,
    weyl_from_matrix,
)
from .enveloping import Enveloping, TensorElement, default_engine, normal_form
from .modules import DiracCohomologyResult, ExplicitModule, build_module, casimir_scalar, dirac_cohomology
from .structure import SuperAlgebraStructure, build_structure, verify_structure

__all__ = [
    "DiracCohomologyResult",
    "DiracSquareCertificate",
    "Enveloping",
    "ExplicitModule",
    "KostantResult",
    "SuperAlgebraStructure",
    "TensorElement",
    "alpha",
    "build_module",
    "build_structure",
    "casimir",
    "casimir_scalar",
    "default_engine",
    "dirac_cohomology",
    "dirac_operator",
    "dirac_square_residual",
    "even_casimir_delta",
    "evaluate_polynomial",
    "hc_image",
    "kostant_constant",
    "matrix_from_weyl",
    "normal_form",
    "verify_dirac_square",
    "verify_structure",
    "weyl_from_matrix",
]
