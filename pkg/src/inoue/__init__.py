"""Generalized Inoue manifolds T_M from integer matrices, in exact arithmetic."""

__version__ = "0.1.0"

from .classify import (
    ConjugacyFingerprint, ConjugacyVerdict, HomeoVerdict, decide_conjugacy, fingerprint,
    homeo_verdict, ot_exclusion, semidirect_type,
)
from .core import (
    ActionPoint, GroupPresentation, HomologyReport, InoueDescriptor, abelianization,
    apply_generator, build_descriptor, evaluate_word, homology_from_matrix, presentation,
    semidirect_data,
)
from .errors import (
    BitLengthExceeded, ConfigError, HypothesisViolation, InoueError, InputFormatError,
    InternalInconsistency, PrecisionError, Rejection, RootOnEndpoint, ZeroDivisorError,
)
from .linalg import IntMatrix, IntPoly, SNFResult, char_poly, kernel_basis_mod, smith_normal_form, squarefree_part
from .ot import OTFieldData, UnitPolyCertificate, companion_transpose, correspondence_report, ot_data, validate_unit_poly
from .search import SearchConfig, make_nondiagonalizable, search_type_I
from .spectral import (
    AlgebraicRoot, DiagonalizabilityCertificate, EigenData, TypeICertificate, check_type_I,
    eigen_data, is_diagonalizable, verify_conjugation_relation,
)

__all__ = [
    "ConjugacyFingerprint", "ConjugacyVerdict", "HomeoVerdict", "decide_conjugacy", "fingerprint",
    "homeo_verdict", "ot_exclusion", "semidirect_type",
    "ActionPoint", "GroupPresentation", "HomologyReport", "InoueDescriptor", "abelianization",
    "apply_generator", "build_descriptor", "evaluate_word", "homology_from_matrix", "presentation",
    "semidirect_data",
    "BitLengthExceeded", "ConfigError", "HypothesisViolation", "InoueError", "InputFormatError",
    "InternalInconsistency", "PrecisionError", "Rejection", "RootOnEndpoint", "ZeroDivisorError",
    "IntMatrix", "IntPoly", "SNFResult", "char_poly", "kernel_basis_mod", "smith_normal_form", "squarefree_part",
    "OTFieldData", "UnitPolyCertificate", "companion_transpose", "correspondence_report", "ot_data",
    "validate_unit_poly",
    "SearchConfig", "make_nondiagonalizable", "search_type_I",
    "AlgebraicRoot", "DiagonalizabilityCertificate", "EigenData", "TypeICertificate", "check_type_I",
    "eigen_data", "is_diagonalizable", "verify_conjugation_relation",
]
