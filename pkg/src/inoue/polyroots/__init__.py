"""Certified real and complex root counting, isolation and refinement."""

from .complex import ComplexBox, enclose_complex_roots, upper_roots
from .intervals import (
    ComplexInterval, DyadicComplexInterval, DyadicInterval, RealInterval,
    fraction_str, precision, preview, working_precision,
)
from .real import (
    RealIsolatingInterval, count_real_roots, isolate_real_roots, real_roots,
    refine_real, root_bound, sturm_chain, sturm_count,
)

__all__ = [
    "ComplexBox", "enclose_complex_roots", "upper_roots",
    "ComplexInterval", "DyadicComplexInterval", "DyadicInterval", "RealInterval",
    "fraction_str", "precision", "preview", "working_precision",
    "RealIsolatingInterval", "count_real_roots", "isolate_real_roots", "real_roots",
    "refine_real", "root_bound", "sturm_chain", "sturm_count",
]
