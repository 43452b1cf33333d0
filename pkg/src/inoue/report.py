"""Conversion of results to JSON-ready values.

Numbers are exact: integers stay integers, rationals become ``"p/q"``
strings, intervals become ``{"lo": ..., "hi": ...}`` dicts.  No floats.
"""

from __future__ import annotations

from dataclasses import fields, is_dataclass
from fractions import Fraction

from .linalg import IntMatrix, IntPoly
from .polyroots import ComplexBox, ComplexInterval, RealInterval, RealIsolatingInterval
from .polyroots.intervals import fraction_str

SCHEMA_VERSION = "1.0"


def rational(q) -> str:
    return fraction_str(q)


def to_json(x):
    """Recursively convert library objects to JSON-compatible values."""
    if isinstance(x, bool) or x is None or isinstance(x, (int, str)):
        return x
    if isinstance(x, Fraction):
        return rational(x)
    if isinstance(x, IntMatrix):
        return [list(r) for r in x.rows]
    if isinstance(x, IntPoly):
        return list(x.coeffs)
    if isinstance(x, RealInterval):
        return {"lo": rational(x.lo), "hi": rational(x.hi)}
    if isinstance(x, ComplexInterval):
        return {"re": to_json(x.re), "im": to_json(x.im)}
    if isinstance(x, ComplexBox):
        return {"re_lo": rational(x.re_lo), "re_hi": rational(x.re_hi),
                "im_lo": rational(x.im_lo), "im_hi": rational(x.im_hi), "multiplicity": x.multiplicity}
    if isinstance(x, RealIsolatingInterval):
        return {"lo": rational(x.lo), "hi": rational(x.hi), "multiplicity": x.multiplicity}
    if isinstance(x, dict):
        return {str(k): to_json(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [to_json(v) for v in x]
    if is_dataclass(x):
        return {f.name: to_json(getattr(x, f.name)) for f in fields(x)}
    raise TypeError(f"cannot serialize {type(x).__name__}")


def certificate_json(cert) -> dict:
    return {
        "n": cert.n,
        "dim": cert.dim,
        "char_poly": to_json(cert.char_poly),
        "char_poly_text": str(cert.char_poly),
        "factorization": [{"factor": to_json(f), "multiplicity": e} for f, e in cert.factorization],
        "alpha": {"factor": to_json(cert.alpha.factor), "isolating_interval": to_json(cert.alpha.region),
                  "enclosure": to_json(cert.alpha_enclosure)},
        "complex_pairs": [{"factor": to_json(f), "box": to_json(b)} for f, b in cert.complex_pairs],
        "alpha_simple": to_json(cert.alpha_simple),
        "alpha_irrational": to_json(cert.alpha_irrational),
        "alpha_positive": to_json(cert.alpha_positive),
        "det_ok": cert.det_ok,
        "notes": list(cert.notes),
        "bits": cert.bits,
    }


def eigen_json(ed) -> dict:
    return {
        "bits": ed.bits,
        "alpha": to_json(ed.alpha),
        "a": to_json(ed.a),
        "b": to_json(ed.b),
        "R": to_json(ed.R),
        "u": to_json(ed.u),
        "det_v": to_json(ed.det_v),
        "column_tags": [{"factor": to_json(f), "root": r, "depth": d} for f, r, d in ed.column_tags],
    }
