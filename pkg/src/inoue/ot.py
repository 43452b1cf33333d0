"""From a unit polynomial to the matching Inoue-type and OT-type data.

For a monic irreducible ``P`` of odd degree ``2n+1`` with ``P(0) = -1`` and
a single real root ``alpha``, the matrix ``D_P = C_P^T`` is type I.  The
number field ``K = Q(xi)`` with ``xi`` a root of ``P`` has one real and
``n`` complex places; ``Z[xi]`` embeds as the lattice spanned by the rows
``sigma(xi^k) = (alpha^k, beta_1^k, ..., beta_n^k)``.  Those rows are the
``v_i`` of the eigen-data of ``D_P``, and ``xi`` acts diagonally, which is
how ``g0`` acts on ``H x C^n``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InternalInconsistency, Rejection
from .factor import IrreducibilityRecord, irreducibility
from .linalg import IntMatrix, IntPoly
from .polyroots import (
    ComplexInterval, RealInterval, isolate_real_roots,
    precision, refine_real, upper_roots,
)
from .spectral import (
    EigenData, ProofRecord, TypeICertificate, check_type_I, eigen_data,
    is_diagonalizable, verify_conjugation_relation,
)


@dataclass(frozen=True)
class UnitPolyCertificate:
    P: IntPoly
    degree: int
    irreducible: IrreducibilityRecord
    unit_constant: ProofRecord
    one_real_root: ProofRecord
    alpha_positive: ProofRecord

    @property
    def n(self) -> int:
        return (self.degree - 1) // 2


def validate_unit_poly(P: IntPoly) -> UnitPolyCertificate:
    """Accept ``P`` or raise :class:`Rejection` naming the first failed condition."""
    if P.is_zero() or not P.is_monic():
        raise Rejection("not-monic", {"P": str(P)})
    d = P.degree
    if d < 3 or d % 2 == 0:
        raise Rejection("degree", {"degree": d, "need": "odd and >= 3"})
    if P.coeffs[0] != -1:
        raise Rejection("constant-term", {"P(0)": P.coeffs[0], "need": -1,
                                          "det_companion": (-1) ** d * P.coeffs[0]})
    rec = irreducibility(P)
    if not rec.irreducible:
        raise Rejection("reducible", {"method": rec.method, "details": rec.details})
    isos = isolate_real_roots(P)
    if len(isos) != 1:
        raise Rejection("real-root-count!=1", {"real_roots": len(isos)})
    enc = refine_real(P, isos[0], 32)
    b = 32
    while enc.contains_zero():
        b *= 2
        enc = refine_real(P, isos[0], b)
    if not enc.is_positive():
        raise InternalInconsistency("real root of a unit polynomial with P(0) = -1 is negative")
    return UnitPolyCertificate(
        P, d, rec,
        ProofRecord("P(0) = -1", "direct", {"P(0)": -1, "det_companion": 1}),
        ProofRecord("exactly one real root", "Sturm count", {"count": 1, "interval": (isos[0].lo, isos[0].hi)}),
        ProofRecord("alpha > 0", "alpha * prod |beta_j|^2 = -P(0) = 1, confirmed by the enclosure", {"lo": enc.lo}),
    )


def companion_transpose(P: IntPoly) -> IntMatrix:
    """``D_P = C_P^T`` where ``C_P`` carries the coefficients in its last column."""
    return IntMatrix.companion(P).T


@dataclass(frozen=True)
class OTFieldData:
    s: int
    t: int
    alpha: RealInterval
    betas: tuple
    lattice: tuple  # rows sigma(xi^k), k = 0..2n
    action: tuple  # diagonal entries (alpha, beta_1, ..., beta_n)
    unit_rank: int
    bits: int


def ot_data(P: IntPoly, bits: int = 128, cert: UnitPolyCertificate | None = None) -> OTFieldData:
    """Embedding data of ``Z[xi]`` computed straight from the roots of ``P``."""
    if cert is None:
        cert = validate_unit_poly(P)
    n = cert.n
    g = bits + 3
    with precision(bits + 96):
        iso = isolate_real_roots(P)[0]
        alpha = refine_real(P, iso, bits + 48)
        betas = [box.as_interval() for box in upper_roots(P, bits + 48)]
        lattice = []
        pa, pb = RealInterval(1), [ComplexInterval(1) for _ in betas]
        for _ in range(P.degree):
            lattice.append((pa,) + tuple(pb))
            pa = pa * alpha
            pb = [x * y for x, y in zip(pb, betas)]
    pad = lambda x: x.pad_to_grid(g)
    lattice = tuple(tuple(pad(x) for x in row) for row in lattice)
    alpha, betas = pad(alpha), tuple(pad(b) for b in betas)
    return OTFieldData(1, n, alpha, betas, lattice, (alpha,) + betas, n, bits)


@dataclass(frozen=True)
class CorrespondenceReport:
    P: IntPoly
    unit_certificate: UnitPolyCertificate
    type_I: TypeICertificate
    ot: OTFieldData
    eigen: EigenData
    checks: dict
    statement: str = ""
    rows: tuple = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())


def _overlap(x, y) -> bool:
    if isinstance(x, RealInterval) and isinstance(y, RealInterval):
        return x.overlaps(y)
    return ComplexInterval.coerce(x).overlaps(ComplexInterval.coerce(y))


def correspondence_report(P: IntPoly, bits: int = 128) -> CorrespondenceReport:
    """Compare the Inoue-side data of ``D_P`` with the OT-side data of ``P``.

    Raises :class:`InternalInconsistency` if any comparison fails.
    """
    ucert = validate_unit_poly(P)
    D = companion_transpose(P)
    if D.char_poly() != P:
        raise InternalInconsistency("char poly of D_P differs from P")
    try:
        tcert = check_type_I(D, bits)
    except Rejection as exc:
        raise InternalInconsistency(f"D_P rejected as type I: {exc.reason}") from exc
    diag = is_diagonalizable(D)
    ed = eigen_data(D, tcert, bits)
    conj = verify_conjugation_relation(D, ed)
    od = ot_data(P, bits, ucert)
    n = ucert.n
    rows_ok = all(_overlap(x, y) for rv, rl in zip(ed.v, od.lattice) for x, y in zip(rv, rl))
    first_row_ones = all(x.contains(1) for x in od.lattice[0])
    R_diag = all(ed.R[i][j].contains_zero() for i in range(n) for j in range(n) if i != j)
    R_betas = all(ed.R[j][j].overlaps(od.betas[j]) for j in range(n))
    alpha_ok = ed.alpha.overlaps(od.alpha)
    with precision(bits + 64):
        norm = od.alpha
        for b in od.betas:
            norm = norm * b.abs2()
    checks = {
        "type_I(D_P)": True,
        "diagonalizable(D_P)": diag.diagonalizable,
        "conjugation_relation": conj.ok,
        "alpha_matches": alpha_ok,
        "lattice_rows_match_v_rows": rows_ok,
        "first_lattice_row_is_ones": first_row_ones,
        "R_is_diagonal": R_diag,
        "R_diagonal_is_betas": R_betas,
        "alpha_times_norms_is_one": norm.contains(1),
    }
    statement = (f"T_(D_P) and the OT manifold X(K, Z[xi], <xi>) for K = Q[x]/({P}) coincide: "
                 f"both are H x C^{n} modulo translations by sigma(Z[xi]) and "
                 f"g0(w, z) = (alpha w, beta_1 z_1, ..., beta_{n} z_{n})")
    rep = CorrespondenceReport(P, ucert, tcert, od, ed, checks, statement,
                               tuple(zip(ed.v, od.lattice)))
    if not rep.ok:
        bad = [k for k, v in checks.items() if not v]
        raise InternalInconsistency(f"correspondence failed: {bad}")
    return rep
