"""Type-I certification, diagonalizability and certified eigen-data.

An integer matrix ``M`` of odd size ``2n+1`` with ``det M = 1`` is type I
when its characteristic polynomial has a single real root ``alpha`` that
is simple and irrational.  For such ``M`` this module builds the real
eigenvector ``a``, a basis ``b_1..b_n`` of the sum ``W`` of generalized
eigenspaces for the eigenvalues in the upper half-plane, the matrix ``R``
of ``M`` restricted to ``W``, and the vectors ``v_i`` / ``u_i`` made of
the ``i``-th coordinates.

Everything is first computed exactly over ``Q[x]/(f)`` for each
irreducible factor ``f`` of the characteristic polynomial.  The exact
data is then evaluated at certified root enclosures.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

from .errors import InternalInconsistency, PrecisionError, Rejection
from .factor import irreducible_factors
from .linalg import IntMatrix, IntPoly, QuotientField, squarefree_part
from .polyroots import (
    ComplexBox, ComplexInterval, RealInterval, RealIsolatingInterval,
    isolate_real_roots, precision, refine_real, sturm_count, upper_roots,
)
from .polyroots.ilinalg import interval_det, interval_solve
from .polyroots.intervals import horner

Region = Union[RealIsolatingInterval, ComplexBox]


@dataclass(frozen=True)
class AlgebraicRoot:
    """One root of an irreducible integer polynomial, fixed by an isolating region."""

    factor: IntPoly
    region: Region

    @property
    def is_real(self) -> bool:
        return isinstance(self.region, RealIsolatingInterval)


@dataclass(frozen=True)
class ProofRecord:
    claim: str
    method: str
    details: dict = field(default_factory=dict)


@dataclass(frozen=True)
class TypeICertificate:
    matrix: IntMatrix
    n: int
    char_poly: IntPoly
    factorization: tuple
    alpha: AlgebraicRoot
    alpha_enclosure: RealInterval
    complex_pairs: tuple  # ((factor, ComplexBox), ...) one per beta_j
    alpha_simple: ProofRecord
    alpha_irrational: ProofRecord
    alpha_positive: ProofRecord
    det_ok: bool
    notes: tuple
    bits: int

    @property
    def dim(self) -> int:
        return self.matrix.dim


@dataclass(frozen=True)
class DiagonalizabilityCertificate:
    squarefree_min_poly: bool
    g: IntPoly
    witness: IntMatrix

    @property
    def diagonalizable(self) -> bool:
        return self.squarefree_min_poly


def _geometric_multiplicity(M: IntMatrix, f: IntPoly) -> int:
    K = QuotientField(f)
    A = K.shift(K.matrix(M), K.gen())
    return M.dim - K.rank(A)


def _is_cyclotomic(f: IntPoly) -> bool:
    if not f.is_monic() or abs(f.coeffs[0]) != 1:
        return False
    d = f.degree
    # phi(k) = d forces k <= 2 d^2 for d >= 1
    for k in range(1, 2 * d * d + 3):
        xk = IntPoly((-1,) + (0,) * (k - 1) + (1,))
        if f.divides(xk):
            return True
    return False


def _factor_key(f: IntPoly):
    return f.coeffs


def _sorted_factors(chi: IntPoly):
    return sorted(irreducible_factors(chi), key=lambda fe: _factor_key(fe[0]))


def check_type_I(M: IntMatrix, bits: int = 128) -> TypeICertificate:
    """Certify that ``M`` is type I or raise :class:`Rejection`.

    Rejection reasons, in the order they are tested: ``dim-even``,
    ``det!=1``, ``real-root-count!=1``, ``alpha-multiple``,
    ``alpha-rational``.  Real roots are counted with their geometric
    multiplicity, so a repeated real root with several independent
    eigenvectors (the identity, say) fails the count while a single
    Jordan chain fails as ``alpha-multiple``.
    """
    N = M.dim
    if N % 2 == 0:
        raise Rejection("dim-even", {"dim": N})
    d = M.det()
    if d != 1:
        raise Rejection("det!=1", {"det": d})
    chi = M.char_poly()
    isos = isolate_real_roots(chi)
    if len(isos) != 1:
        raise Rejection("real-root-count!=1", {"distinct_real_roots": len(isos), "char_poly": str(chi)})
    iso = isos[0]
    factors = _sorted_factors(chi)
    f_alpha, e_alpha = next((f, e) for f, e in factors if sturm_count(f, iso.lo, iso.hi) == 1)
    geometric = 1
    if e_alpha > 1:
        geometric = _geometric_multiplicity(M, f_alpha)
        details = {"algebraic": e_alpha, "geometric": geometric, "char_poly": str(chi)}
        if geometric > 1:
            raise Rejection("real-root-count!=1", {"distinct_real_roots": 1, "with_geometric_multiplicity": geometric,
                                                   "char_poly": str(chi)})
        raise Rejection("alpha-multiple", details)
    chi1, chim1 = chi(1), chi(-1)
    if chi1 == 0 or chim1 == 0:
        raise Rejection("alpha-rational", {"alpha": 1 if chi1 == 0 else -1, "char_poly": str(chi)})

    b = bits
    enc = refine_real(chi, iso, b)
    while enc.contains_zero():
        b += 64
        enc = refine_real(chi, iso, b)
    if not enc.is_positive():
        raise InternalInconsistency(f"real eigenvalue of a type-I matrix is negative: {enc!r}")
    if M.sub_scalar(1).det() == 0:
        raise InternalInconsistency("det(M - I) = 0 for a type-I matrix")

    pairs = []
    notes = []
    for f, e in factors:
        for box in upper_roots(f, bits):
            for _ in range(e):
                pairs.append((f, ComplexBox(box.re_lo, box.re_hi, box.im_lo, box.im_hi, e)))
        if f.degree >= 2 and f != f_alpha:
            if _is_cyclotomic(f):
                notes.append(f"eigenvalues of modulus 1: {f} is cyclotomic (roots of unity admitted)")
    n = (N - 1) // 2
    if len(pairs) != n:
        raise InternalInconsistency(f"found {len(pairs)} upper eigenvalues, expected {n}")
    alpha = AlgebraicRoot(f_alpha, RealIsolatingInterval(iso.lo, iso.hi, 1))
    return TypeICertificate(
        matrix=M,
        n=n,
        char_poly=chi,
        factorization=tuple(factors),
        alpha=alpha,
        alpha_enclosure=enc,
        complex_pairs=tuple(pairs),
        alpha_simple=ProofRecord("alpha is a simple root of the characteristic polynomial",
                                 "squarefree decomposition", {"multiplicity": 1}),
        alpha_irrational=ProofRecord(
            "alpha is irrational", "rational-root theorem with |chi(0)| = 1",
            {"chi(1)": chi1, "chi(-1)": chim1}),
        alpha_positive=ProofRecord(
            "alpha > 0", "det M = 1 = alpha * prod |beta_j|^2, confirmed by the enclosure",
            {"lo": enc.lo}),
        det_ok=True,
        notes=tuple(notes),
        bits=bits,
    )


def is_diagonalizable(M: IntMatrix) -> DiagonalizabilityCertificate:
    """Diagonalizable over C iff the squarefree part of chi annihilates ``M``."""
    g = squarefree_part(M.char_poly())
    W = M.eval_poly(g)
    return DiagonalizabilityCertificate(W.is_zero(), g, W)


# ---------------------------------------------------------------------------
# exact eigenspace bases
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ExactBlock:
    """Basis of ``ker (M - theta)^e`` over ``Q(theta) = Q[x]/(factor)``.

    ``basis`` holds ``e`` column vectors ordered by chain depth, and
    ``M @ basis = basis @ R`` holds exactly.
    """

    factor: IntPoly
    multiplicity: int
    basis: tuple
    R: tuple
    R_inv: tuple
    depths: tuple
    is_alpha_factor: bool


def _columns_to_matrix(cols):
    return [[c[i] for c in cols] for i in range(len(cols[0]))]


def exact_block(M: IntMatrix, f: IntPoly, e: int, is_alpha_factor: bool = False) -> ExactBlock:
    K = QuotientField(f)
    Mq = K.matrix(M)
    A = K.shift(Mq, K.gen())
    basis: list = []
    depths: list = []
    P = None
    for k in range(1, e + 1):
        P = A if P is None else K.matmul(P, A)
        R, pivots = K.rref(P)
        cols = len(P[0])
        free = [c for c in range(cols) if c not in pivots]
        for fc in free:
            v = [K.zero() for _ in range(cols)]
            v[fc] = K.one()
            for row, pc in enumerate(pivots):
                v[pc] = K.neg(R[row][fc])
            v = K.normalize(v)
            if K.rank([list(x) for x in basis] + [v]) > len(basis):
                basis.append(tuple(v))
                depths.append(k)
            if len(basis) == e:
                break
        if len(basis) == e:
            break
    if len(basis) != e:
        raise InternalInconsistency(f"generalized eigenspace of {f} has dimension {len(basis)} != {e}")
    Kmat = _columns_to_matrix(basis)
    MK = K.matmul(Mq, Kmat)
    # pick e independent rows of the basis matrix
    _, rows = K.rref([list(v) for v in basis])
    sub = [Kmat[r] for r in rows]
    Rf = K.solve_square(sub, [MK[r] for r in rows])
    if K.matmul(Kmat, Rf) != MK:
        raise InternalInconsistency(f"M does not preserve the eigenspace basis for {f}")
    ident = [[K.one() if i == j else K.zero() for j in range(e)] for i in range(e)]
    Rinv = K.solve_square(Rf, ident)
    as_t = lambda X: tuple(tuple(r) for r in X)
    return ExactBlock(f, e, tuple(basis), as_t(Rf), as_t(Rinv), tuple(depths), is_alpha_factor)


def verify_exact_block(M: IntMatrix, blk: ExactBlock) -> bool:
    K = QuotientField(blk.factor)
    Kmat = _columns_to_matrix(blk.basis)
    return K.matmul(K.matrix(M), Kmat) == K.matmul(Kmat, [list(r) for r in blk.R])


# ---------------------------------------------------------------------------
# numeric evaluation
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class EigenData:
    """Certified enclosures of the eigen-data, all of width <= 2**-bits.

    ``b`` is the list of columns ``b_1..b_n``; ``R`` and ``R_inv`` are
    ``n x n`` row tuples; ``v[i]`` is ``(a^(i), b_1^(i), ..., b_n^(i))``
    and ``u[i]`` is the same vector in real coordinates
    ``(a^(i), Re b_1^(i), Im b_1^(i), ...)``.
    """

    bits: int
    alpha: RealInterval
    betas: tuple
    a: tuple
    b: tuple
    R: tuple
    R_inv: tuple
    v: tuple
    u: tuple
    exact_blocks: tuple
    column_tags: tuple  # (factor, root index within factor, depth) for each b_j
    det_v: RealInterval
    residual: tuple

    @property
    def n(self) -> int:
        return len(self.b)

    @property
    def dim(self) -> int:
        return len(self.a)

    def max_width(self) -> Fraction:
        w = [x.width for x in self.a]
        w += [z.width for col in self.b for z in col]
        w += [z.width for row in self.R for z in row]
        return max(w)


def _match_boxes(f: IntPoly, tags: list, P: int) -> list:
    """Enclosures at precision ``P`` of the roots tagged by the certificate boxes."""
    for attempt in range(4):
        fresh = upper_roots(f, P)
        out = []
        for t in tags:
            hits = [bx for bx in fresh if bx.overlaps(t)]
            if len(hits) != 1:
                break
            out.append(hits[0])
        else:
            return out
        P += 32
    raise PrecisionError(f"cannot match root tags of {f}", suggested_bits=P)


def _eval_vec(v, root):
    return [horner(x, root) for x in v]


def _realify_rows(a_col, b_cols):
    rows = []
    for i in range(len(a_col)):
        r = [a_col[i]]
        for col in b_cols:
            r.append(col[i].re)
            r.append(col[i].im)
        rows.append(r)
    return rows


def _blocks_and_tags(cert: TypeICertificate):
    tags: dict = {}
    for f, box in cert.complex_pairs:
        lst = tags.setdefault(f, [])
        if not lst or lst[-1] != box:
            lst.append(box)
    return tags


def _compute(M, cert, blocks, tags, P):
    with precision(P + 32):
        f_alpha = cert.alpha.factor
        alpha = refine_real(f_alpha, cert.alpha.region, P)
        a = None
        b_cols, col_tags, betas = [], [], []
        n = cert.n
        R = [[ComplexInterval(0) for _ in range(n)] for _ in range(n)]
        R_inv = [[ComplexInterval(0) for _ in range(n)] for _ in range(n)]
        for blk in blocks:
            if blk.is_alpha_factor:
                a = _eval_vec(blk.basis[0], alpha)
            root_tags = tags.get(blk.factor, [])
            roots = _match_boxes(blk.factor, root_tags, P) if root_tags else []
            for ridx, box in enumerate(roots):
                beta = box.as_interval()
                start = len(b_cols)
                for k, vec in enumerate(blk.basis):
                    b_cols.append(_eval_vec(vec, beta))
                    col_tags.append((blk.factor, ridx, blk.depths[k]))
                    betas.append(beta)
                e = blk.multiplicity
                for i in range(e):
                    for j in range(e):
                        R[start + i][start + j] = horner(blk.R[i][j], beta)
                        R_inv[start + i][start + j] = horner(blk.R_inv[i][j], beta)
        if a is None or len(b_cols) != n:
            raise InternalInconsistency("eigen-data assembly lost a column")
    return alpha, a, b_cols, R, R_inv, col_tags, betas


def eigen_data(M: IntMatrix, cert: TypeICertificate, bits: int = 128) -> EigenData:
    """Exact per-factor eigenspace bases, evaluated to width <= 2**-bits.

    Published enclosures are padded to the grid ``2**-(bits+3)``, so the
    enclosures at ``bits + 16`` are contained in those at ``bits``.
    """
    blocks = []
    for f, e in cert.factorization:
        if f.degree < 2 and f != cert.alpha.factor:
            continue
        blocks.append(exact_block(M, f, e, f == cert.alpha.factor))
    tags = _blocks_and_tags(cert)
    g = bits + 3
    target = Fraction(1, 1 << (bits + 4))
    guard = 32
    while True:
        P = bits + guard
        alpha, a, b_cols, R, R_inv, col_tags, betas = _compute(M, cert, blocks, tags, P)
        widths = [alpha.width] + [x.width for x in a] + [z.width for c in b_cols for z in c]
        widths += [z.width for r in R for z in r] + [z.width for r in R_inv for z in r]
        if max(widths) <= target:
            break
        guard *= 2
        if guard > 8 * (bits + 64):
            raise PrecisionError("eigen-data evaluation did not converge", suggested_bits=2 * bits)

    pad = lambda x: x.pad_to_grid(g)
    alpha = pad(alpha)
    a = tuple(pad(x) for x in a)
    b_cols = tuple(tuple(pad(z) for z in c) for c in b_cols)
    R = tuple(tuple(pad(z) for z in r) for r in R)
    R_inv = tuple(tuple(pad(z) for z in r) for r in R_inv)
    betas = tuple(pad(z) for z in betas)
    N = M.dim
    v = tuple((a[i],) + tuple(c[i] for c in b_cols) for i in range(N))
    u = tuple(tuple(r) for r in _realify_rows(a, b_cols))

    with precision(bits + 64):
        try:
            det_v = interval_det(u)
        except PrecisionError as exc:
            raise PrecisionError("cannot separate det(v_1..v_N) from 0", suggested_bits=2 * bits) from exc
        if det_v.contains_zero():
            raise PrecisionError("cannot separate det(v_1..v_N) from 0", suggested_bits=2 * bits)
        residual = _residual(M, b_cols, R)
    return EigenData(bits, alpha, betas, a, b_cols, R, R_inv, v, u, tuple(blocks), tuple(col_tags), det_v, residual)


def _residual(M: IntMatrix, b_cols, R):
    """Enclosure of ``M B - B R`` as rows."""
    N, n = M.dim, len(b_cols)
    out = []
    for i in range(N):
        row = []
        for j in range(n):
            acc = ComplexInterval(0)
            for k in range(N):
                m = M.rows[i][k]
                if m:
                    acc = acc + b_cols[j][k] * m
            for l in range(n):
                acc = acc - b_cols[l][i] * R[l][j]
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def realify(C) -> list:
    """Real ``2n x 2n`` matrix of ``z -> C z`` in coordinates ``(Re z_1, Im z_1, ...)``."""
    n = len(C)
    out = [[RealInterval(0)] * (2 * n) for _ in range(2 * n)]
    for j in range(n):
        for k in range(n):
            x, y = C[j][k].re, C[j][k].im
            out[2 * j][2 * k] = x
            out[2 * j][2 * k + 1] = -y
            out[2 * j + 1][2 * k] = y
            out[2 * j + 1][2 * k + 1] = x
    return out


def g_matrix(ed: EigenData) -> list:
    """Real matrix of ``(x, z) -> (alpha x, R^T z)`` on ``R x C^n``."""
    n = ed.n
    RT = [[ed.R[k][j] for k in range(n)] for j in range(n)]
    inner = realify(RT)
    N = 2 * n + 1
    G = [[RealInterval(0)] * N for _ in range(N)]
    G[0][0] = ed.alpha
    for i in range(2 * n):
        for j in range(2 * n):
            G[i + 1][j + 1] = inner[i][j]
    return G


@dataclass(frozen=True)
class ConjugationReport:
    residual_contains_zero: bool
    residual_max_width: Fraction
    exact_blocks_ok: bool
    transpose_enclosed: bool
    transpose_enclosure: tuple
    transpose_max_width: Fraction

    @property
    def ok(self) -> bool:
        return self.residual_contains_zero and self.exact_blocks_ok and self.transpose_enclosed


def _imat_mul(A, B):
    n, k, m = len(A), len(B), len(B[0])
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            acc = RealInterval(0)
            for t in range(k):
                acc = acc + A[i][t] * B[t][j]
            row.append(acc)
        out.append(row)
    return out


def verify_conjugation_relation(M: IntMatrix, ed: EigenData) -> ConjugationReport:
    """Check ``M B = B R`` (by enclosure and exactly per factor) and that the
    matrix of ``(x, z) -> (alpha x, R^T z)`` in the basis ``u_1..u_N`` encloses ``M^T``.

    Raises :class:`InternalInconsistency` if any check fails.
    """
    res_ok = all(z.contains_zero() for row in ed.residual for z in row)
    res_w = max((z.width for row in ed.residual for z in row), default=Fraction(0))
    exact_ok = all(verify_exact_block(M, blk) for blk in ed.exact_blocks)
    N = M.dim
    with precision(ed.bits + 64):
        U = [[ed.u[j][i] for j in range(N)] for i in range(N)]  # columns u_j
        GU = _imat_mul(g_matrix(ed), U)
        try:
            X = interval_solve(U, GU)
        except PrecisionError as exc:
            raise InternalInconsistency("basis u_1..u_N is not provably independent") from exc
    MT = M.T
    enclosed = all(X[i][j].contains(MT.rows[i][j]) for i in range(N) for j in range(N))
    X = tuple(tuple(r) for r in X)
    rep = ConjugationReport(res_ok, res_w, exact_ok, enclosed, X, max(x.width for r in X for x in r))
    if not rep.ok:
        raise InternalInconsistency(
            f"conjugation relation failed: residual={res_ok}, exact={exact_ok}, transpose={enclosed}")
    return rep
