"""Integral conjugacy of monodromies and homeomorphism of mapping tori.

Two mapping tori with monodromies ``A`` and ``B`` (no eigenvalue 1) have
isomorphic fundamental groups only if ``A`` is conjugate in ``SL(k, Z)``
to ``B`` or ``B^-1``.  Conversely either conjugacy yields an explicit
orientation preserving diffeomorphism.  Deciding conjugacy is done
partially: cheap invariants prove non-conjugacy, a bounded search of the
integer solution lattice of ``C A = B C`` finds witnesses, and anything
else is reported as unknown.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterator

from .errors import HypothesisViolation, InternalInconsistency
from .lattice import lll_reduce
from .linalg import IntMatrix, IntPoly, smith_normal_form, squarefree_part
from .spectral import check_type_I

DEFAULT_CONSTANTS = (-2, -1, 0, 1, 2)

DIAGONAL = "Diagonal"
NON_DIAGONAL = "NonDiagonal"
HAS_EIGENVALUE_ONE = "HasEigenvalueOne"


def semidirect_type(A: IntMatrix) -> str:
    """Type of ``Z x|_A Z^k``: eigenvalue 1, diagonalizable, or not."""
    chi = A.char_poly()
    if chi(1) == 0:
        return HAS_EIGENVALUE_ONE
    return DIAGONAL if A.eval_poly(squarefree_part(chi)).is_zero() else NON_DIAGONAL


# ---------------------------------------------------------------------------
# fingerprints
# ---------------------------------------------------------------------------

FINGERPRINT_ORDER = ("char_poly", "diagonal_type", "power_traces", "snf_list", "snf_powers")


def _component(A: IntMatrix, name: str, constants):
    if name == "char_poly":
        return A.char_poly()
    if name == "diagonal_type":
        return A.eval_poly(squarefree_part(A.char_poly())).is_zero()
    if name == "power_traces":
        out, P = [], A
        for _ in range(A.dim):
            out.append(P.trace())
            P = P @ A
        return tuple(out)
    if name == "snf_list":
        return tuple(smith_normal_form(A.sub_scalar(c)).diagonal for c in constants)
    if name == "snf_powers":
        E = A.sub_scalar(1)
        return (smith_normal_form(E @ E).diagonal, smith_normal_form(E @ E @ E).diagonal)
    raise KeyError(name)


@dataclass(frozen=True)
class ConjugacyFingerprint:
    """Invariants of ``A`` under conjugation by ``GL(k, Z)``."""

    char_poly: IntPoly
    diagonal_type: bool
    power_traces: tuple
    snf_list: tuple
    snf_powers: tuple
    constants: tuple = DEFAULT_CONSTANTS

    def first_difference(self, other: "ConjugacyFingerprint"):
        for name in FINGERPRINT_ORDER:
            a, b = getattr(self, name), getattr(other, name)
            if a != b:
                return name, a, b
        return None


def fingerprint(A: IntMatrix, constants=DEFAULT_CONSTANTS) -> ConjugacyFingerprint:
    constants = tuple(constants)
    vals = {name: _component(A, name, constants) for name in FINGERPRINT_ORDER}
    return ConjugacyFingerprint(constants=constants, **vals)


def separating_invariant(A: IntMatrix, B: IntMatrix, constants=DEFAULT_CONSTANTS):
    """First fingerprint component on which ``A`` and ``B`` differ, computed lazily."""
    for name in FINGERPRINT_ORDER:
        a, b = _component(A, name, constants), _component(B, name, constants)
        if a != b:
            return name, a, b
    return None


# ---------------------------------------------------------------------------
# verdicts
# ---------------------------------------------------------------------------

CONJUGATE_TO = "ConjugateTo"
CONJUGATE_TO_INVERSE = "ConjugateToInverse"
DISTINCT = "Distinct"
UNKNOWN = "Unknown"


@dataclass(frozen=True)
class ConjugacyVerdict:
    kind: str
    witness: IntMatrix | None = None
    invariant: str | None = None
    values: tuple | None = None
    steps: int = 0
    sign_fixes: int = 0
    details: dict = field(default_factory=dict)

    @property
    def positive(self) -> bool:
        return self.kind in (CONJUGATE_TO, CONJUGATE_TO_INVERSE)


def _check_hypotheses(*mats: IntMatrix):
    for name, X in zip("AB", mats):
        if X.det() != 1:
            raise HypothesisViolation(f"det {name} = {X.det()}, need 1")
        if X.char_poly()(1) == 0:
            raise HypothesisViolation(f"1 is an eigenvalue of {name}")
    if mats[0].dim != mats[1].dim:
        raise HypothesisViolation("matrices have different sizes")


def commutation_kernel(A: IntMatrix, B: IntMatrix) -> list[list[int]]:
    """LLL-reduced Z-basis of ``{C : C A = B C}`` with ``C`` flattened row-major."""
    k = A.dim
    rows = []
    # entry (i, j) of C A - B C is sum_t C[i][t] A[t][j] - B[i][t] C[t][j]
    for i in range(k):
        for j in range(k):
            r = [0] * (k * k)
            for t in range(k):
                r[i * k + t] += A.rows[t][j]
                r[t * k + j] -= B.rows[i][t]
            rows.append(r)
    res = smith_normal_form(rows)
    basis = [list(v) for v in res.kernel_basis()]
    if not basis:
        return []
    return lll_reduce(basis)


def _shell(dim: int, r: int) -> Iterator[tuple]:
    """Integer vectors of max-norm exactly ``r``, in lexicographic order."""
    if r == 0:
        yield (0,) * dim
        return
    for v in itertools.product(range(-r, r + 1), repeat=dim):
        if max(abs(x) for x in v) == r:
            yield v


def _candidates(basis) -> Iterator[IntMatrix]:
    k = len(basis)
    size = len(basis[0])
    n = int(round(size ** 0.5))
    r = 1
    while True:
        for coeffs in _shell(k, r):
            flat = [sum(c * b[t] for c, b in zip(coeffs, basis)) for t in range(size)]
            yield IntMatrix(tuple(tuple(flat[i * n:(i + 1) * n]) for i in range(n)))
        r += 1


@dataclass
class _Search:
    target: IntMatrix
    kind: str
    it: Iterator[IntMatrix] | None


def decide_conjugacy(A: IntMatrix, B: IntMatrix, budget: int = 10 ** 6,
                     constants=DEFAULT_CONSTANTS) -> ConjugacyVerdict:
    """Three-valued decision of ``A ~ B`` or ``A ~ B^-1`` in ``SL(k, Z)``.

    A positive verdict carries ``C`` with ``det C = 1`` and ``C A C^-1`` equal
    to the target, verified exactly.  ``budget`` bounds the number of
    candidate matrices examined.
    """
    _check_hypotheses(A, B)
    Binv = B.inverse()
    sep_b = separating_invariant(A, B, constants)
    sep_i = separating_invariant(A, Binv, constants)
    if sep_b is not None and sep_i is not None:
        name, a, b = sep_b
        return ConjugacyVerdict(DISTINCT, invariant=name, values=(a, b),
                                details={"against_inverse": {"invariant": sep_i[0], "values": (sep_i[1], sep_i[2])}})
    searches = []
    for target, kind, sep in ((B, CONJUGATE_TO, sep_b), (Binv, CONJUGATE_TO_INVERSE, sep_i)):
        if sep is not None:
            continue
        basis = commutation_kernel(A, target)
        searches.append(_Search(target, kind, _candidates(basis) if basis else None))
    searches = [s for s in searches if s.it is not None]
    odd = A.dim % 2 == 1
    steps = 0
    sign_fixes = 0
    while steps < budget and searches:
        for s in searches:
            C = next(s.it)
            steps += 1
            d = C.det()
            if d == -1 and odd:
                C = -C
                sign_fixes += 1
                d = C.det()
                if d != 1 or C @ A != s.target @ C:
                    raise InternalInconsistency("negated witness failed verification")
            if d == 1 and C @ A == s.target @ C:
                return ConjugacyVerdict(s.kind, witness=C, steps=steps, sign_fixes=sign_fixes)
            if steps >= budget:
                break
    return ConjugacyVerdict(UNKNOWN, steps=steps, sign_fixes=sign_fixes, details={"budget": budget})


def verify_witness(A: IntMatrix, target: IntMatrix, C: IntMatrix) -> bool:
    return C.det() == 1 and C @ A == target @ C


# ---------------------------------------------------------------------------
# homeomorphism of mapping tori
# ---------------------------------------------------------------------------

HOMEOMORPHIC = "Homeomorphic"
NOT_HOMEOMORPHIC = "NotHomeomorphic"


@dataclass(frozen=True)
class HomeoVerdict:
    status: str
    conjugacy: ConjugacyVerdict
    maps: tuple = ()
    reason: str = ""


def homeo_verdict(A: IntMatrix, B: IntMatrix, budget: int = 10 ** 6,
                  constants=DEFAULT_CONSTANTS) -> HomeoVerdict:
    """Compare the mapping tori of ``A`` and ``B`` (odd size, det 1, no eigenvalue 1)."""
    if A.dim % 2 == 0:
        raise HypothesisViolation("classification needs odd dimension")
    v = decide_conjugacy(A, B, budget, constants)
    if v.kind == CONJUGATE_TO:
        return HomeoVerdict(HOMEOMORPHIC, v, (("phi", "(x, t) -> (C x, t)"),),
                            "C A C^-1 = B, so (x, t) -> (C x, t) descends to the mapping tori")
    if v.kind == CONJUGATE_TO_INVERSE:
        maps = (("psi", "(x, t) -> (-x, t)"), ("phi", "(x, t) -> (C x, t)"),
                ("chi", "(x, t) -> (x, 1 - t)"), ("composition", "chi o phi o psi"))
        return HomeoVerdict(HOMEOMORPHIC, v, maps,
                            "C A C^-1 = B^-1; reversing the circle direction and the fiber orientation "
                            "gives an orientation preserving diffeomorphism")
    if v.kind == DISTINCT:
        return HomeoVerdict(NOT_HOMEOMORPHIC, v, (),
                            f"{v.invariant} separates A from both B and B^-1, so the fundamental groups differ")
    return HomeoVerdict(UNKNOWN, v, (), f"no witness within budget {budget}")


@dataclass(frozen=True)
class OTExclusion:
    status: str
    semidirect_type: str
    reasoning: tuple


def ot_exclusion(M: IntMatrix) -> OTExclusion:
    """Whether ``T_M`` can be homeomorphic to an OT manifold with one real place."""
    check_type_I(M)
    st = semidirect_type(M.T)
    if st == NON_DIAGONAL:
        reasoning = (
            "pi_1(T_M) = Z x Z^N with t.v = M^T v, and M^T is not diagonalizable",
            "a semidirect product Z x_A Z^k of diagonal type is not isomorphic to one of non-diagonal type",
            "pi_1 of an OT manifold with s = 1 is a semidirect product of diagonal type",
            "b1(pi_1) = s = 1 pins the Z factor, so no isomorphism of fundamental groups exists",
        )
        return OTExclusion("EXCLUDED", st, reasoning)
    return OTExclusion("POSSIBLE", st, ("M^T is diagonalizable; the fundamental group gives no obstruction",))

