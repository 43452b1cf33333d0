"""Sturm-sequence counting, isolation and refinement of real roots."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from ..errors import RootOnEndpoint
from ..linalg.poly import IntPoly, primitive_coeffs, qderiv, qdivmod, squarefree_decomposition, squarefree_part
from .intervals import RealInterval, grid_ceil, grid_floor


@dataclass(frozen=True)
class RealIsolatingInterval:
    """Open interval ``(lo, hi)`` holding exactly one distinct real root.

    ``multiplicity`` is the multiplicity of that root in the polynomial the
    interval was computed for.  Endpoints are never roots.
    """

    lo: Fraction
    hi: Fraction
    multiplicity: int = 1

    def __post_init__(self):
        if not self.lo < self.hi:
            raise ValueError("isolating interval needs lo < hi")

    def as_interval(self) -> RealInterval:
        return RealInterval(self.lo, self.hi)


# ---------------------------------------------------------------------------
# exact evaluation helpers
# ---------------------------------------------------------------------------

def _sign(x) -> int:
    return (x > 0) - (x < 0)


def eval_sign(coeffs: tuple[int, ...], x: Fraction) -> int:
    """Sign of an integer polynomial at a rational point, in integer arithmetic."""
    x = Fraction(x)
    n, d = x.numerator, x.denominator
    acc = 0
    dp = 1
    # p(n/d) * d^deg = sum c_i n^i d^(deg-i)
    for c in reversed(coeffs):
        acc = acc * n + c * dp
        dp *= d
    return _sign(acc)


@lru_cache(maxsize=512)
def sturm_chain(coeffs: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    """Sturm sequence ``p, p', -rem(p, p'), ...`` with each term scaled by a positive constant."""
    p0 = list(coeffs)
    p1 = list(primitive_coeffs(qderiv(p0))) if len(p0) > 1 else []
    chain = [tuple(p0)]
    if not p1:
        return tuple(chain)
    # keep the derivative's sign: primitive_coeffs forces lc > 0 which matches p' only if lc(p) > 0
    if _sign(p0[-1]) < 0:
        p1 = [-c for c in p1]
    chain.append(tuple(p1))
    a, b = p0, p1
    while True:
        _, r = qdivmod(a, b)
        if not r:
            break
        r = [-x for x in r]
        prim = list(primitive_coeffs(r))
        if _sign(prim[-1]) != _sign(r[-1]):
            prim = [-c for c in prim]
        chain.append(tuple(prim))
        a, b = b, prim
    return tuple(chain)


def _variations(chain, x: Fraction) -> int:
    signs = [s for s in (eval_sign(p, x) for p in chain) if s]
    return sum(1 for s, t in zip(signs, signs[1:]) if s != t)


def _variations_at_inf(chain, positive: bool) -> int:
    signs = []
    for p in chain:
        s = _sign(p[-1])
        if not positive and (len(p) - 1) % 2:
            s = -s
        signs.append(s)
    return sum(1 for s, t in zip(signs, signs[1:]) if s != t)


def root_bound(p: IntPoly) -> Fraction:
    """Power of two strictly larger than every root's modulus (Cauchy bound)."""
    lc = abs(p.lc)
    m = max((abs(c) for c in p.coeffs[:-1]), default=0)
    b = 1 + Fraction(m, lc)
    k = 0
    while (1 << k) <= b:
        k += 1
    return Fraction(1 << k)


def _sqf_coeffs(p: IntPoly) -> tuple[int, ...]:
    return squarefree_part(p).coeffs


def sturm_count(p: IntPoly, lo, hi) -> int:
    """Number of distinct real roots of ``p`` in the open interval ``(lo, hi)``.

    Works on the squarefree part, so repeated roots count once.  Raises
    :class:`RootOnEndpoint` if ``lo`` or ``hi`` is a root.
    """
    lo, hi = Fraction(lo), Fraction(hi)
    if not lo < hi:
        raise ValueError("sturm_count needs lo < hi")
    if p.is_zero():
        raise ValueError("sturm_count of the zero polynomial")
    q = _sqf_coeffs(p)
    for x in (lo, hi):
        if eval_sign(q, x) == 0:
            raise RootOnEndpoint(f"{x} is a root of {p}; perturb the endpoint")
    chain = sturm_chain(q)
    return _variations(chain, lo) - _variations(chain, hi)


def count_real_roots(p: IntPoly) -> int:
    """Number of distinct real roots on the whole line."""
    q = _sqf_coeffs(p)
    if len(q) <= 1:
        return 0
    chain = sturm_chain(q)
    return _variations_at_inf(chain, False) - _variations_at_inf(chain, True)


def simplest_dyadic(a: Fraction, b: Fraction) -> Fraction:
    """Dyadic rational with the smallest denominator in ``[a, b]``; ties go to the smallest."""
    if a > b:
        raise ValueError("empty range")
    k = 0
    # coarse grids first for wide ranges
    while True:
        c = grid_ceil(a, k)
        if c <= b:
            break
        k += 1
    if k == 0:
        # prefer the integer of least magnitude
        lo_int, hi_int = c, grid_floor(b, 0)
        if lo_int <= 0 <= hi_int:
            return Fraction(0)
        return lo_int if lo_int > 0 else hi_int
    return c


def _split_point(lo: Fraction, hi: Fraction) -> Fraction:
    w = hi - lo
    return simplest_dyadic(lo + w / 4, hi - w / 4)


def _isolate_squarefree(q: tuple[int, ...]) -> list[tuple[Fraction, Fraction]]:
    """Isolating intervals for the real roots of a squarefree integer polynomial."""
    if len(q) <= 1:
        return []
    chain = sturm_chain(q)
    B = root_bound(IntPoly(q))
    out: list[tuple[Fraction, Fraction]] = []
    stack = [(-B, B, _variations(chain, -B), _variations(chain, B))]
    while stack:
        lo, hi, vlo, vhi = stack.pop()
        count = vlo - vhi
        if count == 0:
            continue
        if count == 1:
            out.append((lo, hi))
            continue
        m = _split_point(lo, hi)
        if eval_sign(q, m) == 0:
            # carve a small root-free-boundary interval around the exact root m
            delta = (hi - lo) / 8
            while True:
                a, b = m - delta, m + delta
                if eval_sign(q, a) and eval_sign(q, b) and _variations(chain, a) - _variations(chain, b) == 1:
                    break
                delta /= 2
            out.append((a, b))
            va, vb = _variations(chain, a), _variations(chain, b)
            stack.append((lo, a, vlo, va))
            stack.append((b, hi, vb, vhi))
            continue
        vm = _variations(chain, m)
        stack.append((m, hi, vm, vhi))
        stack.append((lo, m, vlo, vm))
    out.sort()
    return out


def isolate_real_roots(p: IntPoly) -> list[RealIsolatingInterval]:
    """Disjoint isolating intervals for every distinct real root of ``p``.

    Multiplicities come from the squarefree decomposition.
    """
    if p.is_zero():
        raise ValueError("cannot isolate roots of the zero polynomial")
    parts = squarefree_decomposition(p)
    q = _sqf_coeffs(p)
    result = []
    for lo, hi in _isolate_squarefree(q):
        mult = None
        for part, k in parts:
            if part.degree >= 1:
                chain = sturm_chain(part.coeffs)
                if _variations(chain, lo) - _variations(chain, hi) == 1:
                    mult = k
                    break
        assert mult is not None
        result.append(RealIsolatingInterval(lo, hi, mult))
    return result


def refine_real(p: IntPoly, iso: RealIsolatingInterval, bits: int) -> RealInterval:
    """Shrink ``iso`` to width at most ``2**-bits`` by sign-checked bisection.

    Split points are the simplest dyadics in the middle half of the current
    interval, so an exactly representable root is returned as a point.
    Refinement at higher ``bits`` continues the same nested sequence, hence
    the result is contained in the result at lower ``bits``.
    """
    q = _sqf_coeffs(p)
    lo, hi = Fraction(iso.lo), Fraction(iso.hi)
    slo = eval_sign(q, lo)
    shi = eval_sign(q, hi)
    if slo == 0 or shi == 0 or slo == shi:
        raise ValueError("interval does not isolate a simple sign change of the squarefree part")
    target = Fraction(1, 1 << bits) if bits >= 0 else Fraction(1 << -bits)
    while hi - lo > target:
        m = _split_point(lo, hi)
        s = eval_sign(q, m)
        if s == 0:
            return RealInterval(m, m)
        if s == slo:
            lo = m
        else:
            hi = m
    return RealInterval(lo, hi)


def real_roots(p: IntPoly, bits: int) -> list[tuple[RealInterval, int]]:
    """All distinct real roots as ``(enclosure, multiplicity)``, enclosures of width <= 2**-bits."""
    return [(refine_real(p, iso, bits), iso.multiplicity) for iso in isolate_real_roots(p)]
