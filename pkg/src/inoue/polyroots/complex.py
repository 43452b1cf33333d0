"""Certified enclosures of all complex roots of an integer polynomial.

Numeric approximations come from mpmath's simultaneous iteration and are
only a warm start.  Certification is exact: for a squarefree ``q`` of
degree ``d`` and any point ``z`` there is a root of ``q`` within
``d * |q(z) / q'(z)|`` of ``z``.  Disks built this way that are pairwise
disjoint and lie in the open upper half-plane each hold at least one
nonreal root; since Sturm counting fixes the number of upper-half roots at
``(d - #real) / 2`` they hold exactly one each.  Real roots are isolated by
Sturm bisection and lower-half roots are obtained by mirroring.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

import mpmath

from ..errors import PrecisionError
from ..linalg.poly import IntPoly, squarefree_decomposition
from .intervals import ComplexInterval, RealInterval
from .real import isolate_real_roots, refine_real


@dataclass(frozen=True)
class ComplexBox:
    """Axis-parallel rational box holding exactly one distinct root."""

    re_lo: Fraction
    re_hi: Fraction
    im_lo: Fraction
    im_hi: Fraction
    multiplicity: int = 1

    def as_interval(self) -> ComplexInterval:
        return ComplexInterval(RealInterval(self.re_lo, self.re_hi), RealInterval(self.im_lo, self.im_hi))

    def conjugate(self) -> "ComplexBox":
        return ComplexBox(self.re_lo, self.re_hi, -self.im_hi, -self.im_lo, self.multiplicity)

    def overlaps(self, other: "ComplexBox") -> bool:
        return (self.re_lo <= other.re_hi and other.re_lo <= self.re_hi
                and self.im_lo <= other.im_hi and other.im_lo <= self.im_hi)

    def contains(self, re, im) -> bool:
        return self.re_lo <= re <= self.re_hi and self.im_lo <= im <= self.im_hi

    @property
    def is_upper(self) -> bool:
        return self.im_lo > 0

    @property
    def is_real(self) -> bool:
        return self.im_lo <= 0 <= self.im_hi

    @property
    def width(self) -> Fraction:
        return max(self.re_hi - self.re_lo, self.im_hi - self.im_lo)

    def sort_key(self):
        return (self.re_lo, self.im_lo)


# ---------------------------------------------------------------------------
# exact Gaussian-integer evaluation
# ---------------------------------------------------------------------------

def _gauss_eval_scaled(coeffs, X: int, Y: int, g: int) -> tuple[int, int]:
    """``q((X + iY) / 2^g) * 2^(g*deg)`` as a Gaussian integer."""
    re, im = 0, 0
    scale = 1
    step = 1 << g
    for c in reversed(coeffs):
        # (re + i im) * (X + iY) + c * 2^(g*k)
        re, im = re * X - im * Y + c * scale, re * Y + im * X
        scale *= step
    return re, im


def _disk_radius_sq(coeffs, X: int, Y: int, g: int) -> Fraction | None:
    """Exact ``(d * |q(z)/q'(z)|)^2`` at ``z = (X + iY)/2^g``; None if ``q'(z) = 0``."""
    d = len(coeffs) - 1
    dcoeffs = [i * coeffs[i] for i in range(1, len(coeffs))]
    qr, qi = _gauss_eval_scaled(coeffs, X, Y, g)
    dr, di = _gauss_eval_scaled(dcoeffs, X, Y, g)
    den = (dr * dr + di * di) << (2 * g)
    if den == 0:
        return None
    return Fraction(d * d * (qr * qr + qi * qi), den)


def _sqrt_up(q: Fraction, G: int) -> Fraction:
    """Dyadic upper bound on sqrt(q) on the grid 2**-G."""
    scaled = q * (1 << (2 * G))
    n = -(-scaled.numerator // scaled.denominator)
    return Fraction(isqrt(n) + 1, 1 << G)


def _to_dyadic(ctx, x, g: int) -> int:
    return int(ctx.nint(x * ctx.mpf(2) ** g))


def _upper_approximations(q: IntPoly, k: int, prec: int, attempt: int):
    ctx = mpmath.MPContext()
    ctx.prec = prec
    coeffs = [ctx.mpf(c) for c in reversed(q.coeffs)]
    try:
        roots = ctx.polyroots(coeffs, maxsteps=60 + 40 * attempt, extraprec=prec // 2 + 20 * attempt)
    except ctx.NoConvergence:
        return None, ctx
    roots = sorted((ctx.mpc(r) for r in roots), key=lambda z: -z.imag)
    ups = roots[:k]
    if any(z.imag <= 0 for z in ups):
        return None, ctx
    return ups, ctx


def _certify_upper(q: IntPoly, k: int, bits: int) -> list[ComplexBox]:
    d = q.degree
    coeffs = q.coeffs
    size = max(abs(c) for c in coeffs).bit_length()
    last_bits = bits
    for attempt in range(6):
        g = bits + 12 + 2 * d + size + attempt * (bits // 2 + 32)
        ups, ctx = _upper_approximations(q, k, g + 24, attempt)
        if ups is None:
            continue
        disks = []
        ok = True
        for z in ups:
            X = _to_dyadic(ctx, z.real, g)
            Y = _to_dyadic(ctx, z.imag, g)
            r2 = _disk_radius_sq(coeffs, X, Y, g)
            if r2 is None:
                ok = False
                break
            r = _sqrt_up(r2, g + 8)
            cx, cy = Fraction(X, 1 << g), Fraction(Y, 1 << g)
            if not r < cy or 2 * r > Fraction(1, 1 << bits):
                ok = False
                break
            disks.append((cx, cy, r))
        if not ok:
            last_bits = g
            continue
        for i in range(len(disks)):
            for j in range(i + 1, len(disks)):
                xi, yi, ri = disks[i]
                xj, yj, rj = disks[j]
                if (xi - xj) ** 2 + (yi - yj) ** 2 <= (ri + rj) ** 2:
                    ok = False
        boxes = [ComplexBox(cx - r, cx + r, cy - r, cy + r) for cx, cy, r in disks]
        if ok and all(not a.overlaps(b) for i, a in enumerate(boxes) for b in boxes[i + 1:]):
            return boxes
        last_bits = g
    raise PrecisionError(f"could not certify the nonreal roots of {q}", suggested_bits=2 * last_bits)


def _enclose_squarefree(q: IntPoly, bits: int, mult: int) -> list[ComplexBox]:
    boxes = []
    isos = isolate_real_roots(q)
    for iso in isos:
        I = refine_real(q, iso, bits + 1)
        h = I.width / 2
        boxes.append(ComplexBox(I.lo, I.hi, -h, h, mult))
    k = (q.degree - len(isos)) // 2
    if k:
        for b in _certify_upper(q, k, bits):
            up = ComplexBox(b.re_lo, b.re_hi, b.im_lo, b.im_hi, mult)
            boxes.append(up)
            boxes.append(up.conjugate())
    return boxes


def enclose_complex_roots(p: IntPoly, bits: int) -> list[ComplexBox]:
    """Certified, pairwise disjoint boxes of width <= 2**-bits around all roots of ``p``.

    One box per distinct root, carrying its multiplicity; real roots get
    boxes straddling the real axis, and every upper-half box appears
    together with its exact mirror image.  Sorted by ``(re_lo, im_lo)``.
    """
    if p.is_zero():
        raise ValueError("zero polynomial has no root enclosure")
    parts = squarefree_decomposition(p)
    b = bits
    for _ in range(4):
        boxes = []
        for part, mult in parts:
            boxes.extend(_enclose_squarefree(part, b, mult))
        if all(not x.overlaps(y) for i, x in enumerate(boxes) for y in boxes[i + 1:]):
            boxes.sort(key=ComplexBox.sort_key)
            return boxes
        b = 2 * b + 16
    raise PrecisionError(f"root boxes of {p} still overlap", suggested_bits=b)


def upper_roots(p: IntPoly, bits: int) -> list[ComplexBox]:
    """Boxes for the roots with positive imaginary part, in lex order."""
    return [b for b in enclose_complex_roots(p, bits) if b.is_upper]
