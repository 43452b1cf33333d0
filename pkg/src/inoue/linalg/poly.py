"""Dense univariate polynomials with integer or rational coefficients.

Coefficient sequences are stored lowest degree first.  ``IntPoly`` is the
public immutable type; the ``q*`` helpers operate on plain lists of
``Fraction``/``int`` and are used internally wherever intermediate results
leave the integers (remainder sequences, gcds).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Iterable, Sequence, Union

from .guard import check_bits

Number = Union[int, Fraction]


# ---------------------------------------------------------------------------
# list-level helpers (rational coefficients)
# ---------------------------------------------------------------------------

def qstrip(a: Sequence[Number]) -> list:
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def qadd(a, b):
    n = max(len(a), len(b))
    return qstrip([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def qsub(a, b):
    n = max(len(a), len(b))
    return qstrip([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)])


def qscale(a, c):
    return qstrip([c * x for x in a])


def qmul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return qstrip(out)


def qdivmod(a, b):
    """Quotient and remainder over Q.  ``b`` must be nonzero."""
    b = qstrip(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = [Fraction(x) for x in qstrip(a)]
    db = len(b) - 1
    lc = Fraction(b[-1])
    if len(r) - 1 < db:
        return [], qstrip(r)
    q = [Fraction(0)] * (len(r) - db)
    for k in range(len(r) - 1 - db, -1, -1):
        c = r[k + db] / lc
        q[k] = c
        if c:
            for j in range(db + 1):
                r[k + j] -= c * b[j]
    return qstrip(q), qstrip(r[:db])


def qderiv(a):
    return qstrip([i * a[i] for i in range(1, len(a))])


def qeval(a, x):
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def qmonic(a):
    a = qstrip(a)
    if not a:
        return []
    lc = Fraction(a[-1])
    return [Fraction(x) / lc for x in a]


def qgcd(a, b):
    """Monic gcd over Q (zero if both inputs are zero)."""
    a, b = qstrip(a), qstrip(b)
    while b:
        _, r = qdivmod(a, b)
        a, b = b, r
    return qmonic(a)


def qxgcd(a, b):
    """Return ``(g, s, t)`` with ``s*a + t*b = g`` and ``g`` monic."""
    r0, r1 = qstrip(a), qstrip(b)
    s0, s1 = [Fraction(1)], []
    t0, t1 = [], [Fraction(1)]
    while r1:
        q, r = qdivmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, qsub(s0, qmul(q, s1))
        t0, t1 = t1, qsub(t0, qmul(q, t1))
    if not r0:
        return [], [], []
    lc = Fraction(r0[-1])
    return [x / lc for x in r0], [x / lc for x in s0], [x / lc for x in t0]


def primitive_coeffs(a: Sequence[Number]) -> tuple[int, ...]:
    """Scale a rational coefficient list to a primitive integer list with lc > 0."""
    a = qstrip(a)
    if not a:
        return ()
    fr = [Fraction(x) for x in a]
    den = reduce(lcm, (x.denominator for x in fr), 1)
    ints = [int(x * den) for x in fr]
    g = reduce(gcd, ints, 0)
    if ints[-1] < 0:
        g = -g
    return tuple(x // g for x in ints)


# ---------------------------------------------------------------------------
# IntPoly
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class IntPoly:
    """Polynomial with arbitrary-precision integer coefficients.

    ``coeffs[i]`` is the coefficient of ``x**i``; trailing zeros are stripped
    on construction so the zero polynomial has ``coeffs == ()``.
    """

    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = tuple(int(x) for x in self.coeffs)
        while c and c[-1] == 0:
            c = c[:-1]
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int]) -> "IntPoly":
        return cls(tuple(coeffs))

    @classmethod
    def from_roots(cls, roots: Iterable[int]) -> "IntPoly":
        p = cls((1,))
        for r in roots:
            p = p * cls((-r, 1))
        return p

    @classmethod
    def x(cls) -> "IntPoly":
        return cls((0, 1))

    @classmethod
    def primitive(cls, coeffs: Sequence[Number]) -> "IntPoly":
        return cls(primitive_coeffs(coeffs))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.lc == 1

    def content(self) -> int:
        return reduce(gcd, self.coeffs, 0)

    def __call__(self, x):
        return qeval(self.coeffs, x)

    def __add__(self, other: "IntPoly") -> "IntPoly":
        return IntPoly(tuple(qadd(self.coeffs, other.coeffs)))

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return IntPoly(tuple(qsub(self.coeffs, other.coeffs)))

    def __neg__(self) -> "IntPoly":
        return IntPoly(tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly(tuple(other * c for c in self.coeffs))
        out = IntPoly(tuple(qmul(self.coeffs, other.coeffs)))
        check_bits(*out.coeffs)
        return out

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "IntPoly":
        out = IntPoly((1,))
        for _ in range(k):
            out = out * self
        return out

    def derivative(self) -> "IntPoly":
        return IntPoly(tuple(qderiv(self.coeffs)))

    def exact_div(self, other: "IntPoly") -> "IntPoly":
        """Quotient when ``other`` divides ``self`` in Z[x]; ValueError otherwise."""
        q, r = qdivmod(self.coeffs, other.coeffs)
        if r or any(Fraction(c).denominator != 1 for c in q):
            raise ValueError(f"{other} does not divide {self} over Z")
        return IntPoly(tuple(int(c) for c in q))

    def divides(self, other: "IntPoly") -> bool:
        """True if ``self`` divides ``other`` over Q."""
        _, r = qdivmod(other.coeffs, self.coeffs)
        return not r

    def primitive_part(self) -> "IntPoly":
        return IntPoly.primitive(self.coeffs)

    def reversed(self) -> "IntPoly":
        """``x**deg * p(1/x)``."""
        return IntPoly(tuple(reversed(self.coeffs)))

    def compose_neg(self) -> "IntPoly":
        """``p(-x)``."""
        return IntPoly(tuple(c if i % 2 == 0 else -c for i, c in enumerate(self.coeffs)))

    def sort_key(self) -> tuple:
        """Lexicographic order on (degree, coefficient list)."""
        return (self.degree, self.coeffs)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if i == 0:
                body = str(a)
            else:
                mono = "x" if i == 1 else f"x^{i}"
                body = mono if a == 1 else f"{a}*{mono}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        s = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            s += f" {sign} {body}"
        return s


def poly_gcd(p: IntPoly, q: IntPoly) -> IntPoly:
    """Primitive gcd with positive leading coefficient."""
    return IntPoly.primitive(qgcd(p.coeffs, q.coeffs))


def squarefree_part(p: IntPoly) -> IntPoly:
    """``p / gcd(p, p')`` made primitive with positive leading coefficient."""
    if p.is_zero():
        raise ValueError("squarefree part of the zero polynomial is undefined")
    if p.degree == 0:
        return IntPoly((1,))
    g = qgcd(p.coeffs, qderiv(p.coeffs))
    q, r = qdivmod(p.coeffs, g)
    assert not r
    return IntPoly.primitive(q)


def squarefree_decomposition(p: IntPoly) -> list[tuple[IntPoly, int]]:
    """Yun's algorithm: ``p = c * prod(q_i ** i)`` with pairwise coprime squarefree ``q_i``.

    Returns the nonconstant ``(q_i, i)`` pairs, each ``q_i`` primitive with
    positive leading coefficient.
    """
    if p.is_zero():
        raise ValueError("zero polynomial has no squarefree decomposition")
    a = [Fraction(c) for c in p.coeffs]
    if len(a) <= 1:
        return []
    da = qderiv(a)
    g = qgcd(a, da)
    b, _ = qdivmod(a, g)
    c, _ = qdivmod(da, g)
    d = qsub(c, qderiv(b))
    out = []
    i = 1
    while len(b) > 1:
        h = qgcd(b, d)
        if len(h) > 1:
            out.append((IntPoly.primitive(h), i))
        b, _ = qdivmod(b, h)
        c, _ = qdivmod(d, h)
        d = qsub(c, qderiv(b))
        i += 1
    return out


def is_squarefree(p: IntPoly) -> bool:
    return len(qgcd(p.coeffs, qderiv(p.coeffs))) <= 1
