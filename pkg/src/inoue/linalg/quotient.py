"""Exact arithmetic in Q[x]/(f) and linear algebra over it.

Elements are tuples of ``Fraction`` of length ``deg f`` (coefficients of
the canonical representative, lowest degree first).  When ``f`` is
irreducible the quotient is a field; a reducible modulus is detected the
first time a nonzero non-invertible element has to be inverted.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from ..errors import ZeroDivisorError
from .matrix import IntMatrix
from .poly import IntPoly, qdivmod, qmul, qstrip, qxgcd

Elem = tuple  # tuple[Fraction, ...]


class QuotientField:
    """Arithmetic in ``Q[x]/(modulus)``.

    >>> K = QuotientField(IntPoly((1, 0, 1)))      # Q(i)
    >>> i = K.gen()
    >>> K.mul(i, i) == K.from_int(-1)
    True
    """

    def __init__(self, modulus: IntPoly):
        if modulus.degree < 1:
            raise ValueError("modulus must have degree >= 1")
        self.modulus = modulus
        self.d = modulus.degree
        lc = Fraction(modulus.lc)
        self._mod = [Fraction(c) / lc for c in modulus.coeffs]

    def __repr__(self):
        return f"QuotientField({self.modulus})"

    def _reduce(self, coeffs) -> Elem:
        c = qstrip(coeffs)
        if len(c) > self.d:
            _, c = qdivmod(c, self._mod)
        c = [Fraction(x) for x in c]
        return tuple(c + [Fraction(0)] * (self.d - len(c)))

    def zero(self) -> Elem:
        return (Fraction(0),) * self.d

    def one(self) -> Elem:
        return self.from_int(1)

    def from_int(self, c) -> Elem:
        return (Fraction(c),) + (Fraction(0),) * (self.d - 1)

    def gen(self) -> Elem:
        """Class of ``x``."""
        return self._reduce([0, 1])

    def from_poly(self, coeffs: Sequence) -> Elem:
        return self._reduce(list(coeffs))

    @staticmethod
    def is_zero(a: Elem) -> bool:
        return not any(a)

    def add(self, a: Elem, b: Elem) -> Elem:
        return tuple(x + y for x, y in zip(a, b))

    def sub(self, a: Elem, b: Elem) -> Elem:
        return tuple(x - y for x, y in zip(a, b))

    def neg(self, a: Elem) -> Elem:
        return tuple(-x for x in a)

    def mul(self, a: Elem, b: Elem) -> Elem:
        return self._reduce(qmul(list(a), list(b)))

    def inv(self, a: Elem) -> Elem:
        if self.is_zero(a):
            raise ZeroDivisionError("inverse of zero in quotient field")
        g, s, _ = qxgcd(qstrip(list(a)), self._mod)
        if len(g) != 1:
            raise ZeroDivisorError(self.modulus, IntPoly.primitive(g))
        return self._reduce(s)

    def div(self, a: Elem, b: Elem) -> Elem:
        return self.mul(a, self.inv(b))

    # -- matrices over the quotient --------------------------------------

    def matrix(self, M: IntMatrix | Sequence[Sequence[int]]) -> list[list[Elem]]:
        rows = M.rows if isinstance(M, IntMatrix) else M
        return [[self.from_int(x) for x in r] for r in rows]

    def matmul(self, A, B):
        n, k, m = len(A), len(B), len(B[0])
        out = []
        for i in range(n):
            row = []
            for j in range(m):
                acc = self.zero()
                for t in range(k):
                    if not self.is_zero(A[i][t]) and not self.is_zero(B[t][j]):
                        acc = self.add(acc, self.mul(A[i][t], B[t][j]))
                row.append(acc)
            out.append(row)
        return out

    def matvec(self, A, v):
        return [row[0] for row in self.matmul(A, [[x] for x in v])]

    def shift(self, A, c: Elem):
        """``A - c*I``."""
        return [[self.sub(x, c) if i == j else x for j, x in enumerate(r)] for i, r in enumerate(A)]

    def matpow(self, A, k: int):
        n = len(A)
        out = [[self.one() if i == j else self.zero() for j in range(n)] for i in range(n)]
        for _ in range(k):
            out = self.matmul(out, A)
        return out

    def rref(self, A):
        """Reduced row echelon form; returns ``(R, pivot_columns)``."""
        R = [list(r) for r in A]
        rows = len(R)
        cols = len(R[0]) if rows else 0
        pivots = []
        r = 0
        for c in range(cols):
            piv = next((i for i in range(r, rows) if not self.is_zero(R[i][c])), None)
            if piv is None:
                continue
            R[r], R[piv] = R[piv], R[r]
            inv = self.inv(R[r][c])
            R[r] = [self.mul(x, inv) for x in R[r]]
            for i in range(rows):
                if i != r and not self.is_zero(R[i][c]):
                    f = R[i][c]
                    R[i] = [self.sub(x, self.mul(f, y)) for x, y in zip(R[i], R[r])]
            pivots.append(c)
            r += 1
            if r == rows:
                break
        return R, pivots

    def rank(self, A) -> int:
        return len(self.rref(A)[1])

    def normalize(self, v):
        """Scale so that the first nonzero coordinate is 1."""
        lead = next((x for x in v if not self.is_zero(x)), None)
        if lead is None:
            return list(v)
        inv = self.inv(lead)
        return [self.mul(x, inv) for x in v]

    def solve_square(self, A, B):
        """Solve ``A X = B`` for invertible square ``A``."""
        n = len(A)
        aug = [list(A[i]) + list(B[i]) for i in range(n)]
        R, piv = self.rref(aug)
        if piv[:n] != list(range(n)):
            raise ZeroDivisionError("singular system over quotient field")
        return [R[i][n:] for i in range(n)]


def kernel_basis_mod(p_factor: IntPoly, A) -> list[list[Elem]]:
    """Basis of the right nullspace of ``A`` over ``Q[x]/(p_factor)``.

    ``A`` is a matrix (list of rows) of quotient-field elements, or an
    ``IntMatrix``.  Each returned vector is normalized so that its first
    nonzero coordinate is 1.  Raises :class:`ZeroDivisorError` if elimination
    runs into a zero divisor, which proves ``p_factor`` reducible.
    """
    K = QuotientField(p_factor)
    if isinstance(A, IntMatrix):
        A = K.matrix(A)
    cols = len(A[0])
    R, pivots = K.rref(A)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        v = [K.zero() for _ in range(cols)]
        v[f] = K.one()
        for row, pc in enumerate(pivots):
            v[pc] = K.neg(R[row][f])
        basis.append(K.normalize(v))
    return basis
