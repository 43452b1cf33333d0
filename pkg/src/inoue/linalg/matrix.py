"""Square integer matrices and division-free determinant / characteristic polynomial."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .guard import check_bits
from .poly import IntPoly


@dataclass(frozen=True)
class IntMatrix:
    """Dense square matrix of Python integers, stored row-major."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        n = len(rows)
        if n == 0:
            raise ValueError("matrix dimension must be at least 1")
        for i, r in enumerate(rows):
            if len(r) != n:
                raise ValueError(f"row {i} has {len(r)} entries, expected {n} (matrix must be square)")
        object.__setattr__(self, "rows", rows)

    # -- constructors -----------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "IntMatrix":
        return cls(tuple(tuple(r) for r in rows))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @classmethod
    def zeros(cls, n: int) -> "IntMatrix":
        return cls(tuple((0,) * n for _ in range(n)))

    @classmethod
    def diag(cls, *entries: int) -> "IntMatrix":
        n = len(entries)
        return cls(tuple(tuple(entries[i] if i == j else 0 for j in range(n)) for i in range(n)))

    @classmethod
    def block_diag(cls, *blocks: "IntMatrix") -> "IntMatrix":
        n = sum(b.dim for b in blocks)
        rows = [[0] * n for _ in range(n)]
        off = 0
        for b in blocks:
            for i in range(b.dim):
                for j in range(b.dim):
                    rows[off + i][off + j] = b.rows[i][j]
            off += b.dim
        return cls.from_rows(rows)

    @classmethod
    def companion(cls, p: IntPoly) -> "IntMatrix":
        """Companion matrix with ones on the subdiagonal and coefficients in the last column.

        For monic ``p = x^d + c_{d-1} x^{d-1} + ... + c_0`` this is the matrix
        with ``C e_i = e_{i+1}`` (i < d) and ``C e_d = -(c_0 e_1 + ... + c_{d-1} e_d)``,
        so that ``det(xI - C) = p``.
        """
        if not p.is_monic():
            raise ValueError(f"companion matrix needs a monic polynomial, got {p}")
        d = p.degree
        if d < 1:
            raise ValueError("companion matrix needs degree >= 1")
        rows = [[0] * d for _ in range(d)]
        for i in range(1, d):
            rows[i][i - 1] = 1
        for i in range(d):
            rows[i][d - 1] = -p.coeffs[i]
        return cls.from_rows(rows)

    # -- basic structure --------------------------------------------------

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def entries(self) -> tuple[int, ...]:
        return tuple(x for r in self.rows for x in r)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.rows[i][j]

    def to_list(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    @property
    def T(self) -> "IntMatrix":
        return IntMatrix(tuple(zip(*self.rows)))

    def transpose(self) -> "IntMatrix":
        return self.T

    def trace(self) -> int:
        return sum(self.rows[i][i] for i in range(self.dim))

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.rows for x in r)

    def is_symmetric(self) -> bool:
        return self == self.T

    def max_abs(self) -> int:
        return max(abs(x) for r in self.rows for x in r)

    # -- arithmetic -------------------------------------------------------

    def _check_same(self, other: "IntMatrix"):
        if not isinstance(other, IntMatrix) or other.dim != self.dim:
            raise ValueError("dimension mismatch")

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        self._check_same(other)
        return IntMatrix(tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)))

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        self._check_same(other)
        return IntMatrix(tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)))

    def __neg__(self) -> "IntMatrix":
        return IntMatrix(tuple(tuple(-a for a in r) for r in self.rows))

    def __mul__(self, c: int) -> "IntMatrix":
        return IntMatrix(tuple(tuple(c * a for a in r) for r in self.rows))

    __rmul__ = __mul__

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        self._check_same(other)
        cols = list(zip(*other.rows))
        out = tuple(tuple(sum(a * b for a, b in zip(r, c)) for c in cols) for r in self.rows)
        check_bits(*(x for r in out for x in r))
        return IntMatrix(out)

    def __pow__(self, k: int) -> "IntMatrix":
        if k < 0:
            return self.inverse() ** (-k)
        result = IntMatrix.identity(self.dim)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def sub_scalar(self, c: int) -> "IntMatrix":
        """``self - c*I``."""
        return IntMatrix(tuple(tuple(a - (c if i == j else 0) for j, a in enumerate(r)) for i, r in enumerate(self.rows)))

    def eval_poly(self, p: IntPoly) -> "IntMatrix":
        """``p(self)`` by Horner's scheme."""
        n = self.dim
        acc = IntMatrix.zeros(n)
        for c in reversed(p.coeffs):
            acc = (acc @ self).sub_scalar(-c)
        return acc

    # -- determinant and inverse -----------------------------------------

    def det(self) -> int:
        return det(self)

    def char_poly(self) -> IntPoly:
        return char_poly(self)

    def rational_inverse(self) -> list[list[Fraction]]:
        """Inverse over Q by Gauss-Jordan; raises ZeroDivisionError if singular."""
        n = self.dim
        a = [[Fraction(x) for x in r] + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(self.rows)]
        for col in range(n):
            piv = next((r for r in range(col, n) if a[r][col] != 0), None)
            if piv is None:
                raise ZeroDivisionError("singular matrix")
            a[col], a[piv] = a[piv], a[col]
            inv = 1 / a[col][col]
            a[col] = [x * inv for x in a[col]]
            for r in range(n):
                if r != col and a[r][col] != 0:
                    f = a[r][col]
                    a[r] = [x - f * y for x, y in zip(a[r], a[col])]
        return [row[n:] for row in a]

    def inverse(self) -> "IntMatrix":
        """Integer inverse; only defined when ``det = ±1``."""
        d = self.det()
        if abs(d) != 1:
            raise ValueError(f"matrix is not unimodular (det = {d})")
        inv = self.rational_inverse()
        return IntMatrix(tuple(tuple(int(x) for x in r) for r in inv))

    def __str__(self) -> str:
        w = max(len(str(x)) for r in self.rows for x in r)
        return "\n".join(" ".join(str(x).rjust(w) for x in r) for r in self.rows)


def det(m: IntMatrix | Sequence[Sequence[int]]) -> int:
    """Fraction-free (Bareiss) determinant."""
    rows = m.rows if isinstance(m, IntMatrix) else m
    a = [list(r) for r in rows]
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
            row_i[k] = 0
        check_bits(akk)
        prev = akk
    return sign * a[n - 1][n - 1]


def char_poly(m: IntMatrix) -> IntPoly:
    """``det(xI - M)`` by Berkowitz's division-free algorithm.

    Works over Z with no divisions at all; the leading principal
    submatrices are folded in one at a time through Toeplitz products.
    """
    a = m.rows
    n = m.dim
    # p holds coefficients highest degree first
    p = [1, -a[0][0]]
    for r in range(1, n):
        row = a[r][:r]
        col = [a[i][r] for i in range(r)]
        arr = a[r][r]
        # first column of the Toeplitz factor: 1, -a_rr, -R S, -R A S, ...
        t = [1, -arr]
        vec = col
        for _ in range(r):
            t.append(-sum(x * y for x, y in zip(row, vec)))
            vec = [sum(a[i][j] * vec[j] for j in range(r)) for i in range(r)]
        new = []
        for i in range(r + 2):
            s = 0
            for j in range(min(i, r) + 1):
                if i - j < len(t):
                    s += t[i - j] * p[j]
            new.append(s)
        check_bits(*new)
        p = new
    return IntPoly(tuple(reversed(p)))
