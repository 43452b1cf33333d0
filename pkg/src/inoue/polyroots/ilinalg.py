"""Gaussian elimination on interval matrices."""

from __future__ import annotations

from ..errors import PrecisionError
from .intervals import RealInterval


def _pivot(A, col, start):
    best, best_mig = None, None
    for r in range(start, len(A)):
        m = A[r][col].mig()
        if m > 0 and (best_mig is None or m > best_mig):
            best, best_mig = r, m
    return best


def interval_det(A) -> RealInterval:
    """Enclosure of the determinant of a square matrix of intervals.

    Raises :class:`PrecisionError` when no pivot can be separated from 0,
    which means either the matrix is singular or the enclosures are too wide.
    """
    A = [[RealInterval.coerce(x) for x in row] for row in A]
    n = len(A)
    det = RealInterval(1)
    for c in range(n):
        p = _pivot(A, c, c)
        if p is None:
            raise PrecisionError("cannot exclude 0 from a pivot while enclosing a determinant")
        if p != c:
            A[c], A[p] = A[p], A[c]
            det = -det
        piv = A[c][c]
        det = det * piv
        inv = piv.reciprocal()
        for r in range(c + 1, n):
            f = A[r][c] * inv
            A[r] = [A[r][j] - f * A[c][j] if j > c else RealInterval(0) for j in range(n)]
    return det


def interval_solve(A, B):
    """Enclosure of ``X`` with ``A X = B`` (``A`` square, ``B`` a list of rows)."""
    n = len(A)
    m = len(B[0])
    aug = [[RealInterval.coerce(x) for x in A[i]] + [RealInterval.coerce(x) for x in B[i]] for i in range(n)]
    for c in range(n):
        p = _pivot(aug, c, c)
        if p is None:
            raise PrecisionError("interval matrix is not provably invertible")
        aug[c], aug[p] = aug[p], aug[c]
        inv = aug[c][c].reciprocal()
        aug[c] = [x * inv for x in aug[c]]
        for r in range(n):
            if r != c:
                f = aug[r][c]
                if f.lo == 0 and f.hi == 0:
                    continue
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
    return [row[n:n + m] for row in aug]
