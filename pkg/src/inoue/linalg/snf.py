"""Smith normal form with unimodular transforms."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .guard import check_bits
from .matrix import IntMatrix


@dataclass(frozen=True)
class SNFResult:
    """``U @ A @ V == D`` with ``D`` diagonal and ``d_1 | d_2 | ...``.

    Matrices are stored as tuples of rows so that rectangular inputs are
    supported; ``U`` is m x m, ``V`` is n x n and ``D`` is m x n.
    """

    D: tuple[tuple[int, ...], ...]
    U: tuple[tuple[int, ...], ...]
    V: tuple[tuple[int, ...], ...]

    @property
    def diagonal(self) -> tuple[int, ...]:
        k = min(len(self.D), len(self.D[0]) if self.D else 0)
        return tuple(self.D[i][i] for i in range(k))

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d != 0)

    @property
    def invariant_factors(self) -> tuple[int, ...]:
        """Diagonal entries greater than one (torsion orders of the cokernel)."""
        return tuple(d for d in self.diagonal if d > 1)

    def kernel_basis(self) -> list[tuple[int, ...]]:
        """Z-basis of the integer right kernel: columns of V past the rank."""
        n = len(self.V)
        r = self.rank
        return [tuple(self.V[i][j] for i in range(n)) for j in range(r, n)]


def _matmul(a, b):
    cols = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(r, c)) for c in cols) for r in a)


def smith_normal_form(A: IntMatrix | Sequence[Sequence[int]]) -> SNFResult:
    """Smith normal form of an integer matrix (square or rectangular).

    Pivoting picks the entry of smallest nonzero absolute value in the
    remaining block, ties broken by lowest (row, column), so ``U`` and ``V``
    are reproducible.
    """
    rows = A.rows if isinstance(A, IntMatrix) else A
    a = [list(map(int, r)) for r in rows]
    m = len(a)
    n = len(a[0]) if m else 0
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    V = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in V:
            r[i], r[j] = r[j], r[i]

    def add_row(dst, src, q):
        # row_dst += q * row_src
        a[dst] = [x + q * y for x, y in zip(a[dst], a[src])]
        U[dst] = [x + q * y for x, y in zip(U[dst], U[src])]

    def add_col(dst, src, q):
        for r in a:
            r[dst] += q * r[src]
        for r in V:
            r[dst] += q * r[src]

    for t in range(min(m, n)):
        while True:
            best = None
            for i in range(t, m):
                for j in range(t, n):
                    x = a[i][j]
                    if x != 0 and (best is None or abs(x) < best[0]):
                        best = (abs(x), i, j)
            if best is None:
                break
            _, pi, pj = best
            if pi != t:
                swap_rows(t, pi)
            if pj != t:
                swap_cols(t, pj)
            p = a[t][t]
            clean = True
            for i in range(t + 1, m):
                if a[i][t]:
                    q = a[i][t] // p
                    add_row(i, t, -q)
                    if a[i][t]:
                        clean = False
            for j in range(t + 1, n):
                if a[t][j]:
                    q = a[t][j] // p
                    add_col(j, t, -q)
                    if a[t][j]:
                        clean = False
            check_bits(*(x for r in a for x in r))
            if not clean:
                continue
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n) if a[i][j] % p), None)
            if bad is None:
                break
            add_row(t, bad[0], 1)
        if t < m and t < n and a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            U[t] = [-x for x in U[t]]

    return SNFResult(
        D=tuple(tuple(r) for r in a),
        U=tuple(tuple(r) for r in U),
        V=tuple(tuple(r) for r in V),
    )


def verify_snf(A, res: SNFResult) -> bool:
    """Recompute ``U A V`` and check diagonal shape, signs and divisibility."""
    rows = A.rows if isinstance(A, IntMatrix) else tuple(tuple(r) for r in A)
    if _matmul(_matmul(res.U, rows), res.V) != res.D:
        return False
    for i, r in enumerate(res.D):
        for j, x in enumerate(r):
            if i != j and x != 0:
                return False
    d = res.diagonal
    if any(x < 0 for x in d):
        return False
    for x, y in zip(d, d[1:]):
        if x == 0 and y != 0:
            return False
        if x != 0 and y % x:
            return False
    return True
