"""Exact LLL reduction of integer lattice bases."""

from __future__ import annotations

from fractions import Fraction


def _dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def lll_reduce(basis, delta: Fraction = Fraction(3, 4)) -> list[list[int]]:
    """LLL-reduce linearly independent integer row vectors.

    Plain rational Gram-Schmidt; fine for the small kernels we feed it.
    Returns a new basis of the same lattice.
    """
    B = [list(map(int, b)) for b in basis]
    k = len(B)
    if k <= 1:
        return B

    def gram_schmidt():
        bstar, mu, norms = [], [[Fraction(0)] * k for _ in range(k)], []
        for i in range(k):
            v = [Fraction(x) for x in B[i]]
            for j in range(i):
                mu[i][j] = Fraction(_dot(B[i], bstar[j])) / norms[j] if norms[j] else Fraction(0)
                v = [a - mu[i][j] * b for a, b in zip(v, bstar[j])]
            bstar.append(v)
            norms.append(_dot(v, v))
        return bstar, mu, norms

    bstar, mu, norms = gram_schmidt()
    i = 1
    while i < k:
        for j in range(i - 1, -1, -1):
            q = round(mu[i][j])
            if q:
                B[i] = [a - q * b for a, b in zip(B[i], B[j])]
                for t in range(j + 1):
                    mu[i][t] -= q * (mu[j][t] if t < j else 1)
        if norms[i] >= (delta - mu[i][i - 1] ** 2) * norms[i - 1]:
            i += 1
        else:
            B[i], B[i - 1] = B[i - 1], B[i]
            bstar, mu, norms = gram_schmidt()
            i = max(i - 1, 1)
    return B


def is_lll_reduced(basis, delta: Fraction = Fraction(3, 4)) -> bool:
    B = [list(b) for b in basis]
    k = len(B)
    bstar, norms = [], []
    mu = [[Fraction(0)] * k for _ in range(k)]
    for i in range(k):
        v = [Fraction(x) for x in B[i]]
        for j in range(i):
            mu[i][j] = Fraction(_dot(B[i], bstar[j])) / norms[j]
            v = [a - mu[i][j] * b for a, b in zip(v, bstar[j])]
        bstar.append(v)
        norms.append(_dot(v, v))
    for i in range(k):
        for j in range(i):
            if abs(mu[i][j]) > Fraction(1, 2):
                return False
    return all(norms[i] >= (delta - mu[i][i - 1] ** 2) * norms[i - 1] for i in range(1, k))
