"""Independent reference computations used only by the tests.

Nothing here shares code with the package: determinants by cofactor
expansion, SNF diagonals by determinantal divisors, characteristic
polynomials and factorizations from sympy, roots from sympy at 40 digits.
"""

from functools import reduce
from itertools import combinations
from math import gcd

import sympy as sp

X = sp.symbols("x")

# high-precision roots, frozen from sympy's all_roots at 40 digits
ALPHA_F = "1.465571231876768026656731225219939108026"
BETA_F = ("-0.2327856159383840133283656126099695540128", "0.7925519925154478483258983006533612435178")
ALPHA_F3 = "3.103803402735536533164947332828928092419"
BETA_F3 = ("-0.05190170136776826658247366641446404620971", "0.565235851677170770170019948608197959966")
BETA_G = ("0.5", "0.8660254037844386467637231707529361834714")
ALPHA_P5 = "1.792402357824933021939243579271313226707"


def cofactor_det(rows):
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = 0
    for j in range(n):
        if rows[0][j]:
            minor = [r[:j] + r[j + 1:] for r in rows[1:]]
            total += (-1) ** j * rows[0][j] * cofactor_det(minor)
    return total


def snf_diagonal(rows):
    """SNF diagonal from determinantal divisors d_k = gcd of k x k minors."""
    m, n = len(rows), len(rows[0])
    divisors = [1]
    for k in range(1, min(m, n) + 1):
        g = 0
        for rs in combinations(range(m), k):
            for cs in combinations(range(n), k):
                g = gcd(g, cofactor_det([[rows[r][c] for c in cs] for r in rs]))
        if g == 0:
            break
        divisors.append(g)
    diag = [divisors[i] // divisors[i - 1] for i in range(1, len(divisors))]
    return tuple(diag + [0] * (min(m, n) - len(diag)))


def sympy_charpoly(rows):
    return tuple(int(c) for c in reversed(sp.Matrix(rows).charpoly(X).all_coeffs()))


def sympy_factor(coeffs):
    p = sp.Poly(list(reversed(coeffs)), X)
    _, facs = p.factor_list()
    out = []
    for f, e in facs:
        c = [int(v) for v in reversed(f.all_coeffs())]
        if c[-1] < 0:
            c = [-v for v in c]
        out.append((tuple(c), e))
    return sorted(out)


def sympy_roots(coeffs, digits=40):
    """Numerical roots with multiplicity (sympy nroots); fast enough for property tests."""
    p = sp.Poly(list(reversed(coeffs)), X)
    roots = p.nroots(n=digits, maxsteps=200)
    return [complex(r) for r in roots], roots


def sympy_is_diagonalizable(rows):
    return sp.Matrix(rows).is_diagonalizable()


def lcm_all(xs):
    return reduce(lambda a, b: a * b // gcd(a, b), xs, 1)
