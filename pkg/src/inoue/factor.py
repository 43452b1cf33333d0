"""Factorization of integer polynomials and irreducibility certificates.

Zassenhaus' method: factor modulo a small prime (distinct-degree plus
Cantor-Zassenhaus splitting), Hensel-lift the factorization to a prime
power exceeding a Mignotte-type coefficient bound, and recombine modular
factors by trial division over Z.  Sized for degrees up to about 20.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import isqrt

from .linalg.poly import IntPoly, qdivmod, squarefree_decomposition

_SMALL_PRIMES = (3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
                 101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173, 179, 181, 191, 193, 197)


# ---------------------------------------------------------------------------
# polynomials over Z/m (lists, lowest degree first)
# ---------------------------------------------------------------------------

def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _mod(a, m):
    return _trim([x % m for x in a])


def _add(a, b, m):
    n = max(len(a), len(b))
    return _trim([((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % m for i in range(n)])


def _sub(a, b, m):
    n = max(len(a), len(b))
    return _trim([((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % m for i in range(n)])


def _mul(a, b, m):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _mod(out, m)


def _divmod(a, b, m):
    """Division by ``b`` whose leading coefficient is a unit mod m."""
    a = _mod(list(a), m)
    b = _mod(list(b), m)
    inv = pow(b[-1], -1, m)
    db = len(b) - 1
    if len(a) - 1 < db:
        return [], a
    q = [0] * (len(a) - db)
    for k in range(len(a) - 1 - db, -1, -1):
        c = a[k + db] * inv % m
        q[k] = c
        if c:
            for j in range(db + 1):
                a[k + j] = (a[k + j] - c * b[j]) % m
    return _trim(q), _trim(a[:db])


def _monic(a, p):
    inv = pow(a[-1], -1, p)
    return [x * inv % p for x in a]


def _gcd(a, b, p):
    a, b = _mod(list(a), p), _mod(list(b), p)
    while b:
        _, r = _divmod(a, b, p)
        a, b = b, r
    return _monic(a, p) if a else []


def _xgcd(a, b, p):
    """``s*a + t*b = 1`` mod p for coprime a, b; returns (s, t)."""
    r0, r1 = _mod(list(a), p), _mod(list(b), p)
    s0, s1, t0, t1 = [1], [], [], [1]
    while r1:
        q, r = _divmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, _sub(s0, _mul(q, s1, p), p)
        t0, t1 = t1, _sub(t0, _mul(q, t1, p), p)
    if len(r0) != 1:
        raise ValueError("polynomials are not coprime mod p")
    inv = pow(r0[0], -1, p)
    return [x * inv % p for x in s0], [x * inv % p for x in t0]


def _powmod(base, e, f, p):
    result = [1]
    base = _divmod(base, f, p)[1]
    while e:
        if e & 1:
            result = _divmod(_mul(result, base, p), f, p)[1]
        base = _divmod(_mul(base, base, p), f, p)[1]
        e >>= 1
    return result


def _deriv(a, p):
    return _trim([i * a[i] % p for i in range(1, len(a))])


def _ddf(f, p):
    """Distinct-degree factorization of a monic squarefree f mod p."""
    out = []
    h = [0, 1]
    i = 0
    f = list(f)
    while len(f) - 1 >= 2 * (i + 1):
        i += 1
        h = _powmod(h, p, f, p)
        g = _gcd(f, _sub(h, [0, 1], p), p)
        if len(g) > 1:
            out.append((g, i))
            f, _ = _divmod(f, g, p)
            h = _divmod(h, f, p)[1]
    if len(f) > 1:
        out.append((f, len(f) - 1))
    return out


def _edf(f, d, p, rng):
    """Cantor-Zassenhaus equal-degree splitting (p odd)."""
    n = len(f) - 1
    if n == d:
        return [f]
    while True:
        a = _trim([rng.randrange(p) for _ in range(n)])
        if len(a) < 2:
            continue
        g = _gcd(a, f, p)
        if 1 < len(g) < len(f):
            break
        b = _sub(_powmod(a, (p ** d - 1) // 2, f, p), [1], p)
        g = _gcd(b, f, p)
        if 1 < len(g) < len(f):
            break
    h, _ = _divmod(f, g, p)
    return _edf(g, d, p, rng) + _edf(_monic(h, p), d, p, rng)


def factor_mod_p(f, p, seed: int = 0):
    """Monic irreducible factors of a squarefree ``f`` modulo an odd prime ``p``."""
    rng = random.Random(seed)
    fm = _monic(_mod(list(f), p), p)
    out = []
    for g, d in _ddf(fm, p):
        out.extend(_edf(g, d, p, rng))
    out.sort(key=lambda g: (len(g), g))
    return out


# ---------------------------------------------------------------------------
# Hensel lifting
# ---------------------------------------------------------------------------

def _hensel_step(f, g, h, s, t, m):
    """One quadratic lift f = g*h mod m  ->  mod m^2 (h monic)."""
    M = m * m
    e = _sub(f, _mul(g, h, M), M)
    q, r = _divmod(_mul(s, e, M), h, M)
    g2 = _add(_add(g, _mul(t, e, M), M), _mul(q, g, M), M)
    h2 = _add(h, r, M)
    b = _sub(_add(_mul(s, g2, M), _mul(t, h2, M), M), [1], M)
    c, d = _divmod(_mul(s, b, M), h2, M)
    s2 = _sub(s, d, M)
    t2 = _sub(_sub(t, _mul(t, b, M), M), _mul(c, g2, M), M)
    return g2, h2, s2, t2


def _lift(f, factors, p, k):
    """Lift ``f = lc * prod(factors)`` mod p to monic factors mod p**k."""
    pk = p ** k
    lc = f[-1]
    if len(factors) == 1:
        return [_monic(_mod(list(f), pk), pk)]
    half = len(factors) // 2
    left, right = factors[:half], factors[half:]
    g = [lc % p]
    for x in left:
        g = _mul(g, x, p)
    h = [1]
    for x in right:
        h = _mul(h, x, p)
    s, t = _xgcd(g, h, p)
    m = p
    while m < pk:
        g, h, s, t = _hensel_step(f, g, h, s, t, m)
        m = m * m
    g, h = _mod(g, pk), _mod(h, pk)
    return _lift(g, left, p, k) + _lift(h, right, p, k)


def _symmetric(a, m):
    return [x - m if x > m // 2 else x for x in a]


# ---------------------------------------------------------------------------
# factorization over Z
# ---------------------------------------------------------------------------

def _choose_prime(f: IntPoly, tries: int = 5):
    """Good primes (f stays squarefree of full degree) with their modular factorizations."""
    found = []
    for p in _SMALL_PRIMES:
        if f.lc % p == 0:
            continue
        fp = _mod(list(f.coeffs), p)
        if len(_gcd(fp, _deriv(fp, p), p)) > 1:
            continue
        found.append((p, factor_mod_p(fp, p)))
        if len(found) >= tries:
            break
    return found


def _coefficient_bound(f: IntPoly) -> int:
    d = f.degree
    norm2 = isqrt(sum(c * c for c in f.coeffs)) + 1
    return (1 << d) * norm2 * abs(f.lc)


def _factor_squarefree(f: IntPoly) -> list[IntPoly]:
    """Irreducible factors of a primitive squarefree polynomial with positive lc."""
    if f.degree <= 1:
        return [f]
    candidates = _choose_prime(f)
    p, modular = min(candidates, key=lambda c: len(c[1]))
    if len(modular) == 1:
        return [f]
    bound = 2 * _coefficient_bound(f) * abs(f.lc) + 1
    k = 1
    while p ** k <= bound:
        k += 1
    pk = p ** k
    lifted = _lift(list(f.coeffs), modular, p, k)
    remaining = list(range(len(lifted)))
    current = f
    found = []
    s = 1
    while 2 * s <= len(remaining):
        hit = False
        for subset in combinations(remaining, s):
            g = [current.lc % pk]
            for i in subset:
                g = _mul(g, lifted[i], pk)
            cand = IntPoly.primitive(_symmetric(g, pk))
            if cand.degree < 1:
                continue
            q, r = qdivmod(current.coeffs, cand.coeffs)
            if not r and all(getattr(c, "denominator", 1) == 1 for c in q):
                found.append(cand)
                current = IntPoly(tuple(int(c) for c in q))
                remaining = [i for i in remaining if i not in subset]
                hit = True
                break
        if not hit:
            s += 1
    if current.degree >= 1:
        found.append(IntPoly.primitive(current.coeffs))
    return found


def factor(p: IntPoly) -> tuple[int, list[tuple[IntPoly, int]]]:
    """Complete factorization over Z.

    Returns ``(content, [(factor, multiplicity), ...])`` with primitive
    factors of positive leading coefficient sorted by ``IntPoly.sort_key``;
    ``content`` carries the sign so the product reproduces ``p``.
    """
    if p.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    if p.degree == 0:
        return p.coeffs[0], []
    out = []
    for part, mult in squarefree_decomposition(p):
        for fac in _factor_squarefree(part):
            out.append((fac, mult))
    out.sort(key=lambda fm: fm[0].sort_key())
    prod = IntPoly((1,))
    for fac, mult in out:
        prod = prod * fac ** mult
    content = p.lc // prod.lc
    return content, out


def irreducible_factors(p: IntPoly) -> list[tuple[IntPoly, int]]:
    return factor(p)[1]


# ---------------------------------------------------------------------------
# irreducibility certificate
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class IrreducibilityRecord:
    """How irreducibility over Q was (dis)proved."""

    irreducible: bool
    method: str
    details: dict = field(default_factory=dict)


def _subset_sums(degrees):
    sums = {0}
    for d in degrees:
        sums |= {s + d for s in sums}
    return sums


def irreducibility(p: IntPoly) -> IrreducibilityRecord:
    """Decide irreducibility over Q of a primitive polynomial.

    Order of tests: content/degree, rational-root screen, compatibility of
    factor-degree patterns modulo several primes, and finally a full
    Zassenhaus factorization.
    """
    d = p.degree
    if d < 1:
        return IrreducibilityRecord(False, "degree", {"degree": d})
    if d == 1:
        return IrreducibilityRecord(True, "degree", {"degree": 1})
    if p.content() != 1:
        return IrreducibilityRecord(False, "content", {"content": p.content()})
    root = _rational_root(p)
    if root is not None:
        return IrreducibilityRecord(False, "rational-root", {"root": f"{root[0]}/{root[1]}"})
    if d <= 3:
        return IrreducibilityRecord(True, "rational-root", {"note": "degree <= 3 without rational roots"})
    parts = squarefree_decomposition(p)
    if len(parts) != 1 or parts[0][1] != 1:
        return IrreducibilityRecord(False, "squarefree", {"note": "repeated factor"})
    possible = set(range(1, d))
    patterns = {}
    for prime, mods in _choose_prime(p, tries=8):
        degs = sorted(len(g) - 1 for g in mods)
        patterns[prime] = degs
        possible &= _subset_sums(degs)
        if not possible:
            return IrreducibilityRecord(True, "degree-pattern", {"patterns": patterns})
    facs = irreducible_factors(p)
    irr = len(facs) == 1 and facs[0][1] == 1
    return IrreducibilityRecord(irr, "zassenhaus", {"patterns": patterns, "factors": [str(f) for f, _ in facs]})


def _divisors(n: int):
    n = abs(n)
    small = [i for i in range(1, isqrt(n) + 1) if n % i == 0]
    return sorted(set(small + [n // i for i in small]))


def _rational_root(p: IntPoly):
    """A rational root ``(num, den)`` if one exists (candidates from the rational-root theorem)."""
    c0, lc = p.coeffs[0], p.lc
    if c0 == 0:
        return (0, 1)
    if abs(c0) > 10 ** 12 or abs(lc) > 10 ** 12:
        # too many candidates; fall back to linear factors from the full factorization
        for fac, _ in irreducible_factors(p):
            if fac.degree == 1:
                return (-fac.coeffs[0], fac.coeffs[1])
        return None
    for num in _divisors(c0):
        for den in _divisors(lc):
            for s in (1, -1):
                if p(Fraction(s * num, den)) == 0:
                    return (s * num, den)
    return None
