import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from inoue.errors import RootOnEndpoint
from inoue.linalg import IntPoly
from inoue.polyroots import (
    ComplexInterval, RealInterval, count_real_roots, enclose_complex_roots, isolate_real_roots,
    precision, refine_real, root_bound, sturm_count,
)

from conftest import F, F3, G
from oracles import ALPHA_F, ALPHA_F3, BETA_F, BETA_G, sympy_roots


def test_sturm_count_examples():
    assert sturm_count(F, 0, 2) == 1
    assert sturm_count(IntPoly((1, 0, 1)), -10, 10) == 0
    assert sturm_count(IntPoly.from_roots([1, 2, 3]), 0, 10) == 3


def test_sturm_count_endpoint_root():
    with pytest.raises(RootOnEndpoint):
        sturm_count(IntPoly.from_roots([1, 2]), 1, 3)


def test_isolation_examples():
    (iso,) = isolate_real_roots(F)
    assert iso.lo < Fraction(ALPHA_F) < iso.hi
    (iso,) = isolate_real_roots(F3)
    assert iso.lo < Fraction(ALPHA_F3) < iso.hi
    assert isolate_real_roots(IntPoly((1, 0, 1)) * IntPoly((2, 0, 1))) == []


def test_refine_examples():
    I = refine_real(F, isolate_real_roots(F)[0], 20)
    assert I.width <= Fraction(1, 2 ** 20)
    assert I.contains(Fraction(ALPHA_F))
    I = refine_real(F3, isolate_real_roots(F3)[0], 20)
    assert I.contains(Fraction(ALPHA_F3))
    one = refine_real(IntPoly((-1, 1)), isolate_real_roots(IntPoly((-1, 1)))[0], 10)
    assert one.is_point() and one.lo == 1


def test_complex_examples():
    boxes = enclose_complex_roots(G, 40)
    assert len(boxes) == 2
    up = [b for b in boxes if b.is_upper][0]
    assert up.contains(Fraction(BETA_G[0]), Fraction(BETA_G[1]))
    boxes = enclose_complex_roots(F, 40)
    up = [b for b in boxes if b.is_upper][0]
    # the pair sits at negative real part
    assert up.contains(Fraction(BETA_F[0]), Fraction(BETA_F[1]))
    assert up.re_hi < 0
    boxes = enclose_complex_roots(IntPoly((1, 0, 1)) ** 2, 30)
    assert [b.multiplicity for b in boxes] == [2, 2]
    assert any(b.contains(0, 1) for b in boxes) and any(b.contains(0, -1) for b in boxes)


def _random_product(rng):
    """Product of random linear and quadratic integer factors, with the expected root list."""
    p = IntPoly((1,))
    roots = []
    deg = 0
    while deg < rng.randint(2, 8):
        if rng.random() < 0.5:
            r = rng.randint(-4, 4)
            p = p * IntPoly((-r, 1))
            roots.append(complex(r))
            deg += 1
        else:
            b, c = rng.randint(-3, 3), rng.randint(-3, 5)
            p = p * IntPoly((c, b, 1))
            disc = b * b - 4 * c
            s = complex(disc) ** 0.5
            roots += [(-b + s) / 2, (-b - s) / 2]
            deg += 2
    return p, roots


def test_random_products_roots_located():
    rng = random.Random(11)
    for _ in range(40):
        p, roots = _random_product(rng)
        distinct_real = {round(r.real, 9) for r in roots if abs(r.imag) < 1e-12}
        assert count_real_roots(p) == len(distinct_real)
        assert len(isolate_real_roots(p)) == len(distinct_real)
        boxes = enclose_complex_roots(p, 30)
        assert sum(b.multiplicity for b in boxes) == p.degree
        for r in roots:
            hits = [b for b in boxes if b.re_lo - 1e-9 <= r.real <= b.re_hi + 1e-9
                    and b.im_lo - 1e-9 <= r.imag <= b.im_hi + 1e-9]
            assert len(hits) == 1
        ups = {(b.re_lo, b.re_hi, b.im_lo, b.im_hi) for b in boxes if b.is_upper}
        downs = {(b.re_lo, b.re_hi, -b.im_hi, -b.im_lo) for b in boxes if b.im_hi < 0}
        assert ups == downs


@given(st.lists(st.integers(-20, 20), min_size=4, max_size=8).map(IntPoly).filter(lambda p: p.degree >= 3))
def test_boxes_match_sympy(p):
    boxes = enclose_complex_roots(p, 24)
    roots, _ = sympy_roots(p.coeffs, 30)
    for r in roots:
        assert any(b.re_lo - 1e-12 <= r.real <= b.re_hi + 1e-12 and b.im_lo - 1e-12 <= r.imag <= b.im_hi + 1e-12
                   for b in boxes)
    assert sum(b.multiplicity for b in boxes) == p.degree
    assert all(not a.overlaps(b) for i, a in enumerate(boxes) for b in boxes[i + 1:])


@given(st.lists(st.integers(-20, 20), min_size=2, max_size=8).map(IntPoly).filter(lambda p: p.degree >= 1),
       st.integers(4, 60))
def test_refine_monotone(p, bits):
    for iso in isolate_real_roots(p):
        coarse = refine_real(p, iso, bits)
        fine = refine_real(p, iso, bits + 8)
        assert coarse.contains(fine)
        assert fine.width <= Fraction(1, 2 ** (bits + 8))


@given(st.lists(st.integers(-30, 30), min_size=2, max_size=9).map(IntPoly).filter(lambda p: p.degree >= 1))
def test_sturm_over_root_bound_counts_all(p):
    B = root_bound(p)
    assert sturm_count(p, -B, B) == count_real_roots(p) == len(isolate_real_roots(p))


def test_interval_arithmetic_encloses():
    rng = random.Random(5)
    with precision(40):
        for _ in range(200):
            a = Fraction(rng.randint(-1000, 1000), rng.randint(1, 1000))
            b = Fraction(rng.randint(-1000, 1000), rng.randint(1, 1000))
            A, B = RealInterval(a), RealInterval(b)
            assert (A + B).contains(a + b)
            assert (A * B).contains(a * b)
            if b:
                assert (A / B).contains(a / b)
            z = ComplexInterval(a, b) * ComplexInterval(b, a)
            assert z.re.contains(a * b - b * a) and z.im.contains(a * a + b * b)
