import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from inoue.errors import Rejection
from inoue.linalg import IntMatrix, IntPoly
from inoue.polyroots import precision
from inoue.spectral import (
    check_type_I, eigen_data, exact_block, is_diagonalizable, verify_conjugation_relation, verify_exact_block,
)

from conftest import F, F3, G, P5, companion, diag7, elementary_product, nondiag7
from oracles import ALPHA_F, ALPHA_F3, ALPHA_P5, BETA_F, BETA_F3, sympy_is_diagonalizable


TOL = Fraction(1, 10 ** 38)  # the frozen oracle digits are only good to about 1e-40


def _near(box, re, im):
    re, im = Fraction(re), Fraction(im)
    return box.re_lo - TOL <= re <= box.re_hi + TOL and box.im_lo - TOL <= im <= box.im_hi + TOL


def test_certificate_companion_F():
    cert = check_type_I(companion(F))
    assert cert.n == 1 and cert.dim == 3
    assert cert.alpha_enclosure.contains(Fraction(ALPHA_F))
    assert cert.alpha_enclosure.width <= Fraction(1, 2 ** 128)
    (f, box), = cert.complex_pairs
    assert f == F
    assert _near(box, *BETA_F)
    assert cert.alpha_enclosure.is_positive()


def test_certificate_F3_and_P5():
    cert = check_type_I(companion(F3))
    assert cert.alpha_enclosure.contains(Fraction(ALPHA_F3))
    assert _near(cert.complex_pairs[0][1], *BETA_F3)
    cert = check_type_I(companion(P5))
    assert cert.n == 2
    assert cert.alpha_enclosure.contains(Fraction(ALPHA_P5))


def test_block_examples():
    cert = check_type_I(nondiag7())
    assert cert.n == 3
    assert sorted(e for _, e in cert.factorization) == [1, 2]
    assert any("cyclotomic" in note for note in cert.notes)
    assert not is_diagonalizable(nondiag7()).diagonalizable
    assert is_diagonalizable(diag7()).diagonalizable


@pytest.mark.parametrize("rows, reason", [
    ([[1, 0], [0, 1]], "dim-even"),
    ([[2, 0, 0], [0, 1, 0], [0, 0, 1]], "det!=1"),
    ([[1, 0, 0], [0, 1, 0], [0, 0, 1]], "real-root-count!=1"),
    ([[1]], "alpha-rational"),
    # chi = (x-1)(x^2+x+1): a single real root, rational
    ([[0, 0, 1], [1, 0, 0], [0, 1, 0]], "alpha-rational"),
    # three distinct real roots
    ([[2, 1, 0], [1, 1, 0], [0, 0, 1]], "real-root-count!=1"),
])
def test_rejections(rows, reason):
    with pytest.raises(Rejection) as exc:
        check_type_I(IntMatrix.from_rows(rows))
    assert exc.value.reason == reason


def test_alpha_multiple_reason():
    # one Jordan chain of length 3 on alpha
    M = companion(F ** 3)
    with pytest.raises(Rejection) as exc:
        check_type_I(M)
    assert exc.value.reason == "alpha-multiple"
    assert exc.value.details["algebraic"] == 3
    assert exc.value.details["geometric"] == 1


def _contained(coarse, fine):
    return all(c.contains(f) for c, f in zip(coarse, fine))


@pytest.mark.parametrize("make", [lambda: companion(F), lambda: companion(F3), nondiag7, diag7,
                                  lambda: companion(P5)])
def test_eigen_data_nesting_and_relation(make):
    M = make()
    cert = check_type_I(M)
    ed = eigen_data(M, cert, 64)
    fine = eigen_data(M, cert, 80)
    assert ed.max_width() <= Fraction(1, 2 ** 64)
    assert ed.alpha.contains(fine.alpha)
    assert _contained(ed.a, fine.a)
    for c, f in zip(ed.b, fine.b):
        assert _contained(c, f)
    for r, s in zip(ed.R, fine.R):
        assert _contained(r, s)
    assert verify_conjugation_relation(M, ed).ok
    assert not ed.det_v.contains_zero()


def test_eigen_data_modulus_identity():
    # alpha * prod |beta_j|^2 = det M = 1
    for M in (companion(F), companion(P5), nondiag7()):
        ed = eigen_data(M, check_type_I(M), 96)
        with precision(200):
            prod = ed.alpha
            for beta in ed.betas:
                prod = prod * (beta.re.sqr() + beta.im.sqr())
        assert prod.contains(1)


def test_exact_blocks_are_invariant():
    M = nondiag7()
    blk = exact_block(M, G, 2)
    assert len(blk.basis) == 2
    assert sorted(blk.depths) == [1, 2]
    assert verify_exact_block(M, blk)


def test_conjugated_matrices_verify():
    rng = random.Random(4)
    for base in (companion(F), nondiag7()):
        for _ in range(3):
            C = elementary_product(base.dim, rng, 6)
            M = C @ base @ C.inverse()
            ed = eigen_data(M, check_type_I(M), 64)
            assert verify_conjugation_relation(M, ed).ok


JORDAN_FACTORS = [IntPoly((1, 1)), IntPoly((-2, 1)), IntPoly((1, 0, 1)), IntPoly((1, -1, 1)), IntPoly((2, 1))]


@given(st.lists(st.tuples(st.sampled_from(JORDAN_FACTORS), st.integers(1, 2)), min_size=1, max_size=3),
       st.integers(0, 10 ** 6))
@settings(max_examples=25)
def test_diagonalizable_matches_sympy(blocks, seed):
    """Block sums of companions of f^k (single Jordan chain) and f, k copies (diagonal)."""
    mats = []
    for f, k in blocks:
        if seed % 2:
            mats.append(companion(f ** k))
        else:
            mats.extend([companion(f)] * k)
        seed //= 2
    M = IntMatrix.block_diag(*mats)
    if not 2 <= M.dim <= 8:
        return
    C = elementary_product(M.dim, random.Random(seed), 5)
    M = C @ M @ C.inverse()
    assert is_diagonalizable(M).diagonalizable == sympy_is_diagonalizable(M.to_list())


@given(st.lists(st.lists(st.integers(-3, 3), min_size=3, max_size=3), min_size=3, max_size=3))
@settings(max_examples=12)
def test_diagonalizable_random_3x3(rows):
    assert is_diagonalizable(IntMatrix.from_rows(rows)).diagonalizable == sympy_is_diagonalizable(rows)
