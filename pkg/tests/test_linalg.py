import json
import random

import pytest
from hypothesis import given, strategies as st

from inoue.errors import BitLengthExceeded, InputFormatError, ZeroDivisorError
from inoue.linalg import (
    IntMatrix, IntPoly, QuotientField, bit_length_cap, char_poly, det, format_matrix,
    kernel_basis_mod, parse_matrix, parse_poly, smith_normal_form, squarefree_decomposition,
    squarefree_part, verify_snf,
)

from conftest import F, F3, G, companion, nondiag7
from oracles import cofactor_det, snf_diagonal, sympy_charpoly

entries = st.integers(-9, 9)


def square(max_dim=5):
    return st.integers(1, max_dim).flatmap(
        lambda n: st.lists(st.lists(entries, min_size=n, max_size=n), min_size=n, max_size=n))


def poly_strategy(max_deg=4):
    return st.lists(st.integers(-6, 6), min_size=2, max_size=max_deg + 1).map(IntPoly).filter(
        lambda p: p.degree >= 1)


# -- char_poly -------------------------------------------------------------

def test_char_poly_identity():
    assert char_poly(IntMatrix.identity(3)) == IntPoly((-1, 3, -3, 1))


def test_char_poly_companion():
    M = IntMatrix.from_rows([[0, 0, 1], [1, 0, 0], [0, 1, 1]])
    assert M == companion(F)
    assert char_poly(M) == F


def test_char_poly_block_example():
    M = nondiag7()
    assert char_poly(M) == F * G * G
    assert char_poly(M).degree == 7


@given(square(6))
def test_char_poly_matches_sympy(rows):
    assert char_poly(IntMatrix.from_rows(rows)).coeffs == sympy_charpoly(rows)


def test_cayley_hamilton_random():
    rng = random.Random(7)
    for _ in range(40):
        n = rng.randint(1, 8)
        M = IntMatrix.from_rows([[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)])
        assert M.eval_poly(char_poly(M)).is_zero()


@given(square(5))
def test_det_matches_cofactor(rows):
    assert det(rows) == cofactor_det(rows)
    assert IntMatrix.from_rows(rows).char_poly().coeffs[0] == (-1) ** len(rows) * cofactor_det(rows)


# -- Smith normal form -----------------------------------------------------

def test_snf_examples():
    assert smith_normal_form(IntMatrix.diag(2, 3)).diagonal == (1, 6)
    assert smith_normal_form(companion(F).sub_scalar(1)).diagonal == (1, 1, 1)
    assert smith_normal_form(companion(F3).sub_scalar(1)).diagonal == (1, 1, 3)


@given(square(4))
def test_snf_reconstruction_and_oracle(rows):
    res = smith_normal_form(rows)
    assert verify_snf(rows, res)
    diag = res.diagonal
    nz = [d for d in diag if d]
    assert all(b % a == 0 for a, b in zip(nz, nz[1:]))
    assert all(d >= 0 for d in diag)
    assert abs(det(res.U)) == 1 and abs(det(res.V)) == 1
    assert diag == snf_diagonal(rows)
    d = det(rows)
    if d:
        prod = 1
        for x in diag:
            prod *= x
        assert prod == abs(d)


def test_snf_rectangular_kernel():
    rows = [[1, 2, 3], [2, 4, 6]]
    res = smith_normal_form(rows)
    assert verify_snf(rows, res)
    assert res.rank == 1
    for v in res.kernel_basis():
        assert all(sum(a * b for a, b in zip(r, v)) == 0 for r in rows)


# -- squarefree part -------------------------------------------------------

def test_squarefree_examples():
    assert squarefree_part(F) == F
    assert squarefree_part(G * G) == G
    assert squarefree_part(IntPoly.from_roots([1, 1, 1])) == IntPoly((-1, 1))
    with pytest.raises(ValueError):
        squarefree_part(IntPoly(()))


@given(poly_strategy(), poly_strategy())
def test_squarefree_part_ignores_squares(p, q):
    from inoue.linalg import poly_gcd
    if poly_gcd(p, q).degree > 0:
        return
    a = squarefree_part(p * q * q)
    b = squarefree_part(p * q)
    assert a == b or a == -b


@given(poly_strategy(6))
def test_yun_decomposition_reassembles(p):
    parts = squarefree_decomposition(p)
    prod = IntPoly((1,))
    for f, k in parts:
        prod = prod * f ** k
    # agrees up to a constant factor
    assert prod.degree == p.degree
    assert (p * prod.lc).coeffs == (prod * p.lc).coeffs


# -- quotient fields -------------------------------------------------------

def test_kernel_companion_one_dimensional():
    M = companion(F)
    K = QuotientField(F)
    A = K.shift(K.matrix(M), K.gen())
    basis = kernel_basis_mod(F, A)
    assert len(basis) == 1
    v = basis[0]
    assert K.matvec(A, v) == [K.zero()] * 3
    assert v[0] == K.one()


def test_kernel_jordan_block():
    M = nondiag7()
    K = QuotientField(G)
    A = K.shift(K.matrix(M), K.gen())
    assert len(kernel_basis_mod(G, A)) == 1
    A2 = K.matmul(A, A)
    assert len(kernel_basis_mod(G, A2)) == 2
    for v in kernel_basis_mod(G, A2):
        assert K.matvec(A2, v) == [K.zero()] * 7


def test_kernel_of_zero_matrix_is_standard_basis():
    p = IntPoly((1, 0, 1))
    K = QuotientField(p)
    Z = [[K.zero()] * 3 for _ in range(3)]
    basis = kernel_basis_mod(p, Z)
    assert basis == [[K.one() if i == j else K.zero() for i in range(3)] for j in range(3)]


def test_kernel_detects_reducible_modulus():
    p = IntPoly((-1, 0, 1))  # (x-1)(x+1)
    K = QuotientField(p)
    A = [[K.from_poly([-1, 1])]]
    with pytest.raises(ZeroDivisorError):
        kernel_basis_mod(p, A)


def test_kernel_vectors_annihilate_random():
    rng = random.Random(3)
    K = QuotientField(F)
    for _ in range(10):
        A = [[K.from_poly([rng.randint(-3, 3) for _ in range(3)]) for _ in range(4)] for _ in range(3)]
        for v in kernel_basis_mod(F, A):
            assert K.matvec(A, v) == [K.zero()] * 3


# -- guardrail and I/O -----------------------------------------------------

def test_bit_cap():
    big = IntMatrix.diag(1 << 200, 1)
    with bit_length_cap(100):
        with pytest.raises(BitLengthExceeded):
            big @ big


def test_parse_formats_round_trip():
    M = companion(F)
    assert parse_matrix(format_matrix(M)) == M
    assert parse_matrix(json.dumps([list(r) for r in M.rows])) == M
    assert parse_poly("-1 0 -1 1") == F
    assert parse_poly("[-1, 0, -1, 1]") == F


@pytest.mark.parametrize("text", ["3\n1 2 3\n4 5\n7 8 9\n", "2\n1 x\n3 4\n", "[[1, 2], [3]]", ""])
def test_parse_errors_are_positioned(text):
    with pytest.raises(InputFormatError):
        parse_matrix(text)


def test_parse_error_mentions_line():
    with pytest.raises(InputFormatError, match="line 3"):
        parse_matrix("2\n1 2\n3 y\n")
