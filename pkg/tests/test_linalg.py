import pytest
from hypothesis import given, strategies as st

from permequiv.algebra import GF, QQ
from permequiv.linalg import (Matrix, NotACodewordError, SingularMatrixError, decode, inverse,
                              is_invertible, kernel_basis, matmul, parity_check, rank, rref,
                              standard_form, vecmat)

from conftest import F7, G1_ROWS, G_RS, H_G1, S_INV

F3, F5 = GF(3), GF(5)


@st.composite
def full_rank(draw, p=5, max_k=4, max_n=7):
    F = GF(p)
    k = draw(st.integers(1, max_k))
    n = draw(st.integers(k, max_n))
    rows = draw(st.lists(st.lists(st.integers(0, p - 1), min_size=n, max_size=n),
                         min_size=k, max_size=k))
    M = Matrix(F, rows, n)
    if rank(M) < k:
        # force full rank by overwriting a block with the identity
        rows = [r[:] for r in rows]
        for i in range(k):
            rows[i][i] = 1
            for j in range(k):
                if j != i:
                    rows[i][j] = 0
        M = Matrix(F, rows, n)
    return M


def test_inverse_round_trip():
    S_inv = Matrix(F7, S_INV, 3)
    assert inverse(inverse(S_inv)) == S_inv
    assert S_inv @ inverse(S_inv) == Matrix.identity(F7, 3)


def test_inverse_singular():
    with pytest.raises(SingularMatrixError):
        inverse(Matrix(F7, [[1, 2], [2, 4]], 2))


def test_matmul_identity_and_shapes(G1):
    assert matmul(Matrix.identity(F7, 3), G1) == G1
    with pytest.raises(ValueError):
        G1 @ G1


def test_kernel_of_parity_check_is_code(G1):
    H = Matrix(F7, H_G1, 6)
    ker = kernel_basis(H)
    assert len(ker) == 3
    assert rank(Matrix(F7, list(ker) + G1_ROWS, 6)) == 3
    assert H @ G1.T == Matrix.zeros(F7, 3, 3)


def test_parity_check_worked_example(G1):
    assert parity_check(G1).tolist() == H_G1


def test_parity_check_of_identity():
    H = parity_check(Matrix.identity(F5, 4))
    assert H.shape == (0, 4)


def test_standard_form_trivial():
    M = Matrix(F5, [[1, 0, 2], [0, 1, 3]], 3)
    sf = standard_form(M)
    assert sf.S == Matrix.identity(F5, 2) and sf.P == Matrix.identity(F5, 3)


def test_standard_form_single_row():
    sf = standard_form(Matrix(F7, [[0, 5]], 2))
    assert sf.canonical.tolist() == [[1, 0]]
    assert sf.column_order == (1, 0)


def test_standard_form_rank_deficient():
    with pytest.raises(SingularMatrixError):
        standard_form(Matrix(F5, [[1, 2], [2, 4]], 2))


def test_decode_over_f3():
    G = Matrix(F3, [[1, 0, 2, 1, 0], [1, 1, 0, 1, 2], [0, 2, 1, 2, 1]], 5)
    assert decode(G, (2, 2, 1, 0, 1)) == (1, 1, 2)


def test_decode_worked_rows(G1):
    assert decode(G1, (0, 3, 6, 1, 1, 0)) == (4, 6, 1)
    assert decode(G1, (0, 1, 0, 3, 6, 1)) == (2, 3, 2)
    G = Matrix(F7, G_RS, 6)
    assert decode(G, G.row(0)) == (1, 0, 0)


def test_decode_rejects_non_codeword(G1):
    with pytest.raises(NotACodewordError):
        decode(G1, (1, 0, 0, 0, 0, 0))


def test_rational_rref():
    A = Matrix(QQ, [[8, -1, 1, 2], [11, -2, 1, 3]], 4)
    R, T, piv = rref(A)
    assert T @ A == R and piv == [0, 1]


@given(full_rank())
def test_standard_form_identity(G):
    sf = standard_form(G)
    k = G.nrows
    assert sf.S @ G @ sf.P == sf.canonical
    assert sf.canonical.select_columns(range(k)) == Matrix.identity(G.field, k)


@given(full_rank(), st.data())
def test_decode_round_trip(G, data):
    x = tuple(data.draw(st.lists(st.integers(0, 4), min_size=G.nrows, max_size=G.nrows)))
    assert decode(G, vecmat(x, G)) == x


@given(full_rank(), st.data())
def test_parity_check_characterizes_code(G, data):
    H = parity_check(G)
    assert H @ G.T == Matrix.zeros(G.field, H.nrows, G.nrows)
    w = tuple(data.draw(st.lists(st.integers(0, 4), min_size=G.ncols, max_size=G.ncols)))
    in_code = rank(Matrix(G.field, list(G.rows) + [w], G.ncols)) == G.nrows
    assert in_code == (H.nrows == 0 or all(x == 0 for x in vecmat(w, H.T)))


@given(st.lists(st.lists(st.integers(0, 4), min_size=4, max_size=4), min_size=1, max_size=4))
def test_rref_transform(rows):
    A = Matrix(F5, rows, 4)
    R, T, _ = rref(A)
    assert is_invertible(T) and T @ A == R
