import pytest
from hypothesis import given, settings, strategies as st

from permequiv.algebra import GF, Poly, poly_roots_in_field, primitive_elements
from permequiv.attack import (AttackError, PrimitiveCandidate, all_keys, build_candidates,
                              conjugate_rows, full_attack, gcd_system, g_row,
                              iter_recoveries, primitive_candidates, recover_S_inv,
                              recover_permutation, recover_primitive_elements,
                              select_classes, symbolic_g_coeffs, u_polynomial,
                              variety_attack, verify)
from permequiv.codes import rs_generator
from permequiv.linalg import Matrix, inverse
from permequiv.mceliece import keygen
from permequiv.perm import Permutation, act, perm_matrix
from permequiv.permdetect import is_perm_equiv

from conftest import F7, P_ROWS, S_INV, W_ROWS

P = Permutation.parse
g = (6, 1, 3, 1, 0, 0)


def test_select_and_build(G1):
    sel = select_classes(G1, g)
    assert len(sel) == 6
    assert (1, 1, 3, 3, 0, 5) not in {w for w, _ in sel}  # class of [5,5,1,1,0,0]
    assert set(build_candidates(G1, g)) == set(W_ROWS)


def test_build_candidates_identity_key(G):
    assert g in build_candidates(G, g)


def test_build_candidates_wrong_g(G1):
    with pytest.raises(AttackError):
        build_candidates(G1, (1, 1, 1, 1, 0, 0))


def test_conjugate_rows_worked():
    w = (0, 3, 6, 1, 1, 0)
    assert conjugate_rows(w, P("(15423)", 6), 3)[1] == (1, 1, 0, 6, 3, 0)
    assert conjugate_rows(w, P("(16523)", 6), 3) == [w, (0, 1, 0, 3, 6, 1), (1, 6, 0, 1, 0, 3)]


def test_recover_permutation_worked(G1):
    W = build_candidates(G1, g)
    res = recover_permutation(W, g, 3, F7, start=(0, 3, 6, 1, 1, 0))
    assert res.sigma == P("(16523)", 6)
    assert res.P.tolist() == P_ROWS
    sigmas = [s for _, s, _ in iter_recoveries(W, g, 3, start=(0, 3, 6, 1, 1, 0))]
    assert P("(15423)", 6) not in sigmas
    assert recover_S_inv(G1, res.rows).tolist() == S_INV


def test_recover_permutation_identity(G):
    W = build_candidates(G, g)
    res = recover_permutation(W, g, 3, F7, start=g)
    assert res.sigma.is_identity()
    assert recover_S_inv(G, res.rows) == Matrix.identity(F7, 3)


def test_full_attack_worked(G1, G):
    res = full_attack(G1, 3)
    assert res.verified
    assert res.S @ G @ res.P == G1
    picked = full_attack(G1, 3, start=(0, 3, 6, 1, 1, 0))
    assert picked.sigma == P("(16523)", 6) and picked.S_inv.tolist() == S_INV
    keys = all_keys(G1, 3)
    assert any(k.S_inv.tolist() == S_INV and k.P.tolist() == P_ROWS for k in keys)
    assert all(k.verified for k in keys)


def test_full_attack_identity(G):
    res = full_attack(G, 3)
    assert res.verified
    assert verify(G, G, Matrix.identity(F7, 3), Permutation.identity(6))


def test_variety_attack_worked(G1):
    assert variety_attack(G1, 3).verified
    assert variety_attack(G1, 3, strategy="backtrack").verified


def test_attack_rejects_bad_field():
    with pytest.raises(ValueError):
        full_attack(Matrix(F7, [[1, 0, 0]], 3), 3)


def test_symbolic_coefficients():
    c = symbolic_g_coeffs(4, F7)
    X = Poly.x(F7)
    one = Poly.const(F7, 1)
    s = one + X + X**2
    assert c == [-(X**6), X**3 * s, -(X * s), one]
    assert symbolic_g_coeffs(2, F7) == [-X, one]
    assert g_row(3, 4, F7) == (6, 1, 3, 1)


def test_u_polynomial_roots():
    assert poly_roots_in_field(u_polynomial((5, 4, 4, 4), F7)) == {1: 2, 3: 2}
    assert poly_roots_in_field(u_polynomial((4, 2, 3, 4), F7)) == {1: 2, 5: 1, 6: 1}


def test_gcd_system_worked():
    gcds = gcd_system((3, 0, 1, 6, 0, 1), 4, F7)
    assert gcds == {1: Poly(F7, [-3 % 7, 1]), 5: Poly(F7, [1]), 6: Poly(F7, [2, 1])}
    assert all(h.degree == 0 for h in gcd_system((5, 5, 1, 1, 0, 0), 4, F7).values())


def test_primitive_candidates_worked():
    assert primitive_candidates((5, 5, 1, 1, 0, 0), 4, F7) == []
    assert primitive_candidates((3, 0, 1, 6, 0, 1), 4, F7) == [
        PrimitiveCandidate(3, 1), PrimitiveCandidate(5, 6)]


def test_recover_primitive_elements(G1):
    found = recover_primitive_elements(G1)
    assert set(found) == set(primitive_elements(7)) == {3, 5}


def test_unknown_alpha(G1):
    res = full_attack(G1)
    assert res.verified and res.alpha in (3, 5)


@given(st.sampled_from([5, 7, 11]).flatmap(
    lambda q: st.tuples(st.just(q), st.sampled_from(primitive_elements(q)),
                        st.integers(2, q - 2))), st.data())
def test_primitive_candidates_synthetic(params, data):
    q, alpha, d = params
    F = GF(q)
    n = q - 1
    row = rs_generator(q, alpha, d).g
    c = data.draw(st.integers(1, q - 1))
    s = Permutation(tuple(data.draw(st.permutations(range(1, n + 1)))))
    w = tuple(c * x % q for x in act(s, row))
    cands = primitive_candidates(w, d, F)
    assert PrimitiveCandidate(alpha, c) in cands
    for cand in cands:
        cg = tuple(cand.c * x % q for x in rs_generator(q, cand.alpha, d).g)
        assert is_perm_equiv(cg, w, F)


@settings(max_examples=25)
@given(st.sampled_from([5, 7, 11]).flatmap(
    lambda q: st.tuples(st.just(q), st.sampled_from(primitive_elements(q)),
                        st.integers(2, q - 2))), st.integers(0, 2**32))
def test_attack_soundness(params, seed):
    sec, pub = keygen(*params, seed=seed)
    res = full_attack(pub.G1, params[1])
    assert res.verified
    assert inverse(res.S_inv) @ sec.G @ perm_matrix(res.sigma.inverse(), sec.code.field) == pub.G1
    W = build_candidates(pub.G1, sec.G.row(0))
    assert len(W) >= sec.code.k


@settings(max_examples=15)
@given(st.sampled_from([5, 7]).flatmap(lambda q: st.sampled_from(
    [(q, a, d) for a in primitive_elements(q) for d in range(2, q - 1)])), st.integers(0, 2**32))
def test_variety_agrees(params, seed):
    sec, pub = keygen(*params, seed=seed)
    assert variety_attack(pub.G1, params[1]).verified
    assert full_attack(pub.G1, params[1]).verified
