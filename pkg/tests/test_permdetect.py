from itertools import permutations

import pytest
from hypothesis import given, strategies as st

from permequiv.algebra import GF, Poly, q_vector
from permequiv.perm import Permutation, act
from permequiv.permdetect import (detect_all, detect_first, detect_sorted, expected_count,
                                  incidence_matrix, is_perm_equiv, primitive_order,
                                  projective_match, projective_scalars, r_vector,
                                  vanishing_condition)

from conftest import V, W

F5, F7 = GF(5), GF(7)
P = Permutation.parse


def brute_force(v, w):
    n = len(v)
    return sorted(Permutation(tuple(s)) for s in permutations(range(1, n + 1))
                  if act(Permutation(tuple(s)), v) == tuple(w))


@st.composite
def pairs(draw, p=5, max_n=7):
    n = draw(st.integers(1, max_n))
    v = tuple(draw(st.lists(st.integers(0, p - 1), min_size=n, max_size=n)))
    if draw(st.booleans()):
        s = Permutation(tuple(draw(st.permutations(range(1, n + 1)))))
        return v, act(s, v)
    return v, tuple(draw(st.lists(st.integers(0, p - 1), min_size=n, max_size=n)))


def test_detect_first_worked():
    res = detect_first(V, W)
    assert res.found and res.witness == P("(15423)", 6)
    assert res.witness.image == (5, 3, 1, 2, 4, 6)


def test_detect_first_trivial():
    assert detect_first(V, V).witness.is_identity()
    assert not detect_first((1, 2), (1, 1)).found


def test_detect_sorted_worked():
    assert detect_sorted(V, W).witness == P("(15423)", 6)
    assert detect_sorted(V, V).witness.is_identity()
    assert detect_sorted((0, 1), (1, 0)).witness == P("(12)")


def test_detect_sorted_primitive_order():
    res = detect_sorted(V, W, key=primitive_order(3, F7))
    assert act(res.witness, V) == W


def test_detect_all_worked():
    got = detect_all(V, W, F7)
    assert set(got) == {P(s, 6) for s in ["(15423)", "(1523)", "(165423)", "(16523)"]}


def test_r_vector_worked():
    D, R = r_vector(V, F7)
    assert D == Poly(F7, [0, 6, 1])  # (T - 1) T
    M = incidence_matrix(V, W, F7)
    assert M == [[0, 0, 0, 0, 1, 1], [0, 0, 1, 0, 0, 0], [1, 0, 0, 0, 0, 0],
                 [0, 1, 0, 1, 0, 0], [0, 1, 0, 1, 0, 0], [0, 0, 0, 0, 1, 1]]


def test_detect_all_trivial():
    assert detect_all((1, 2, 3), (1, 2, 3), F7) == [Permutation.identity(3)]
    assert detect_all((1, 2), (1, 1), F7) == []


def test_detect_all_constant_vector_bound():
    assert len(detect_all((0,) * 4, (0,) * 4, F7)) == 24
    with pytest.raises(ValueError):
        detect_all((0,) * 9, (0,) * 9, F7)


def test_size_mismatch():
    with pytest.raises(ValueError):
        detect_first((1,), (1, 2))
    with pytest.raises(ValueError):
        detect_all((1,), (1, 2), F7)


def test_is_perm_equiv():
    assert is_perm_equiv(V, W, F7)
    assert not is_perm_equiv((1, 2), (1, 1), F7)


def test_vanishing_condition_is_only_necessary():
    # every w_j is a root of Q_v, yet w is not a rearrangement of v
    assert vanishing_condition((1, 2), (1, 1), F7)
    assert not is_perm_equiv((1, 2), (1, 1), F7)


@pytest.mark.parametrize("w, expected", [
    ((5, 2, 0, 5, 0, 1), 5), ((5, 5, 1, 1, 0, 0), None), (V, 1),
])
def test_projective_match(w, expected):
    assert projective_match(V, w, F7) == expected


def test_projective_match_zero():
    with pytest.raises(ValueError):
        projective_match((0, 0), (1, 0), F7)


@given(pairs())
def test_oracle(pair):
    v, w = pair
    assert detect_all(v, w, F5) == brute_force(v, w)


@given(pairs(max_n=8))
def test_methods_agree(pair):
    v, w = pair
    all_ = detect_all(v, w, F5)
    first, srt = detect_first(v, w), detect_sorted(v, w)
    assert first.found == srt.found == bool(all_) == is_perm_equiv(v, w, F5)
    if all_:
        assert first.witness in all_ and srt.witness in all_


@given(st.data())
def test_cardinality_law(data):
    n = data.draw(st.integers(1, 7))
    v = tuple(data.draw(st.lists(st.integers(0, 4), min_size=n, max_size=n)))
    s = Permutation(tuple(data.draw(st.permutations(range(1, n + 1)))))
    assert len(detect_all(v, act(s, v), F5)) == expected_count(v)


@given(st.data())
def test_incidence_rows(data):
    n = data.draw(st.integers(1, 7))
    v = tuple(data.draw(st.lists(st.integers(0, 6), min_size=n, max_size=n)))
    s = Permutation(tuple(data.draw(st.permutations(range(1, n + 1)))))
    w = act(s, v)
    M = incidence_matrix(v, w, F7)
    for j, row in enumerate(M):
        assert row == [int(v[i] == w[j]) for i in range(n)]


@given(st.data())
def test_projective_properties(data):
    n = data.draw(st.integers(1, 7))
    v = tuple(data.draw(st.lists(st.integers(0, 6), min_size=n, max_size=n)))
    if not any(v):
        return
    c = data.draw(st.integers(1, 6))
    s = Permutation(tuple(data.draw(st.permutations(range(1, n + 1)))))
    w = tuple(c * x % 7 for x in act(s, v))
    c2 = projective_match(v, w, F7)
    assert c2 is not None and c in projective_scalars(v, w, F7)
    qv, qw = q_vector(v, F7), q_vector(w, F7)
    assert all(qw[j] == qv[j] * pow(c2, j + 1, 7) % 7 for j in range(len(qv)))
    inv = pow(c2, -1, 7)
    assert detect_all(v, tuple(inv * x % 7 for x in w), F7)
