import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from permequiv import io
from permequiv.algebra import GF, QQ
from permequiv.linalg import Matrix
from permequiv.mceliece import keygen

from conftest import DATA, G1_ROWS


def test_parse_fixture():
    M = io.parse_matrix((DATA / "g1.mat").read_text())
    assert M.field == GF(7) and M.tolist() == G1_ROWS


def test_rationals_and_json_agree():
    text = "field Q\nsize 1 3\n1/2 -3 0\n"
    M = io.parse_matrix(text)
    assert M.rows[0] == (Fraction(1, 2), -3, 0)
    assert io.parse_matrix(json.dumps(io.matrix_to_json(M))) == M
    assert io.parse_matrix(io.format_matrix(M)) == M


@pytest.mark.parametrize("text, line, col", [
    ("field 7\nsize 1 2\n1 x\n", 3, 3),
    ("field 8\nsize 1 1\n1\n", 1, 7),
    ("field 7\nsize 2 2\n1 2\n", 3, None),
    ("field 7\nsize 1 2\n1 2 3\n", 3, None),
    ("fld 7\n", 1, 1),
    ("field 7\nsize 1 1\n1\n2\n", 4, None),
])
def test_diagnostics(text, line, col):
    with pytest.raises(io.FormatError) as exc:
        io.parse_matrix(text)
    assert exc.value.line == line and exc.value.col == col
    assert f"line {line}" in str(exc.value)


def test_bad_json():
    with pytest.raises(io.FormatError) as exc:
        io.parse_matrix('{"field": 7, "size": [1, 2], "rows": [[1]]}')
    assert "size" in str(exc.value)
    with pytest.raises(io.FormatError):
        io.parse_matrix('{"field": 7,\n "size": }')


def test_vector_field_check():
    assert io.parse_vector("field 7\n1 2 9\n", GF(7)) == (1, 2, 2)
    with pytest.raises(io.FormatError):
        io.parse_vector("field 5\n1 2\n", GF(7))


def test_key_round_trips():
    sec, pub = keygen(7, 3, 4, seed=11)
    sec2 = io.parse_secret_key(io.format_secret_key(sec))
    assert (sec2.code, sec2.S, sec2.perm) == (sec.code, sec.S, sec.perm)
    sec3 = io.parse_secret_key(json.dumps(io.secret_key_to_json(sec)))
    assert sec3.perm == sec.perm
    assert io.parse_public_key(io.format_public_key(pub)) == pub
    assert io.parse_public_key(json.dumps(io.public_key_to_json(pub))) == pub
    # a bare matrix is accepted as a public key
    assert io.parse_public_key(io.format_matrix(pub.G1)) == pub


def test_code_header():
    from permequiv.codes import ReedSolomonCode
    code = ReedSolomonCode(7, 3, 4)
    G, parsed = io.parse_generator(io.format_code(code))
    assert parsed == code and G == code.generator


@given(st.sampled_from([2, 5, 7, 13]), st.data())
def test_matrix_text_round_trip(p, data):
    k = data.draw(st.integers(0, 4))
    n = data.draw(st.integers(1, 5))
    rows = data.draw(st.lists(st.lists(st.integers(0, p - 1), min_size=n, max_size=n),
                              min_size=k, max_size=k))
    M = Matrix(GF(p), rows, n)
    assert io.parse_matrix(io.format_matrix(M)) == M
    assert io.matrix_from_json(io.matrix_to_json(M)) == M


@given(st.lists(st.lists(st.fractions(), min_size=3, max_size=3), min_size=1, max_size=3))
def test_rational_round_trip(rows):
    M = Matrix(QQ, rows, 3)
    assert io.parse_matrix(io.format_matrix(M)) == M
    assert io.parse_matrix(json.dumps(io.matrix_to_json(M))) == M
