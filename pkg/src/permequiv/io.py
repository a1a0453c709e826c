"""Text and JSON formats for matrices, vectors, keys and reports.

Matrix text format::

    field 7          # or: field Q
    size 3 6
    6 1 3 1 0 0
    0 6 1 3 1 0
    0 0 6 1 3 1

The JSON rendering carries the same fields: ``{"field": 7, "size": [3, 6],
"rows": [[...], ...]}``; rational entries are strings ``"a/b"``.
"""
from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterator, Sequence

from .algebra import Field
from .codes import ReedSolomonCode
from .linalg import Matrix
from .mceliece import PublicKey, SecretKey
from .perm import Permutation


class FormatError(ValueError):
    def __init__(self, msg: str, line: int | None = None, col: int | None = None):
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {col}" if col is not None else "") + ": "
        super().__init__(where + msg)
        self.line, self.col = line, col


def _lines(text: str) -> Iterator[tuple[int, str]]:
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield no, line


class _Reader:
    def __init__(self, text: str):
        self.items = list(_lines(text))
        self.pos = 0

    def peek(self) -> tuple[int, str] | None:
        return self.items[self.pos] if self.pos < len(self.items) else None

    def next(self, what: str) -> tuple[int, str]:
        item = self.peek()
        if item is None:
            last = self.items[-1][0] if self.items else 1
            raise FormatError(f"unexpected end of input, expected {what}", last)
        self.pos += 1
        return item


def _parse_entries(F: Field, line: str, no: int) -> list:
    out = []
    col = 1
    for tok in line.split():
        col = line.index(tok, col - 1) + 1
        try:
            out.append(F.parse(tok))
        except (ValueError, ZeroDivisionError):
            raise FormatError(f"bad entry {tok!r}", no, col) from None
        col += len(tok)
    return out


def _read_matrix(r: _Reader) -> Matrix:
    no, line = r.next("'field' line")
    parts = line.split()
    if parts[0] != "field" or len(parts) != 2:
        raise FormatError("expected 'field <p>' or 'field Q'", no, 1)
    try:
        F = Field.from_str(parts[1])
    except ValueError as exc:
        raise FormatError(str(exc), no, line.index(parts[1]) + 1) from None
    no, line = r.next("'size' line")
    parts = line.split()
    if parts[0] != "size" or len(parts) != 3 or not all(p.isdigit() for p in parts[1:]):
        raise FormatError("expected 'size <rows> <cols>'", no, 1)
    k, n = int(parts[1]), int(parts[2])
    rows = []
    for _ in range(k):
        no, line = r.next(f"{k} matrix rows")
        entries = _parse_entries(F, line, no)
        if len(entries) != n:
            raise FormatError(f"expected {n} entries, found {len(entries)}", no)
        rows.append(entries)
    return Matrix(F, rows, n)


def _entry_json(x):
    if isinstance(x, Fraction):
        return str(x) if x.denominator != 1 else x.numerator
    return x


def matrix_to_json(M: Matrix) -> dict:
    F = M.field
    return {"field": F.p if F.p else "Q", "size": [M.nrows, M.ncols],
            "rows": [[_entry_json(x) for x in r] for r in M.rows]}


def matrix_from_json(obj: dict) -> Matrix:
    try:
        F = Field.from_str(str(obj["field"]))
        k, n = obj["size"]
        rows = [[F(x) if not isinstance(x, str) else F.parse(x) for x in r] for r in obj["rows"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"bad JSON matrix: {exc}") from None
    if len(rows) != k or any(len(r) != n for r in rows):
        raise FormatError("JSON matrix rows disagree with its size")
    return Matrix(F, rows, n)


def parse_matrix(text: str) -> Matrix:
    if text.lstrip().startswith("{"):
        try:
            return matrix_from_json(json.loads(text))
        except json.JSONDecodeError as exc:
            raise FormatError(exc.msg, exc.lineno, exc.colno) from None
    r = _Reader(text)
    M = _read_matrix(r)
    extra = r.peek()
    if extra is not None:
        raise FormatError("trailing content after matrix", extra[0])
    return M


def format_matrix(M: Matrix) -> str:
    lines = [f"field {M.field}", f"size {M.nrows} {M.ncols}"]
    lines += [" ".join(str(x) for x in r) for r in M.rows]
    return "\n".join(lines) + "\n"


def parse_vector(text: str, F: Field) -> tuple:
    """Whitespace-separated entries, optionally after a 'field' line that must match F."""
    items = list(_lines(text))
    if items and items[0][1].startswith("field"):
        no, line = items.pop(0)
        if Field.from_str(line.split()[1]) != F:
            raise FormatError(f"field mismatch: file says {line.split()[1]}, expected {F}", no)
    out = []
    for no, line in items:
        out += _parse_entries(F, line, no)
    return tuple(out)


def format_vector(v: Sequence) -> str:
    return " ".join(str(x) for x in v) + "\n"


def format_code(code: ReedSolomonCode) -> str:
    return f"rs {code.q} {code.alpha} {code.d}\n" + format_matrix(code.generator)


def parse_generator(text: str) -> tuple[Matrix, ReedSolomonCode | None]:
    """Generator matrix, with the RS parameters when an 'rs q alpha d' header is present."""
    items = list(_lines(text))
    if items and items[0][1].startswith("rs"):
        code = _parse_rs(*items[0])
        body = "\n".join(line for _, line in items[1:])
        return parse_matrix(body) if body else code.generator, code
    return parse_matrix(text), None


def _parse_rs(no: int, line: str) -> ReedSolomonCode:
    parts = line.split()
    if len(parts) != 4 or not all(p.isdigit() for p in parts[1:]):
        raise FormatError("expected 'rs <q> <alpha> <d>'", no, 1)
    try:
        return ReedSolomonCode(*map(int, parts[1:]))
    except ValueError as exc:
        raise FormatError(str(exc), no) from None


# keys

def format_secret_key(sec: SecretKey) -> str:
    return (f"rs {sec.code.q} {sec.code.alpha} {sec.code.d}\nS\n" + format_matrix(sec.S)
            + f"P {sec.perm if not sec.perm.is_identity() else '()'}\n")


def format_public_key(pub: PublicKey) -> str:
    return f"t {pub.t}\nG1\n" + format_matrix(pub.G1)


def secret_key_to_json(sec: SecretKey) -> dict:
    return {"rs": [sec.code.q, sec.code.alpha, sec.code.d], "S": matrix_to_json(sec.S),
            "P": str(sec.perm)}


def public_key_to_json(pub: PublicKey) -> dict:
    return {"t": pub.t, "G1": matrix_to_json(pub.G1)}


def parse_secret_key(text: str) -> SecretKey:
    if text.lstrip().startswith("{"):
        obj = json.loads(text)
        code = ReedSolomonCode(*obj["rs"])
        S = matrix_from_json(obj["S"])
        perm = Permutation.parse(obj["P"], code.n)
        return SecretKey(code, S, perm)
    r = _Reader(text)
    code = _parse_rs(*r.next("'rs' line"))
    no, line = r.next("'S'")
    if line != "S":
        raise FormatError("expected 'S'", no, 1)
    S = _read_matrix(r)
    no, line = r.next("'P' line")
    if not line.startswith("P"):
        raise FormatError("expected 'P <cycles>'", no, 1)
    try:
        perm = Permutation.parse(line[1:].strip(), code.n)
    except ValueError as exc:
        raise FormatError(str(exc), no, 3) from None
    if S.field != code.field:
        raise FormatError("S is over a different field than the code")
    return SecretKey(code, S, perm)


def parse_public_key(text: str) -> PublicKey:
    """Public key file, or a bare G1 matrix (t then follows from n - k + 1)."""
    if text.lstrip().startswith("{"):
        obj = json.loads(text)
        if "G1" in obj:
            return PublicKey(matrix_from_json(obj["G1"]), int(obj["t"]))
        G1 = matrix_from_json(obj)
        return PublicKey(G1, (G1.ncols - G1.nrows) // 2)
    r = _Reader(text)
    head = r.peek()
    if head is not None and head[1].startswith("field"):
        G1 = parse_matrix(text)
        return PublicKey(G1, (G1.ncols - G1.nrows) // 2)
    no, line = r.next("'t' line")
    parts = line.split()
    if parts[0] != "t" or len(parts) != 2 or not parts[1].isdigit():
        raise FormatError("expected 't <weight>'", no, 1)
    no, line = r.next("'G1'")
    if line != "G1":
        raise FormatError("expected 'G1'", no, 1)
    return PublicKey(_read_matrix(r), int(parts[1]))


# reports

def attack_report(res) -> dict:
    return {
        "verified": res.verified,
        "alpha": res.alpha,
        "sigma": str(res.sigma),
        "candidates_tried": res.candidates_tried,
        "P": matrix_to_json(res.P),
        "S_inv": matrix_to_json(res.S_inv) if res.S_inv is not None else None,
        "W": [list(w) for w in res.W],
    }


def format_attack_report(res) -> str:
    out = [f"verified: {'true' if res.verified else 'false'}"]
    if res.alpha is not None:
        out.append(f"alpha: {res.alpha}")
    out += [f"sigma: {res.sigma}", f"candidates_tried: {res.candidates_tried}", "P"]
    text = "\n".join(out) + "\n" + format_matrix(res.P)
    if res.S_inv is not None:
        text += "S_inv\n" + format_matrix(res.S_inv)
    if res.W:
        text += "W\n" + format_matrix(Matrix(res.field, res.W, len(res.W[0])))
    return text


def solution_report(sol) -> dict:
    return {"X": matrix_to_json(sol.X), "sigma": str(sol.sigma), "Y": matrix_to_json(sol.Y)}


def format_solution(sol) -> str:
    return (f"sigma: {sol.sigma}\nX\n" + format_matrix(sol.X) + "Y\n" + format_matrix(sol.Y))
