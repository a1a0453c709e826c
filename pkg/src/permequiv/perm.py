"""Permutations on {1..n} with the conventions used throughout the package.

* ``compose(outer, inner)(i) == outer(inner(i))``; ``outer * inner`` is the same
  product, so ``Permutation.parse("(15326)") * Permutation.parse("(54362)")``
  gives ``(15423)``.
* ``act(s, v)[i] == v[s(i)]`` (1-based), so ``act(s, act(t, v)) == act(t * s, v)``.
* ``perm_matrix(s)`` has its ones at ``(i, s(i))``; ``act(s, v) == v @ perm_matrix(s**-1)``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .algebra import QQ, Field
from .linalg import Matrix


@dataclass(frozen=True, order=True)
class Permutation:
    """One-line notation: ``image[i-1] == sigma(i)``."""

    image: tuple[int, ...]

    def __post_init__(self):
        image = tuple(int(x) for x in self.image)
        if sorted(image) != list(range(1, len(image) + 1)):
            raise ValueError(f"{list(image)} is not a permutation of 1..{len(image)}")
        object.__setattr__(self, "image", image)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.image)

    def __call__(self, i: int) -> int:
        return self.image[i - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def __pow__(self, e: int) -> Permutation:
        base = self if e >= 0 else inverse(self)
        result = Permutation.identity(self.n)
        for _ in range(abs(e)):
            result = compose(base, result)
        return result

    def inverse(self) -> Permutation:
        return inverse(self)

    def is_identity(self) -> bool:
        return all(x == i for i, x in enumerate(self.image, start=1))

    def cycles(self) -> list[tuple[int, ...]]:
        return cycles(self)

    def __str__(self) -> str:
        cs = self.cycles()
        if not cs:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cs)

    def one_line(self) -> str:
        return "[" + ",".join(map(str, self.image)) + "]"

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> Permutation:
        """Parse cycle notation ``(1 5 4 2 3)(6)`` or one-line ``[5,3,1,2,4,6]``.

        A cycle written without separators, like ``(15423)``, is read digit by
        digit.  ``n`` defaults to the largest entry mentioned.
        """
        text = text.strip()
        if text.startswith("["):
            body = text.strip("[]")
            image = [int(t) for t in re.split(r"[,\s]+", body) if t]
            p = cls(tuple(image))
            if n is not None and p.n != n:
                raise ValueError(f"expected {n} entries, got {p.n}")
            return p
        if text in ("", "()", "e"):
            if n is None:
                raise ValueError("size needed for the identity")
            return cls.identity(n)
        if not re.fullmatch(r"(\([\d\s,]*\)\s*)+", text):
            raise ValueError(f"malformed cycle notation: {text!r}")
        cyc = []
        for body in re.findall(r"\(([^)]*)\)", text):
            toks = [t for t in re.split(r"[,\s]+", body) if t]
            if len(toks) == 1 and len(toks[0]) > 1:
                toks = list(toks[0])
            cyc.append(tuple(int(t) for t in toks))
        size = n if n is not None else max((max(c) for c in cyc if c), default=0)
        return from_cycles(cyc, size)


def _check_sizes(a: Permutation, b: Permutation):
    if a.n != b.n:
        raise ValueError(f"size mismatch: {a.n} vs {b.n}")


def compose(outer: Permutation, inner: Permutation) -> Permutation:
    """``i -> outer(inner(i))``: the right factor applies first."""
    _check_sizes(outer, inner)
    return Permutation(tuple(outer.image[j - 1] for j in inner.image))


def inverse(s: Permutation) -> Permutation:
    inv = [0] * s.n
    for i, j in enumerate(s.image, start=1):
        inv[j - 1] = i
    return Permutation(tuple(inv))


def act(s: Permutation, v: Sequence) -> tuple:
    """``s * v = (v[s(1)], ..., v[s(n)])``."""
    if len(v) != s.n:
        raise ValueError(f"size mismatch: permutation on {s.n}, vector of length {len(v)}")
    return tuple(v[j - 1] for j in s.image)


def cycles(s: Permutation) -> list[tuple[int, ...]]:
    """Disjoint cycles, each starting at its smallest entry; fixed points dropped."""
    seen = set()
    out = []
    for start in range(1, s.n + 1):
        if start in seen or s(start) == start:
            continue
        c = [start]
        seen.add(start)
        j = s(start)
        while j != start:
            c.append(j)
            seen.add(j)
            j = s(j)
        out.append(tuple(c))
    return out


def from_cycles(cyc: Iterable[Sequence[int]], n: int) -> Permutation:
    image = list(range(1, n + 1))
    used = set()
    for c in cyc:
        for x in c:
            if not 1 <= x <= n:
                raise ValueError(f"cycle entry {x} outside 1..{n}")
            if x in used:
                raise ValueError(f"cycles overlap at {x}")
            used.add(x)
        for a, b in zip(c, list(c[1:]) + list(c[:1])):
            image[a - 1] = b
    return Permutation(tuple(image))


def perm_matrix(s: Permutation, F: Field | None = None) -> Matrix:
    """I_n(s): the identity with column i moved to column s(i)."""
    F = F or QQ
    n = s.n
    rows = [[0] * n for _ in range(n)]
    for i, j in enumerate(s.image):
        rows[i][j - 1] = 1
    return Matrix(F, rows, n)


def matrix_to_perm(M: Matrix) -> Permutation:
    if M.nrows != M.ncols:
        raise ValueError("a permutation matrix is square")
    image = []
    for r in M.rows:
        ones = [j for j, x in enumerate(r) if x != 0]
        if len(ones) != 1 or r[ones[0]] != 1:
            raise ValueError("not a permutation matrix")
        image.append(ones[0] + 1)
    try:
        return Permutation(tuple(image))
    except ValueError:
        raise ValueError("not a permutation matrix") from None


def shift_cycle(n: int) -> Permutation:
    """tau = (n n-1 ... 2 1); act(tau, v) shifts v one place to the right."""
    return from_cycles([tuple(range(n, 0, -1))], n)
