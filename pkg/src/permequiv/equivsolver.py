"""Solving X A = B Y for invertible X and a permutation matrix Y.

For each row v of B the set of row candidates x (those with x A a
rearrangement of v) is computed either by scanning F_p^k or by backtracking
over value assignments to the columns of A, one linear equation per column.
The permutation sets attached to the candidates are then intersected row by
row, and X is assembled from per-row witnesses.
"""
from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass
from itertools import product
from typing import Iterator, Sequence

import numpy as np

from .algebra import Field, poly_from_roots, weight
from .config import DEFAULT_LIMITS, Limits
from .linalg import Matrix, SingularMatrixError, rank, vecmat
from .perm import Permutation, inverse, perm_matrix
from .permdetect import detect_all, is_perm_equiv

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class EquivSolution:
    X: Matrix
    Y: Matrix
    sigma: Permutation


class SearchBoundError(RuntimeError):
    pass


def linear_forms(A: Matrix) -> list[tuple]:
    """The columns of A, read as coefficient vectors of l_j(x) = (x A)_j."""
    return [A.col(j) for j in range(A.ncols)]


class _System:
    """Incrementally eliminated system of linear equations a . x = b."""

    def __init__(self, F: Field, k: int):
        self.F = F
        self.k = k
        self.rows: list[tuple[list, object, int]] = []  # (coeffs, rhs, pivot)

    def reduce(self, coeffs, rhs):
        F = self.F
        a = list(coeffs)
        for r, b, p in self.rows:
            f = a[p]
            if f != 0:
                a = [F.sub(x, F.mul(f, y)) for x, y in zip(a, r)]
                rhs = F.sub(rhs, F.mul(f, b))
        return a, rhs

    def push(self, coeffs, rhs) -> bool | None:
        """Add an equation.  False if inconsistent, True if new, None if implied."""
        a, rhs = self.reduce(coeffs, rhs)
        p = next((i for i, x in enumerate(a) if x != 0), None)
        if p is None:
            return None if rhs == 0 else False
        inv = self.F.inv(a[p])
        self.rows.append(([self.F.mul(x, inv) for x in a], self.F.mul(rhs, inv), p))
        return True

    def pop(self):
        self.rows.pop()

    @property
    def rank(self) -> int:
        return len(self.rows)

    def solution(self) -> tuple:
        """Unique solution; requires rank == k."""
        F = self.F
        x = [F.zero] * self.k
        # rows are reduced against earlier pivots only, so back-substitute in reverse
        for r, b, p in reversed(self.rows):
            s = b
            for j, c in enumerate(r):
                if j != p and c != 0:
                    s = F.sub(s, F.mul(c, x[j]))
            x[p] = s
        return tuple(x)


def _backtrack(A: Matrix, v: tuple, limits: Limits) -> set[tuple]:
    F = A.field
    k, n = A.shape
    need = Counter(v)
    values = sorted(need)
    if len(values) > limits.max_distinct_values:
        raise SearchBoundError(f"{len(values)} distinct values exceed the backtracking bound")
    forms = linear_forms(A)
    system = _System(F, k)
    used = Counter()
    found = set()

    def finish():
        x = system.solution()
        w = vecmat(x, A)
        if Counter(w) == need and weight(x):
            found.add(x)

    def walk(j):
        if system.rank == k:
            finish()
            return
        if j == n:
            if F.is_prime:
                _enumerate_affine(system, A, need, found)
                return
            raise SearchBoundError("candidate set is infinite over the rationals")
        for val in values:
            if used[val] == need[val]:
                continue
            status = system.push(forms[j], val)
            if status is False:
                continue
            used[val] += 1
            walk(j + 1)
            used[val] -= 1
            if status:
                system.pop()

    walk(0)
    return found


def _enumerate_affine(system: _System, A: Matrix, need: Counter, found: set):
    """All solutions of an underdetermined system over F_p, filtered."""
    F = system.F
    k = system.k
    pivots = {p for _, _, p in system.rows}
    free = [j for j in range(k) if j not in pivots]
    for vals in product(F.elements(), repeat=len(free)):
        trial = _System(F, k)
        trial.rows = list(system.rows)
        for j, val in zip(free, vals):
            e = [0] * k
            e[j] = 1
            trial.push(e, val)
        x = trial.solution()
        if weight(x) and Counter(vecmat(x, A)) == need:
            found.add(x)


def _exhaustive(A: Matrix, v: tuple, limits: Limits) -> set[tuple]:
    F = A.field
    k, n = A.shape
    p = F.p
    if p**k > limits.exhaustive_bound:
        raise SearchBoundError(f"{p}^{k} points exceed the exhaustive bound")
    Q = poly_from_roots(v, F)
    # zero set of Q_v: the values l_j(x) may take
    roots = np.zeros(p, dtype=bool)
    roots[[x for x in set(v)]] = True
    target = np.sort(np.array(v, dtype=np.int64))
    An = np.array(A.rows, dtype=np.int64)
    found = set()
    chunk = max(1, 2**16 // max(n, 1))
    total = p**k
    powers = p ** np.arange(k - 1, -1, -1, dtype=np.int64)
    for start in range(0, total, chunk):
        idx = np.arange(start, min(total, start + chunk), dtype=np.int64)
        X = (idx[:, None] // powers[None, :]) % p
        W = (X @ An) % p
        ok = roots[W].all(axis=1)  # Q_v(l_j(x)) == 0 for all j
        if not ok.any():
            continue
        Xs, Ws = X[ok], W[ok]
        same = (np.sort(Ws, axis=1) == target).all(axis=1)
        for x in Xs[same]:
            x = tuple(int(t) for t in x)
            if weight(x):
                found.add(x)
    assert all(Q(val) == 0 for x in found for val in vecmat(x, A))
    return found


def variety(A: Matrix, v: Sequence, strategy: str = "auto",
            limits: Limits = DEFAULT_LIMITS) -> list[tuple]:
    """Nonzero x with x A a rearrangement of v, sorted.

    ``strategy`` is "exhaustive" (prime fields only), "backtrack" or "auto".
    """
    F = A.field
    v = F.vec(v)
    if len(v) != A.ncols:
        raise ValueError("vector length does not match the columns of A")
    if strategy == "auto":
        small = F.is_prime and F.p**A.nrows <= limits.auto_exhaustive
        strategy = "exhaustive" if small else "backtrack"
    if strategy == "exhaustive":
        if not F.is_prime:
            raise ValueError("exhaustive search needs a prime field")
        pts = _exhaustive(A, v, limits)
    elif strategy == "backtrack":
        pts = _backtrack(A, v, limits)
    else:
        raise ValueError(f"unknown strategy {strategy!r}")
    return sorted(x for x in pts if is_perm_equiv(vecmat(x, A), v, F))


def lambda_set(A: Matrix, x: Sequence, v: Sequence, limits: Limits = DEFAULT_LIMITS
               ) -> list[Permutation]:
    """All sigma with x A == act(sigma, v)."""
    F = A.field
    x = F.vec(x)
    w = vecmat(x, A)
    if not weight(x) or not is_perm_equiv(w, F.vec(v), F):
        raise ValueError("x is not a point of the candidate set for v")
    return detect_all(v, w, F, limits)


def lambda_sets(A: Matrix, v: Sequence, points: Sequence[tuple] | None = None,
                limits: Limits = DEFAULT_LIMITS) -> dict[Permutation, list[tuple]]:
    """sigma -> the points x with x A = act(sigma, v), over the whole candidate set."""
    if points is None:
        points = variety(A, v, limits=limits)
    out: dict[Permutation, list[tuple]] = {}
    for x in points:
        for s in lambda_set(A, x, v, limits):
            out.setdefault(s, []).append(x)
    return out


def iter_solutions(A: Matrix, B: Matrix, strategy: str = "auto",
                   limits: Limits = DEFAULT_LIMITS) -> Iterator[EquivSolution]:
    F = A.field
    if B.field != F:
        raise ValueError("field mismatch")
    if A.shape != B.shape:
        raise ValueError(f"shape mismatch {A.shape} vs {B.shape}")
    k, n = A.shape
    if k > n or rank(B) < k:
        raise ValueError("B must have full row rank k <= n")
    # progressive intersection of the per-row permutation sets
    per_row: list[dict[Permutation, list[tuple]]] = []
    alive: set[Permutation] | None = None
    for i in range(k):
        sets = lambda_sets(A, B.row(i), variety(A, B.row(i), strategy, limits), limits)
        per_row.append(sets)
        alive = set(sets) if alive is None else alive & set(sets)
        log.debug("row %d: %d permutations survive", i + 1, len(alive))
        if not alive:
            return
    for s in sorted(alive):
        X = _assemble([per_row[i][s] for i in range(k)], F)
        if X is None:
            continue
        Y = perm_matrix(inverse(s), F)
        assert X @ A == B @ Y
        yield EquivSolution(X, Y, s)


def _assemble(choices: list[list[tuple]], F: Field) -> Matrix | None:
    """First choice of one witness per row giving an invertible X."""
    k = len(choices)
    system = _System(F, k)

    def walk(i, picked):
        if i == k:
            return picked
        for x in choices[i]:
            if system.push(x, 0) is True:
                got = walk(i + 1, picked + [x])
                if got is not None:
                    return got
                system.pop()
        return None

    rows = walk(0, [])
    return None if rows is None else Matrix(F, rows, k)


def solve_equiv(A: Matrix, B: Matrix, strategy: str = "auto",
                limits: Limits = DEFAULT_LIMITS) -> list[EquivSolution]:
    """All (X, Y, sigma) with X A = B Y, up to ``limits.solution_cap``, by sigma's one-line order."""
    out = []
    for sol in iter_solutions(A, B, strategy, limits):
        out.append(sol)
        if len(out) >= limits.solution_cap:
            break
    return out


__all__ = ["EquivSolution", "SearchBoundError", "SingularMatrixError", "lambda_set",
           "lambda_sets", "linear_forms", "solve_equiv", "iter_solutions", "variety"]
