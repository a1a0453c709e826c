"""Deciding whether w is a rearrangement of v, and finding the rearrangements.

Three routes are provided: first-match scanning (:func:`detect_first`), sorting
under a total order (:func:`detect_sorted`) and the polynomial route of
:func:`detect_all`, which builds the 0/1 incidence matrix from the vector of
polynomials R_v(T) and reads every permutation submatrix out of it.

Note on the vanishing test: ``Q_v(w_j) == 0`` for every j is only necessary.
v = (1, 2), w = (1, 1) passes it without being a rearrangement, so
:func:`is_perm_equiv` compares the full polynomials Q_v and Q_w instead and
:func:`vanishing_condition` is kept as a cheap filter.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import factorial, prod
from typing import Callable, Iterator, Sequence

from .algebra import Field, Poly, is_primitive, poly_from_roots, poly_gcd_many, q_vector, weight
from .config import DEFAULT_LIMITS, Limits
from .perm import Permutation, compose, inverse


@dataclass(frozen=True)
class DetectionResult:
    found: bool
    witness: Permutation | None = None


def _check(v, w):
    if len(v) != len(w):
        raise ValueError(f"size mismatch: {len(v)} vs {len(w)}")


def detect_first(v: Sequence, w: Sequence) -> DetectionResult:
    """Greedy first-match scan: sigma(j) is the first unused i with v_i == w_j."""
    _check(v, w)
    used = [False] * len(v)
    image = []
    for wj in w:
        for i, vi in enumerate(v):
            if not used[i] and vi == wj:
                used[i] = True
                image.append(i + 1)
                break
        else:
            return DetectionResult(False)
    return DetectionResult(True, Permutation(tuple(image)))


def natural_order(x):
    return x


def primitive_order(alpha: int, F: Field) -> Callable:
    """Sort key: 0 first, then alpha^0 < alpha^1 < ... < alpha^(p-2)."""
    if not is_primitive(alpha, F.p):
        raise ValueError(f"{alpha} is not primitive mod {F.p}")
    log = {}
    x = 1
    for i in range(F.p - 1):
        log[x] = i
        x = x * alpha % F.p
    return lambda a: -1 if a == 0 else log[a]


def sorting_permutation(v: Sequence, key: Callable = natural_order) -> Permutation:
    """sigma_v with act(sigma_v, v) sorted; ties keep their original order."""
    order = sorted(range(len(v)), key=lambda i: key(v[i]))
    return Permutation(tuple(i + 1 for i in order))


def detect_sorted(v: Sequence, w: Sequence, key: Callable = natural_order) -> DetectionResult:
    _check(v, w)
    sv = sorting_permutation(v, key)
    sw = sorting_permutation(w, key)
    if [v[i - 1] for i in sv.image] != [w[i - 1] for i in sw.image]:
        return DetectionResult(False)
    return DetectionResult(True, compose(sv, inverse(sw)))


def is_perm_equiv(v: Sequence, w: Sequence, F: Field | None = None) -> bool:
    """Q_v == Q_w, i.e. the entries agree as multisets."""
    _check(v, w)
    if F is None:
        return Counter(v) == Counter(w)
    return poly_from_roots(v, F) == poly_from_roots(w, F)


def vanishing_condition(v: Sequence, w: Sequence, F: Field) -> bool:
    """Q_v(w_j) == 0 for all j.  Necessary, not sufficient."""
    _check(v, w)
    Q = poly_from_roots(v, F)
    return all(Q(x) == 0 for x in w)


def r_vector(v: Sequence, F: Field) -> tuple[Poly, tuple[Poly, ...]]:
    """(D_v, R_v): the gcd of the p_{i,v} = Q_v / (T - v_i) and the quotients by it."""
    v = F.vec(v)
    Q = poly_from_roots(v, F)
    ps = [Q // Poly(F, [F.neg(vi), 1]) for vi in v]
    D = poly_gcd_many(ps)
    return D, tuple(p // D for p in ps)


def incidence_matrix(v: Sequence, w: Sequence, F: Field) -> list[list[int]] | None:
    """Rows R_v(w_j) scaled by their first nonzero entry; None if some row vanishes."""
    _check(v, w)
    _, R = r_vector(v, F)
    rows = []
    for wj in F.vec(w):
        vals = [r(wj) for r in R]
        lead = next((a for a in vals if a != 0), None)
        if lead is None:
            return None
        inv = F.inv(lead)
        row = [F.mul(a, inv) for a in vals]
        assert all(x in (0, 1) for x in row)
        rows.append(row)
    return rows


def iter_all(v: Sequence, w: Sequence, F: Field, limits: Limits = DEFAULT_LIMITS
             ) -> Iterator[Permutation]:
    """Every sigma with act(sigma, v) == w, in increasing one-line order."""
    _check(v, w)
    n = len(v)
    v, w = F.vec(v), F.vec(w)
    if not is_perm_equiv(v, w, F):
        return
    if n and len(set(v)) == 1 and n > limits.all_perm_bound:
        raise ValueError(f"constant vector of length {n}: all {n}! permutations match")
    M = incidence_matrix(v, w, F)
    if M is None:
        return
    options = [[i + 1 for i, x in enumerate(row) if x == 1] for row in M]
    used = [False] * (n + 1)
    image = [0] * n

    def walk(j):
        if j == n:
            yield Permutation(tuple(image))
            return
        for i in options[j]:
            if not used[i]:
                used[i] = True
                image[j] = i
                yield from walk(j + 1)
                used[i] = False

    yield from walk(0)


def detect_all(v: Sequence, w: Sequence, F: Field, limits: Limits = DEFAULT_LIMITS
               ) -> list[Permutation]:
    return list(iter_all(v, w, F, limits))


def expected_count(v: Sequence) -> int:
    """prod(s_t!) over the classes of repeated entries of v."""
    return prod(factorial(s) for s in Counter(v).values())


def projective_scalars(v: Sequence, w: Sequence, F: Field) -> list:
    """All c != 0 with w a rearrangement of c*v, ascending.

    Candidates are the ratios (first nonzero of w) / v_i; each is confirmed by
    the Vieta test q(w) == q(v) * diag(c, c^2, ..., c^m).
    """
    _check(v, w)
    v, w = F.vec(v), F.vec(w)
    if weight(v) == 0 or weight(w) == 0:
        raise ValueError("projective matching needs nonzero vectors")
    if weight(v) != weight(w):
        return []
    qv, qw = q_vector(v, F), q_vector(w, F)
    w0 = next(x for x in w if x != 0)
    found = set()
    for vi in set(v):
        if vi == 0:
            continue
        c = F.div(w0, vi)
        if all(qw[j] == F.mul(qv[j], F.pow(c, j + 1)) for j in range(len(qv))):
            found.add(c)
    return sorted(found)


def projective_match(v: Sequence, w: Sequence, F: Field):
    """A scalar c with [w] = [sigma * v], i.e. q(w) = q(v) diag(c, ..., c^m); else None.

    When the first Vieta entries are nonzero, c is their ratio, as in the
    diagonal-scaling table; otherwise the candidates of :func:`projective_scalars`
    are tried.
    """
    v, w = F.vec(v), F.vec(w)
    _check(v, w)
    if weight(v) == 0 or weight(w) == 0:
        raise ValueError("projective matching needs nonzero vectors")
    if weight(v) != weight(w):
        return None
    qv, qw = q_vector(v, F), q_vector(w, F)
    if qv[0] != 0:
        # e_1(w) = c e_1(v) pins c down
        c = F.div(qw[0], qv[0])
        if c != 0 and all(qw[j] == F.mul(qv[j], F.pow(c, j + 1)) for j in range(len(qv))):
            return c
        return None
    cs = projective_scalars(v, w, F)
    return cs[0] if cs else None
