"""Linear codes, Reed-Solomon generators and minimum-weight codewords."""
from __future__ import annotations

import warnings
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations, product
from math import comb
from typing import Sequence

from .algebra import Field, GF, is_primitive, poly_from_roots, weight
from .config import DEFAULT_LIMITS, Limits
from .linalg import Matrix, left_kernel_basis, rank, vecmat
from .perm import act, shift_cycle


class NotMDSError(ValueError):
    pass


class SearchBoundError(RuntimeError):
    pass


@dataclass(frozen=True)
class LinearCode:
    generator: Matrix

    def __post_init__(self):
        k, n = self.generator.shape
        if not 1 <= k <= n or rank(self.generator) != k:
            raise ValueError("generator must have full row rank k with 1 <= k <= n")

    @property
    def field(self) -> Field:
        return self.generator.field

    @property
    def n(self) -> int:
        return self.generator.ncols

    @property
    def k(self) -> int:
        return self.generator.nrows


@dataclass(frozen=True)
class ReedSolomonCode:
    """RS code over F_q with generator polynomial (x - alpha)...(x - alpha^(d-1))."""

    q: int
    alpha: int
    d: int

    def __post_init__(self):
        if not is_primitive(self.alpha, self.q):
            raise ValueError(f"{self.alpha} is not a primitive element of F_{self.q}")
        if not 1 <= self.d < self.q - 1:
            raise ValueError(f"design distance must satisfy 1 <= d < {self.q - 1}")
        if any(c == 0 for c in self.g_coeffs[:-1]):
            warnings.warn(f"RS({self.q}, {self.alpha}, {self.d}): g(x) has a zero "
                          "low-order coefficient", stacklevel=2)

    @property
    def field(self) -> Field:
        return GF(self.q)

    @property
    def n(self) -> int:
        return self.q - 1

    @property
    def k(self) -> int:
        return self.n + 1 - self.d

    @cached_property
    def g_coeffs(self) -> tuple:
        """g_0, ..., g_{d-2}, 1."""
        F = self.field
        roots = [F.pow(self.alpha, j) for j in range(1, self.d)]
        return poly_from_roots(roots, F).coeffs

    @property
    def g(self) -> tuple:
        """First row of the generator: (g_0, ..., g_{d-2}, 1, 0, ..., 0)."""
        return self.g_coeffs + (0,) * (self.n - self.d)

    @cached_property
    def generator(self) -> Matrix:
        tau = shift_cycle(self.n)
        rows = [self.g]
        for _ in range(1, self.k):
            rows.append(act(tau, rows[-1]))
        return Matrix(self.field, rows, self.n)

    def code(self) -> LinearCode:
        return LinearCode(self.generator)


def rs_generator(q: int, alpha: int, d: int) -> ReedSolomonCode:
    return ReedSolomonCode(q, alpha, d)


def canonical(v: Sequence, F: Field) -> tuple:
    """Representative of [v] whose first nonzero entry is 1."""
    v = F.vec(v)
    lead = next((x for x in v if x != 0), None)
    if lead is None:
        raise ValueError("the zero vector has no projective class")
    inv = F.inv(lead)
    return tuple(F.mul(x, inv) for x in v)


def min_distance_bruteforce(G: Matrix, limits: Limits = DEFAULT_LIMITS) -> int:
    F = G.field
    k, n = G.shape
    if not F.is_prime or F.p**k > limits.bruteforce_bound:
        raise SearchBoundError("message space too large for a brute-force scan")
    best = n
    for x in product(F.elements(), repeat=k):
        # one representative per projective class: first nonzero coordinate is 1
        lead = next((c for c in x if c), None)
        if lead != 1:
            continue
        best = min(best, weight(vecmat(x, G)))
    return best


def _scan_min_weight(G: Matrix, limits: Limits) -> list[tuple]:
    F = G.field
    k = G.nrows
    if not F.is_prime or F.p**k > limits.bruteforce_bound:
        raise SearchBoundError("message space too large for a brute-force scan")
    words = {}
    for x in product(F.elements(), repeat=k):
        if next((c for c in x if c), None) != 1:
            continue
        y = vecmat(x, G)
        words.setdefault(weight(y), set()).add(canonical(y, F))
    return sorted(words[min(words)])


def min_weight_codewords(G: Matrix, d: int | None = None, verify_mds: bool = False,
                         limits: Limits = DEFAULT_LIMITS) -> list[tuple]:
    """Canonical representatives of the projective minimum-weight codewords.

    For an MDS code (d = n - k + 1) every choice of n - d zero coordinates cuts
    the code down to a single projective point: the left kernel of the k x (k-1)
    column submatrix of G on those coordinates is one-dimensional.  That gives
    exactly C(n, d) classes.  Codes that turn out not to be MDS fall back to a
    full message scan when it is small enough.
    """
    F = G.field
    k, n = G.shape
    mds_d = n - k + 1
    if d is None:
        d = mds_d
    if verify_mds and min_distance_bruteforce(G, limits) != mds_d:
        raise NotMDSError("code is not MDS")
    try:
        if d != mds_d:
            raise NotMDSError(f"d = {d} differs from n - k + 1 = {mds_d}")
        found = set()
        for zeros in combinations(range(n), n - d):
            ker = left_kernel_basis(G.select_columns(zeros))
            if len(ker) != 1:
                raise NotMDSError(f"columns {zeros} are dependent")
            y = vecmat(ker[0], G)
            if weight(y) != d:
                raise NotMDSError(f"codeword vanishing on {zeros} has weight {weight(y)}")
            found.add(canonical(y, F))
        assert len(found) == comb(n, d)
        return sorted(found)
    except NotMDSError:
        if F.is_prime and F.p**k <= limits.bruteforce_bound:
            return _scan_min_weight(G, limits)
        raise
