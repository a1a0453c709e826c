"""Key recovery for McEliece over Reed-Solomon codes.

Given the public matrix G1 = S G P and the primitive element alpha, the rows of
S^-1 are the messages whose codewords are exact rearrangements of the shifted
rows of G.  The pipeline is:

1. candidate rows W: minimum-weight codewords of G1 whose projective class is a
   rearrangement of [g], rescaled onto g (or, alternatively, every x G1 with x
   in the candidate set of g from :mod:`permequiv.equivsolver`);
2. pick w in W and sigma with act(sigma, g) == w; accept sigma when every
   conjugated shift (sigma^-1 tau^(j-1) sigma) * w lands in W;
3. decode the k accepted rows against G1 to get S^-1, and verify
   S G P == G1 with P = I_n(sigma^-1).

When alpha is unknown it is proposed from the minimum-weight codewords by
:func:`primitive_candidates`.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterator, Sequence

from .algebra import (Field, Poly, is_primitive, poly_gcd_many, poly_roots_in_field,
                      q_vector, weight)
from .codes import min_weight_codewords, rs_generator
from .config import DEFAULT_LIMITS, Limits
from .equivsolver import variety
from .linalg import Matrix, SingularMatrixError, decode, inverse, vecmat
from .perm import Permutation, act, compose, inverse as perm_inverse, perm_matrix, shift_cycle
from .permdetect import is_perm_equiv, projective_match, projective_scalars

log = logging.getLogger(__name__)


class AttackError(RuntimeError):
    pass


@dataclass(frozen=True)
class AttackResult:
    sigma: Permutation
    S_inv: Matrix | None
    rows: tuple[tuple, ...]
    verified: bool
    field: Field
    candidates_tried: int = 0
    W: tuple[tuple, ...] = ()
    alpha: int | None = None

    @property
    def P(self) -> Matrix:
        return perm_matrix(perm_inverse(self.sigma), self.field)

    @property
    def S(self) -> Matrix:
        return inverse(self.S_inv)


@dataclass(frozen=True, order=True)
class PrimitiveCandidate:
    alpha: int
    c: int


def select_classes(G1: Matrix, g: Sequence, limits: Limits = DEFAULT_LIMITS
                   ) -> list[tuple[tuple, object]]:
    """(class representative, c) for each min-weight class matching [g], c from the Vieta test."""
    F = G1.field
    out = []
    for w in min_weight_codewords(G1, weight(g), limits=limits):
        c = projective_match(g, w, F)
        if c is not None:
            out.append((w, c))
    return out


def build_candidates(G1: Matrix, g: Sequence, limits: Limits = DEFAULT_LIMITS
                     ) -> list[tuple]:
    """Codewords of G1 that are exact rearrangements of g, sorted."""
    F = G1.field
    g = F.vec(g)
    W = set()
    for rep, _ in select_classes(G1, g, limits):
        for c in projective_scalars(g, rep, F):
            inv = F.inv(c)
            W.add(tuple(F.mul(inv, x) for x in rep))
    if not W:
        raise AttackError("no minimum-weight codeword is a rearrangement of g")
    return sorted(W)


def variety_candidates(G1: Matrix, g: Sequence, strategy: str = "auto",
                       limits: Limits = DEFAULT_LIMITS) -> list[tuple]:
    """W from the candidate set of g: {x G1 : x G1 a rearrangement of g}."""
    pts = variety(G1, g, strategy=strategy, limits=limits)
    W = sorted({vecmat(x, G1) for x in pts})
    if not W:
        raise AttackError("candidate set of g is empty")
    return W


def conjugate_rows(w: Sequence, sigma: Permutation, k: int) -> list[tuple]:
    """(sigma^-1 tau^(j-1) sigma) * w for j = 1..k, tau = (n n-1 ... 1)."""
    n = len(w)
    tau = shift_cycle(n)
    si = perm_inverse(sigma)
    out = []
    t = Permutation.identity(n)
    for _ in range(k):
        out.append(act(compose(compose(si, t), sigma), w))
        t = compose(tau, t)
    return out


def iter_recoveries(W: Sequence[tuple], g: Sequence, k: int, start: Sequence | None = None
                    ) -> Iterator[tuple[int, Permutation, list[tuple]]]:
    """Yield (w index, sigma, rows) for every accepted (w, sigma) pair.

    w runs over W in sorted order (``start`` first when given); sigma runs over the
    rearrangements with act(sigma, g) == w in increasing one-line order.  The
    search is depth first over sigma(1), sigma(2), ..., and a branch is cut as
    soon as the partial conjugated rows stop being prefixes of members of W,
    which leaves exactly the sigma whose rows all lie in W.
    """
    n = len(g)
    g = tuple(g)
    Wset = {tuple(w) for w in W}
    prefixes = {w[:i] for w in Wset for i in range(n + 1)}
    tau = shift_cycle(n)
    shifts = [g]
    for _ in range(1, k):
        shifts.append(act(tau, shifts[-1]))
    # act(compose(tau^j, sigma), g)[i] == shifts[j][sigma(i)]
    ws = sorted(Wset)
    if start is not None:
        start = tuple(start)
        if start not in Wset:
            raise ValueError("start is not a member of W")
        ws.remove(start)
        ws.insert(0, start)
    for idx, w in enumerate(ws):
        options = [[m for m in range(n) if g[m] == w[i]] for i in range(n)]
        used = [False] * n
        image = [0] * n
        partial = [[] for _ in range(k)]

        def walk(i):
            if i == n:
                rows = [tuple(r) for r in partial]
                if len(set(rows)) == k:
                    yield Permutation(tuple(m + 1 for m in image)), rows
                return
            for m in options[i]:
                if used[m]:
                    continue
                for j in range(1, k):
                    partial[j].append(shifts[j][m])
                ok = all(tuple(partial[j]) in prefixes for j in range(1, k))
                if ok:
                    used[m] = True
                    image[i] = m
                    partial[0].append(w[i])
                    yield from walk(i + 1)
                    partial[0].pop()
                    used[m] = False
                for j in range(1, k):
                    partial[j].pop()

        for sigma, rows in walk(0):
            yield idx, sigma, rows


def recover_permutation(W: Sequence[tuple], g: Sequence, k: int, F: Field,
                        start: Sequence | None = None) -> AttackResult:
    """First accepted (w, sigma); S^-1 is left for :func:`recover_S_inv`."""
    for idx, sigma, rows in iter_recoveries(W, g, k, start):
        return AttackResult(sigma, None, tuple(rows), False, F,
                            candidates_tried=idx + 1, W=tuple(W))
    raise AttackError("no (w, sigma) pair explains the candidate rows")


def recover_S_inv(G1: Matrix, rows: Sequence[tuple]) -> Matrix:
    """Row j is the message of ``rows[j]`` with respect to G1."""
    return Matrix(G1.field, [decode(G1, r) for r in rows], G1.nrows)


def verify(G1: Matrix, G: Matrix, S_inv: Matrix, sigma: Permutation) -> bool:
    try:
        S = inverse(S_inv)
    except SingularMatrixError:
        return False
    return S @ G @ perm_matrix(perm_inverse(sigma), G1.field) == G1


def _keys(G1: Matrix, alpha: int, W: list[tuple], start: Sequence | None = None
          ) -> Iterator[AttackResult]:
    F = G1.field
    k, n = G1.shape
    G = rs_generator(F.p, alpha, n - k + 1).generator
    g = G.row(0)
    for idx, sigma, rows in iter_recoveries(W, g, k, start):
        S_inv = recover_S_inv(G1, rows)
        ok = verify(G1, G, S_inv, sigma)
        yield AttackResult(sigma, S_inv, tuple(rows), ok, F, idx + 1, tuple(W), alpha)


def _first_verified(results: Iterator[AttackResult]) -> AttackResult:
    first = None
    for r in results:
        if r.verified:
            return r
        if first is None:
            first = r
            log.warning("candidate key for sigma=%s failed verification", r.sigma)
    if first is None:
        raise AttackError("no (w, sigma) pair explains the candidate rows")
    return first


def _check_public(G1: Matrix):
    F = G1.field
    if not F.is_prime:
        raise ValueError("the attack needs a prime field")
    k, n = G1.shape
    if n != F.p - 1:
        raise ValueError(f"length {n} is not q - 1 for q = {F.p}")


def full_attack(G1: Matrix, alpha: int | None = None, limits: Limits = DEFAULT_LIMITS,
                start: Sequence | None = None) -> AttackResult:
    """Recover (S^-1, sigma) from the public matrix via minimum-weight codewords.

    ``start`` moves one member of W to the front of the search order.
    """
    _check_public(G1)
    if alpha is None:
        if start is not None:
            raise ValueError("start needs a known alpha")
        return _unknown_alpha(G1, limits)
    k, n = G1.shape
    g = rs_generator(G1.field.p, alpha, n - k + 1).g
    W = build_candidates(G1, g, limits)
    if start is not None:
        start = G1.field.vec(start)
    return _first_verified(_keys(G1, alpha, W, start))


def all_keys(G1: Matrix, alpha: int, cap: int | None = None, variety_route: bool = False,
             limits: Limits = DEFAULT_LIMITS) -> list[AttackResult]:
    """Every verified (S^-1, sigma), up to ``cap`` (default: the solution cap)."""
    _check_public(G1)
    cap = limits.solution_cap if cap is None else cap
    k, n = G1.shape
    g = rs_generator(G1.field.p, alpha, n - k + 1).g
    W = variety_candidates(G1, g, limits=limits) if variety_route else build_candidates(G1, g, limits)
    out = []
    for r in _keys(G1, alpha, W):
        if r.verified:
            out.append(r)
            if len(out) >= cap:
                break
    return out


def variety_attack(G1: Matrix, alpha: int, strategy: str = "auto",
                   limits: Limits = DEFAULT_LIMITS) -> AttackResult:
    """As :func:`full_attack`, with W taken from the candidate set of g."""
    _check_public(G1)
    k, n = G1.shape
    g = rs_generator(G1.field.p, alpha, n - k + 1).g
    W = variety_candidates(G1, g, strategy, limits)
    return _first_verified(_keys(G1, alpha, W))


# primitive element recovery

def symbolic_g_coeffs(d: int, F: Field) -> list[Poly]:
    """g_0(X), ..., g_{d-1}(X): coefficients of prod_{j<d} (x - X^j) in F[X]."""
    if d < 1:
        raise ValueError("d must be at least 1")
    X = Poly.x(F)
    coeffs = [Poly.const(F, 1)]
    for j in range(1, d):
        root = X**j
        nxt = [Poly(F)] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            nxt[i + 1] = nxt[i + 1] + c
            nxt[i] = nxt[i] - root * c
        coeffs = nxt
    return coeffs


def _elementary(polys: Sequence[Poly], F: Field) -> list[Poly]:
    e = [Poly.const(F, 1)] + [Poly(F)] * len(polys)
    for i, p in enumerate(polys, start=1):
        for j in range(i, 0, -1):
            e[j] = e[j] + e[j - 1] * p
    return e


def u_polynomial(A: Sequence, F: Field) -> Poly:
    """U_w(Y) = A_d Y^d - A_{d-1} Y^{d-1} + ... + (-1)^d, from q(w) = (A_1..A_d)."""
    d = len(A)
    full = (F.one,) + tuple(F.vec(A))
    return Poly(F, [full[i] if (d - i) % 2 == 0 else F.neg(full[i]) for i in range(d + 1)])


def _rhs(A: Sequence, y, j: int, F: Field):
    """y^j A_j - y^(j-1) A_(j-1) + ... + (-1)^j."""
    full = (F.one,) + tuple(A)
    s = F.zero
    for i in range(j + 1):
        term = F.mul(F.pow(y, j - i), full[j - i])
        s = F.add(s, term) if i % 2 == 0 else F.sub(s, term)
    return s


def gcd_system(w: Sequence, d: int, F: Field) -> dict:
    """For each root y of U_w: the monic gcd in F[X] of the d - 1 symmetric-function equations."""
    A = q_vector(w, F)
    if len(A) != d:
        raise ValueError(f"codeword weight {len(A)} differs from d = {d}")
    gs = symbolic_g_coeffs(d, F)
    es = _elementary(gs[:-1], F)
    out = {}
    for y in sorted(poly_roots_in_field(u_polynomial(A, F))):
        eqs = [es[j] - _rhs(A, y, j, F) for j in range(1, d)]
        nonzero = [p for p in eqs if not p.is_zero()]
        # all-zero system: every X solves it; represent that by the zero polynomial
        out[y] = poly_gcd_many(nonzero) if nonzero else Poly(F)
    return out


def g_row(alpha: int, d: int, F: Field) -> tuple:
    """(g_0(alpha), ..., g_{d-1}(alpha)) evaluated from the symbolic coefficients."""
    return tuple(p(F(alpha)) for p in symbolic_g_coeffs(d, F))


def primitive_candidates(w: Sequence, d: int, F: Field) -> list[PrimitiveCandidate]:
    """(alpha, c) with alpha primitive and c * g_alpha a rearrangement of w."""
    w = F.vec(w)
    n = len(w)
    out = set()
    for y, h in gcd_system(w, d, F).items():
        if y == 0:
            continue
        if h.is_zero():
            alphas = F.elements()
        else:
            alphas = sorted(poly_roots_in_field(h)) if h.degree >= 1 else []
        c = F.inv(y)
        for a in alphas:
            if not is_primitive(a, F.p):
                continue
            cg = tuple(F.mul(c, x) for x in g_row(a, d, F)) + (0,) * (n - d)
            if is_perm_equiv(cg, w, F):
                out.add(PrimitiveCandidate(a, c))
    return sorted(out)


def recover_primitive_elements(G1: Matrix, limits: Limits = DEFAULT_LIMITS
                               ) -> dict[int, list[tuple]]:
    """alpha -> the min-weight classes of G1 that propose it."""
    F = G1.field
    k, n = G1.shape
    d = n - k + 1
    found: dict[int, list[tuple]] = {}
    for w in min_weight_codewords(G1, d, limits=limits):
        for cand in primitive_candidates(w, d, F):
            found.setdefault(cand.alpha, []).append(w)
    return dict(sorted(found.items()))


def _unknown_alpha(G1: Matrix, limits: Limits) -> AttackResult:
    F = G1.field
    k, n = G1.shape
    d = n - k + 1
    tried = set()
    fallback = None
    for w in min_weight_codewords(G1, d, limits=limits):
        for cand in primitive_candidates(w, d, F):
            if cand.alpha in tried:
                continue
            tried.add(cand.alpha)
            log.info("trying proposed primitive element %d", cand.alpha)
            try:
                res = full_attack(G1, cand.alpha, limits)
            except AttackError:
                continue
            if res.verified:
                return res
            fallback = fallback or res
    if fallback is not None:
        return fallback
    raise AttackError("no primitive element explains the public key")
