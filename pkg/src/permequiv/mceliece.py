"""McEliece over Reed-Solomon codes: public key G1 = S G P.

Error correction is a syndrome table over all error patterns of weight <= t,
built once per secret key.  Fine at the sizes this package targets, useless
beyond them.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Sequence

from .algebra import weight
from .codes import ReedSolomonCode
from .linalg import (Matrix, NotACodewordError, SingularMatrixError, decode, inverse,
                     is_invertible, parity_check, vecmat)
from .perm import Permutation, act, matrix_to_perm, perm_matrix


class DecryptionError(ValueError):
    pass


@dataclass(frozen=True)
class SecretKey:
    code: ReedSolomonCode
    S: Matrix
    perm: Permutation  # P = perm_matrix(perm)
    _table: dict = field(default_factory=dict, compare=False, repr=False)

    @property
    def P(self) -> Matrix:
        return perm_matrix(self.perm, self.code.field)

    @property
    def G(self) -> Matrix:
        return self.code.generator

    @property
    def t(self) -> int:
        return (self.code.d - 1) // 2


@dataclass(frozen=True)
class PublicKey:
    G1: Matrix
    t: int


def random_invertible(F, k: int, rng: random.Random) -> Matrix:
    while True:
        S = Matrix(F, [[rng.randrange(F.p) for _ in range(k)] for _ in range(k)], k)
        if is_invertible(S):
            return S


def random_permutation(n: int, rng: random.Random) -> Permutation:
    image = list(range(1, n + 1))
    rng.shuffle(image)
    return Permutation(tuple(image))


def keygen(q: int, alpha: int, d: int, seed: int | None = None,
           S: Matrix | None = None, P: Matrix | Permutation | None = None
           ) -> tuple[SecretKey, PublicKey]:
    """Random keys need ``seed``; explicit S and P are used as given."""
    code = ReedSolomonCode(q, alpha, d)
    F = code.field
    rng = None
    if S is None or P is None:
        if seed is None:
            raise ValueError("a seed is required for random key generation")
        rng = random.Random(seed)
    if S is None:
        S = random_invertible(F, code.k, rng)
    elif not is_invertible(S):
        raise SingularMatrixError("S is not invertible")
    if P is None:
        perm = random_permutation(code.n, rng)
    elif isinstance(P, Permutation):
        perm = P
    else:
        perm = matrix_to_perm(P)
    if perm.n != code.n or S.shape != (code.k, code.k):
        raise ValueError("key sizes do not match the code")
    sec = SecretKey(code, Matrix(F, S.rows, code.k), perm)
    return sec, PublicKey(sec.S @ sec.G @ sec.P, sec.t)


def random_error(n: int, w: int, F, rng: random.Random) -> tuple:
    e = [0] * n
    for i in rng.sample(range(n), w):
        e[i] = rng.randrange(1, F.p)
    return tuple(e)


def encrypt(pub: PublicKey, x: Sequence, e: Sequence | None = None,
            weight_: int | None = None, seed: int | None = None) -> tuple:
    """y = x G1 + e.  Without ``e``, a random error of weight ``weight_`` (default t)."""
    F = pub.G1.field
    n = pub.G1.ncols
    if e is None:
        if seed is None:
            raise ValueError("a seed is required for a random error vector")
        e = random_error(n, pub.t if weight_ is None else weight_, F, random.Random(seed))
    e = F.vec(e)
    if len(e) != n:
        raise ValueError("error vector has the wrong length")
    if weight(e) > pub.t:
        raise ValueError(f"error weight {weight(e)} exceeds t = {pub.t}")
    return tuple(F.add(a, b) for a, b in zip(vecmat(x, pub.G1), e))


def _syndrome_table(sec: SecretKey) -> tuple[Matrix, dict]:
    if "H" not in sec._table:
        F = sec.code.field
        H = parity_check(sec.G)
        n = sec.code.n
        table = {}
        # lexicographic pattern order; the first pattern wins a syndrome
        for w in range(sec.t + 1):
            for support in combinations(range(n), w):
                for vals in product(range(1, F.p), repeat=w):
                    e = [0] * n
                    for i, v in zip(support, vals):
                        e[i] = v
                    table.setdefault(vecmat(e, H.T), tuple(e))
        sec._table["H"] = (H, table)
    return sec._table["H"]


def correct(sec: SecretKey, y1: Sequence) -> tuple:
    """Nearest codeword of the secret code within distance t."""
    F = sec.code.field
    H, table = _syndrome_table(sec)
    e1 = table.get(vecmat(y1, H.T))
    if e1 is None:
        raise DecryptionError("no codeword within distance t")
    return tuple(F.sub(a, b) for a, b in zip(y1, e1))


def decrypt(sec: SecretKey, y: Sequence) -> tuple:
    F = sec.code.field
    y = F.vec(y)
    # y P^-1 = act(perm, y)
    y1 = act(sec.perm, y)
    ybar = correct(sec, y1)
    try:
        xbar = decode(sec.G, ybar)
    except NotACodewordError as exc:
        raise DecryptionError(str(exc)) from None
    if "S_inv" not in sec._table:
        sec._table["S_inv"] = inverse(sec.S)
    return vecmat(xbar, sec._table["S_inv"])
