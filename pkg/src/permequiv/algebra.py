"""Exact scalars over prime fields and the rationals, plus univariate polynomials.

Scalars are plain Python values: ``int`` residues in ``0..p-1`` for a prime
field and :class:`fractions.Fraction` for the rationals.  A :class:`Field`
carries the arithmetic; it never wraps the values themselves.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class Field:
    """F_p when ``p`` is set, the rationals when ``p`` is None."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None and not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    @property
    def is_prime(self) -> bool:
        return self.p is not None

    @property
    def zero(self):
        return 0 if self.p is not None else Fraction(0)

    @property
    def one(self):
        return 1 if self.p is not None else Fraction(1)

    def __call__(self, x):
        """Coerce ``x`` (int, Fraction or text) into a canonical scalar."""
        if isinstance(x, str):
            return self.parse(x)
        if self.p is None:
            return Fraction(x)
        if isinstance(x, Fraction):
            if x.denominator == 1:
                return x.numerator % self.p
            return self.div(x.numerator % self.p, x.denominator % self.p)
        return int(x) % self.p

    def vec(self, xs: Iterable) -> tuple:
        return tuple(self(x) for x in xs)

    def add(self, a, b):
        return (a + b) % self.p if self.p else a + b

    def sub(self, a, b):
        return (a - b) % self.p if self.p else a - b

    def mul(self, a, b):
        return (a * b) % self.p if self.p else a * b

    def neg(self, a):
        return (-a) % self.p if self.p else -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.p:
            return pow(a, -1, self.p)
        return 1 / a

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e: int):
        if self.p:
            return pow(a, e, self.p) if e >= 0 else pow(self.inv(a), -e, self.p)
        return a**e

    def elements(self) -> range:
        if self.p is None:
            raise ValueError("the rationals are not enumerable")
        return range(self.p)

    def parse(self, text: str):
        text = text.strip()
        if "/" in text:
            num, den = text.split("/", 1)
            return self(Fraction(int(num), int(den)))
        return self(int(text))

    def format(self, a) -> str:
        return str(a)

    def __str__(self) -> str:
        return "Q" if self.p is None else str(self.p)

    @classmethod
    def from_str(cls, text: str) -> Field:
        text = text.strip()
        if text.upper() in ("Q", "QQ", "RATIONALS"):
            return cls(None)
        return cls(int(text))


QQ = Field(None)


def GF(p: int) -> Field:
    return Field(p)


def field_inv(a, F: Field):
    return F.inv(F(a))


def multiplicative_order(a: int, p: int) -> int:
    if a % p == 0:
        raise ValueError("zero has no multiplicative order")
    x, k = a % p, 1
    while x != 1:
        x = x * a % p
        k += 1
    return k


def primitive_elements(p: int) -> list[int]:
    """All generators of F_p^*, ascending."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    return [a for a in range(1, p) if multiplicative_order(a, p) == p - 1]


def is_primitive(a: int, p: int) -> bool:
    return a % p != 0 and multiplicative_order(a, p) == p - 1


class Poly:
    """Immutable univariate polynomial, coefficients lowest degree first.

    Coefficients are scalars of ``field``; trailing zeros are stripped, so the
    zero polynomial has an empty coefficient tuple.
    """

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs: Iterable = ()):
        cs = [field(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def const(cls, field: Field, c) -> Poly:
        return cls(field, [c])

    @classmethod
    def x(cls, field: Field) -> Poly:
        return cls(field, [0, 1])

    @property
    def degree(self) -> int:
        """Degree, -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self):
        return self.coeffs[-1] if self.coeffs else self.field.zero

    def coeff(self, i: int):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.field.zero

    def monic(self) -> Poly:
        if self.is_zero():
            return self
        inv = self.field.inv(self.lead)
        return Poly(self.field, [self.field.mul(c, inv) for c in self.coeffs])

    def _lift(self, other) -> Poly:
        if isinstance(other, Poly):
            if other.field != self.field:
                raise ValueError("polynomials over different fields")
            return other
        return Poly.const(self.field, other)

    def __add__(self, other) -> Poly:
        other = self._lift(other)
        F = self.field
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(F, [F.add(self.coeff(i), other.coeff(i)) for i in range(n)])

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly(self.field, [self.field.neg(c) for c in self.coeffs])

    def __sub__(self, other) -> Poly:
        return self + (-self._lift(other))

    def __rsub__(self, other) -> Poly:
        return self._lift(other) - self

    def __mul__(self, other) -> Poly:
        other = self._lift(other)
        if self.is_zero() or other.is_zero():
            return Poly(self.field)
        F = self.field
        out = [F.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = F.add(out[i + j], F.mul(a, b))
        return Poly(F, out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> Poly:
        result = Poly.const(self.field, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other: Poly):
        other = self._lift(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        F = self.field
        rem = list(self.coeffs)
        dq = other.degree
        inv_lead = F.inv(other.lead)
        quot = [F.zero] * max(len(rem) - dq, 0)
        for i in range(len(rem) - 1, dq - 1, -1):
            c = rem[i]
            if c == 0:
                continue
            c = F.mul(c, inv_lead)
            quot[i - dq] = c
            for j, b in enumerate(other.coeffs):
                rem[i - dq + j] = F.sub(rem[i - dq + j], F.mul(c, b))
        return Poly(F, quot), Poly(F, rem)

    def __floordiv__(self, other) -> Poly:
        return divmod(self, other)[0]

    def __mod__(self, other) -> Poly:
        return divmod(self, other)[1]

    def __call__(self, x):
        F = self.field
        acc = F.zero
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, x), c)
        return acc

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.field == other.field and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field, self.coeffs))

    def __repr__(self) -> str:
        return f"Poly({self.field}, {list(self.coeffs)})"

    def __str__(self) -> str:
        return self.to_str()

    def to_str(self, var: str = "T") -> str:
        if self.is_zero():
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            else:
                terms.append(f"{c}*{mono}")
        return " + ".join(terms)


def poly_from_roots(roots: Sequence, F: Field) -> Poly:
    """Monic prod(T - r) over the multiset ``roots``."""
    coeffs = [F.one]
    for r in roots:
        r = F(r)
        # multiply by (T - r) in place, highest degree first
        coeffs.append(F.zero)
        for i in range(len(coeffs) - 1, 0, -1):
            coeffs[i] = F.sub(coeffs[i - 1], F.mul(r, coeffs[i]))
        coeffs[0] = F.neg(F.mul(r, coeffs[0]))
    return Poly(F, coeffs)


def poly_gcd(f: Poly, g: Poly) -> Poly:
    """Monic gcd by the Euclidean algorithm."""
    if f.is_zero() and g.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    a, b = f, g
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def poly_gcd_many(polys: Iterable[Poly]) -> Poly:
    polys = [p for p in polys if not p.is_zero()]
    if not polys:
        raise ValueError("gcd of zero polynomials is undefined")
    acc = polys[0].monic()
    for p in polys[1:]:
        if acc.degree == 0:
            break
        acc = poly_gcd(acc, p)
    return acc


def poly_roots_in_field(f: Poly) -> dict:
    """Roots of ``f`` in its prime field, with multiplicities (exhaustive scan)."""
    F = f.field
    if f.is_zero():
        raise ValueError("the zero polynomial vanishes everywhere")
    if not F.is_prime:
        raise ValueError("exhaustive root finding needs a prime field")
    roots = {}
    rest = f
    for c in F.elements():
        lin = Poly(F, [F.neg(c), 1])
        mult = 0
        while rest.degree >= 1:
            quo, rem = divmod(rest, lin)
            if not rem.is_zero():
                break
            rest = quo
            mult += 1
        if mult:
            roots[c] = mult
    return roots


def weight(v: Sequence) -> int:
    return sum(1 for x in v if x != 0)


def q_vector(v: Sequence, F: Field) -> tuple:
    """Signed Vieta coefficients (-q_{n-1}, q_{n-2}, ..., (-1)^m q_{n-m}).

    Entry j (1-based) is the j-th elementary symmetric function of the
    entries of ``v``; its length is the weight m of ``v``.
    """
    v = F.vec(v)
    n, m = len(v), weight(v)
    if m == 0:
        raise ValueError("q-vector of the zero vector is undefined")
    Q = poly_from_roots(v, F)
    assert Q.coeff(n - m) != 0
    assert all(Q.coeff(j) == 0 for j in range(n - m))
    out = []
    for j in range(1, m + 1):
        c = Q.coeff(n - j)
        out.append(c if j % 2 == 0 else F.neg(c))
    return tuple(out)
