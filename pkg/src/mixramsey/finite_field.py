"""Exact arithmetic in GF(p^k).

Elements are stored as integer codes: the base-p digits of a code are the
coefficients of the element as a polynomial in the generator, lowest degree
first.  ``FieldTable.coeffs`` and ``FieldTable.element`` convert between the
two views.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from functools import lru_cache

DEFAULT_SIZE_CAP = 2**20


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n, ascending."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


@dataclass(frozen=True)
class PrimePower:
    p: int
    k: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if self.k < 1:
            raise ValueError("exponent must be positive")

    @property
    def q(self) -> int:
        return self.p**self.k

    @classmethod
    def from_int(cls, q: int) -> "PrimePower":
        """Factor q as p^k, raising ValueError if q is not a prime power."""
        if q < 2:
            raise ValueError(f"{q} is not a prime power")
        factors = prime_factors(q)
        if len(factors) != 1:
            raise ValueError(f"{q} is not a prime power")
        p = factors[0]
        k = 0
        while q > 1:
            q //= p
            k += 1
        return cls(p, k)


# Dense polynomial helpers over GF(p).  Polynomials are coefficient lists,
# lowest degree first.


def _poly_mulmod(a, b, mod, p):
    k = len(mod) - 1
    res = [0] * (2 * k - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                res[i + j] = (res[i + j] + x * y) % p
    for d in range(len(res) - 1, k - 1, -1):
        c = res[d]
        if c:
            for t in range(k + 1):
                res[d - k + t] = (res[d - k + t] - c * mod[t]) % p
    return res[:k]


def _poly_powmod(a, e, mod, p):
    k = len(mod) - 1
    result = [1] + [0] * (k - 1)
    base = list(a)
    while e:
        if e & 1:
            result = _poly_mulmod(result, base, mod, p)
        base = _poly_mulmod(base, base, mod, p)
        e >>= 1
    return result


def _poly_rem(a, b, p):
    """Remainder of a modulo monic b."""
    a = list(a)
    db = len(b) - 1
    for d in range(len(a) - 1, db - 1, -1):
        c = a[d]
        if c:
            for t in range(db + 1):
                a[d - db + t] = (a[d - db + t] - c * b[t]) % p
    return a[:db]


def _reduce_x(mod, p):
    """The residue class of x modulo a monic polynomial, as a coefficient list."""
    k = len(mod) - 1
    x = [0, 1] + [0] * max(0, k - 1)
    return (_poly_rem(x, mod, p) + [0] * k)[:k]


def is_irreducible(mod, p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..k//2."""
    k = len(mod) - 1
    if k == 1:
        return True
    if mod[0] == 0:
        return False
    for d in range(1, k // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            if not any(_poly_rem(mod, list(low) + [1], p)):
                return False
    return True


def is_primitive_poly(mod, p: int) -> bool:
    """True iff x has multiplicative order p^k - 1 modulo ``mod``."""
    k = len(mod) - 1
    if mod[0] % p == 0:
        return False
    order = p**k - 1
    x = _reduce_x(mod, p)
    one = [1] + [0] * (k - 1)
    if _poly_powmod(x, order, mod, p) != one:
        return False
    return all(_poly_powmod(x, order // r, mod, p) != one for r in prime_factors(order))


def primitive_polynomial(p: int, k: int) -> tuple[int, ...]:
    """Lexicographically smallest monic primitive polynomial of degree k.

    Candidates are compared as coefficient tuples (c0, c1, ..., c_{k-1}),
    lowest degree first.
    """
    for low in itertools.product(range(p), repeat=k):
        mod = list(low) + [1]
        if is_primitive_poly(mod, p):
            return tuple(mod)
    raise AssertionError("no primitive polynomial found")  # cannot happen


@dataclass(frozen=True, eq=False)
class FieldTable:
    prime_power: PrimePower
    modulus: tuple[int, ...]
    alpha: int
    exp: tuple[int, ...] = field(repr=False)
    log: tuple[int, ...] = field(repr=False)

    @property
    def p(self) -> int:
        return self.prime_power.p

    @property
    def k(self) -> int:
        return self.prime_power.k

    @property
    def q(self) -> int:
        return self.prime_power.q

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    def coeffs(self, e: int) -> tuple[int, ...]:
        p = self.p
        out = []
        for _ in range(self.k):
            e, r = divmod(e, p)
            out.append(r)
        return tuple(out)

    def element(self, coeffs) -> int:
        if len(coeffs) != self.k:
            raise ValueError(f"expected {self.k} coefficients, got {len(coeffs)}")
        code = 0
        for c in reversed(coeffs):
            if not 0 <= c < self.p:
                raise ValueError(f"coefficient {c} outside [0, {self.p})")
            code = code * self.p + c
        return code

    def elements(self) -> range:
        return range(self.q)

    def add(self, a: int, b: int) -> int:
        p = self.p
        if p == 2:
            return a ^ b
        out, scale = 0, 1
        while a or b:
            a, x = divmod(a, p)
            b, y = divmod(b, p)
            out += ((x + y) % p) * scale
            scale *= p
        return out

    def neg(self, a: int) -> int:
        p = self.p
        if p == 2:
            return a
        out, scale = 0, 1
        while a:
            a, x = divmod(a, p)
            out += ((p - x) % p) * scale
            scale *= p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self.exp[(self.log[a] + self.log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("zero has no inverse")
        return self.exp[(-self.log[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def power(self, i: int) -> int:
        """alpha**i; negative exponents are reduced modulo q - 1."""
        return self.exp[i % (self.q - 1)]

    def pow(self, e: int, i: int) -> int:
        if e == 0:
            if i < 0:
                raise ZeroDivisionError("zero to a negative power")
            return 1 if i == 0 else 0
        return self.exp[(self.log[e] * i) % (self.q - 1)]

    def order(self, e: int) -> int:
        return element_order(self, e)


def build_field(p: int, k: int, modulus=None, cap: int = DEFAULT_SIZE_CAP) -> FieldTable:
    """Construct GF(p^k) with the generator's residue class as primitive element.

    ``modulus`` (monic, lowest degree first) overrides the default choice; it
    must itself be primitive.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if k < 1:
        raise ValueError("exponent must be positive")
    pp = PrimePower(p, k)
    if pp.q > cap:
        raise ValueError(f"field size {pp.q} exceeds cap {cap}")
    if modulus is None:
        mod = primitive_polynomial(p, k)
        assert is_irreducible(mod, p)
    else:
        mod = tuple(int(c) % p for c in modulus)
        if len(mod) != k + 1 or mod[-1] != 1:
            raise ValueError("modulus must be monic of degree k")
        if not is_irreducible(mod, p):
            raise ValueError("modulus is reducible")
        if not is_primitive_poly(mod, p):
            raise ValueError("modulus is not primitive")

    q = pp.q
    gen = _reduce_x(mod, p)

    def code(v):
        c = 0
        for x in reversed(v):
            c = c * p + x
        return c

    exp = [0] * (q - 1)
    log = [-1] * q
    cur = [1] + [0] * (k - 1)
    for i in range(q - 1):
        c = code(cur)
        exp[i] = c
        log[c] = i
        cur = _poly_mulmod(cur, gen, mod, p)
    return FieldTable(pp, mod, code(gen), tuple(exp), tuple(log))


@lru_cache(maxsize=None)
def cached_field(p: int, k: int) -> FieldTable:
    return build_field(p, k)


def power(field: FieldTable, i: int) -> int:
    return field.power(i)


def element_order(field: FieldTable, e: int) -> int:
    """Multiplicative order of a nonzero element."""
    if e == 0:
        raise ValueError("zero has no multiplicative order")
    n = field.q - 1
    return n // math.gcd(field.log[e], n)
