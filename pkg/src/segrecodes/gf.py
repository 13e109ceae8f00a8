"""Finite fields GF(q) with elements stored as integer codes.

For a prime field the code of an element is its residue mod p.  For
q = p^m with m > 1 the code is the base-p encoding of a polynomial of
degree < m: the polynomial c_{m-1} x^{m-1} + ... + c_1 x + c_0 has code
sum(c_i * p**i).  In GF(4) with modulus x^2 + x + 1, x is code 2 and x + 1
is code 3.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from .errors import DivisionByZero, NotPrimePower, UnsupportedField

# Largest extension field with a built-in modulus.
MAX_EXTENSION_Q = 64
# Largest field for which matrix kernels build dense operation tables.
MAX_TABLE_Q = 1024

# Monic irreducible moduli, coefficients listed from the constant term up.
# Conway polynomials where they are the textbook choice.
IRREDUCIBLE_MODULI: dict[int, tuple[int, ...]] = {
    4: (1, 1, 1),  # x^2 + x + 1
    8: (1, 1, 0, 1),  # x^3 + x + 1
    9: (2, 2, 1),  # x^2 + 2x + 2
    16: (1, 1, 0, 0, 1),  # x^4 + x + 1
    25: (2, 4, 1),  # x^2 + 4x + 2
    27: (1, 2, 0, 1),  # x^3 + 2x + 1
    32: (1, 0, 1, 0, 0, 1),  # x^5 + x^2 + 1
    49: (3, 6, 1),  # x^2 + 6x + 3
    64: (1, 1, 0, 1, 1, 0, 1),  # x^6 + x^4 + x^3 + x + 1
}


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def factor_prime_power(q: int) -> tuple[int, int]:
    """Return (p, m) with q == p**m, or raise NotPrimePower."""
    if q < 2:
        raise NotPrimePower(f"q={q} is not a prime power")
    p = None
    n = q
    f = 2
    while f * f <= n:
        if n % f == 0:
            p = f
            break
        f += 1 if f == 2 else 2
    if p is None:
        return q, 1
    m = 0
    while n % p == 0:
        n //= p
        m += 1
    if n != 1:
        raise NotPrimePower(f"q={q} has at least two distinct prime factors")
    return p, m


class FieldTables(NamedTuple):
    """Dense operation tables indexed by element codes."""

    add: np.ndarray
    sub: np.ndarray
    mul: np.ndarray
    neg: np.ndarray
    inv: np.ndarray  # inv[0] is 0 and must never be used


@dataclass(frozen=True)
class FieldSpec:
    q: int
    p: int
    m: int
    modulus: tuple[int, ...] = field(default=(), compare=True)

    def __post_init__(self):
        if self.p ** self.m != self.q:
            raise ValueError(f"q={self.q} is not {self.p}^{self.m}")

    def __repr__(self) -> str:
        return f"GF({self.q})"

    @property
    def is_prime(self) -> bool:
        return self.m == 1

    # Scalar arithmetic. Prime fields use modular arithmetic directly,
    # extension fields go through cached tables.

    def check(self, a: int) -> int:
        if not 0 <= a < self.q:
            raise ValueError(f"{a} is not an element code of {self!r}")
        return a

    def add(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a + b) % self.p
        return int(_ext_tables(self).add[a, b])

    def sub(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a - b) % self.p
        return int(_ext_tables(self).sub[a, b])

    def neg(self, a: int) -> int:
        return self.sub(0, a)

    def mul(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a * b) % self.p
        return int(_ext_tables(self).mul[a, b])

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero(f"0 has no inverse in {self!r}")
        if self.m == 1:
            return pow(a, -1, self.p)
        return int(_ext_tables(self).inv[a])

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        if self.m == 1:
            return pow(a, e, self.p)
        result, base = 1, a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def elements(self, nonzero_only: bool = False) -> list[int]:
        return list(range(1 if nonzero_only else 0, self.q))

    def tables(self) -> FieldTables:
        """Operation tables for the vectorized and compiled kernels."""
        if self.q > MAX_TABLE_Q:
            raise UnsupportedField(
                f"matrix arithmetic needs operation tables; q={self.q} exceeds {MAX_TABLE_Q}"
            )
        return _tables(self)


@functools.lru_cache(maxsize=None)
def make_field(q: int) -> FieldSpec:
    """Build GF(q); the same q always yields an identical FieldSpec."""
    q = int(q)
    p, m = factor_prime_power(q)
    if m == 1:
        if q >= 2**31:
            raise UnsupportedField(f"prime fields are supported for p < 2^31, got {q}")
        return FieldSpec(q, p, 1, ())
    if q > MAX_EXTENSION_Q or q not in IRREDUCIBLE_MODULI:
        raise UnsupportedField(
            f"extension field GF({q}) not in the built-in table (q <= {MAX_EXTENSION_Q})"
        )
    return FieldSpec(q, p, m, IRREDUCIBLE_MODULI[q])


def arith(f: FieldSpec, a: int, b: int, kind: str) -> int:
    ops = {"add": f.add, "sub": f.sub, "mul": f.mul, "div": f.div}
    try:
        op = ops[kind]
    except KeyError:
        raise ValueError(f"unknown operation {kind!r}") from None
    return op(a, b)


def inv(f: FieldSpec, a: int) -> int:
    return f.inv(a)


def enumerate_elements(f: FieldSpec, nonzero_only: bool = False) -> list[int]:
    return f.elements(nonzero_only)


# -- polynomial helpers over GF(p), coefficient tuples from the constant term up

def decode(code: int, p: int, m: int) -> list[int]:
    digits = []
    for _ in range(m):
        code, r = divmod(code, p)
        digits.append(r)
    return digits


def encode(digits, p: int) -> int:
    code = 0
    for c in reversed(list(digits)):
        code = code * p + c
    return code


def poly_mulmod(a: list[int], b: list[int], modulus: tuple[int, ...], p: int) -> list[int]:
    m = len(modulus) - 1
    prod = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    # modulus is monic, so subtract multiples of it from the top down
    for top in range(len(prod) - 1, m - 1, -1):
        c = prod[top]
        if c:
            for i in range(m + 1):
                prod[top - m + i] = (prod[top - m + i] - c * modulus[i]) % p
    return (prod + [0] * m)[:m]


def is_irreducible(modulus: tuple[int, ...], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2."""
    m = len(modulus) - 1
    if m < 1 or modulus[-1] != 1:
        return False
    for deg in range(1, m // 2 + 1):
        for low in itertools.product(range(p), repeat=deg):
            divisor = list(low) + [1]
            if not any(_poly_rem(list(modulus), divisor, p)):
                return False
    return True


def _poly_rem(num: list[int], den: list[int], p: int) -> list[int]:
    num = num[:]
    dd = len(den) - 1
    for top in range(len(num) - 1, dd - 1, -1):
        c = num[top]
        if c:
            for i in range(dd + 1):
                num[top - dd + i] = (num[top - dd + i] - c * den[i]) % p
    return num[:dd]


@functools.lru_cache(maxsize=None)
def _ext_tables(f: FieldSpec) -> FieldTables:
    q, p, m = f.q, f.p, f.m
    polys = [decode(a, p, m) for a in range(q)]
    add = np.empty((q, q), dtype=np.int32)
    sub = np.empty((q, q), dtype=np.int32)
    mul = np.empty((q, q), dtype=np.int32)
    for a in range(q):
        for b in range(q):
            add[a, b] = encode([(x + y) % p for x, y in zip(polys[a], polys[b])], p)
            sub[a, b] = encode([(x - y) % p for x, y in zip(polys[a], polys[b])], p)
            mul[a, b] = encode(poly_mulmod(polys[a], polys[b], f.modulus, p), p)
    neg = sub[0].copy()
    inv_t = np.zeros(q, dtype=np.int32)
    for a in range(1, q):
        (b,) = np.flatnonzero(mul[a] == 1)
        inv_t[a] = b
    for t in (add, sub, mul, neg, inv_t):
        t.setflags(write=False)
    return FieldTables(add, sub, mul, neg, inv_t)


@functools.lru_cache(maxsize=None)
def _tables(f: FieldSpec) -> FieldTables:
    if f.m > 1:
        return _ext_tables(f)
    p = f.p
    r = np.arange(p, dtype=np.int64)
    add = ((r[:, None] + r[None, :]) % p).astype(np.int32)
    sub = ((r[:, None] - r[None, :]) % p).astype(np.int32)
    mul = ((r[:, None] * r[None, :]) % p).astype(np.int32)
    neg = sub[0].copy()
    inv_t = np.zeros(p, dtype=np.int32)
    inv_t[1:] = [pow(int(a), -1, p) for a in range(1, p)]
    for t in (add, sub, mul, neg, inv_t):
        t.setflags(write=False)
    return FieldTables(add, sub, mul, neg, inv_t)
