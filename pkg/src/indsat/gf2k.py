"""Arithmetic in binary fields GF(2^k).

Elements are plain ints: bit ``i`` is the coefficient of ``alpha**i`` where
``alpha`` is the class of ``x`` modulo the field polynomial. Addition is XOR.
"""

from __future__ import annotations

from functools import cached_property

MAX_BITS = 16


def poly_degree(p: int) -> int:
    return p.bit_length() - 1


def poly_mod(a: int, m: int) -> int:
    """Remainder of ``a`` divided by ``m`` over GF(2)."""
    dm = poly_degree(m)
    while a and poly_degree(a) >= dm:
        a ^= m << (poly_degree(a) - dm)
    return a


def clmul(a: int, b: int) -> int:
    """Carry-less product of two bitmask polynomials."""
    out = 0
    while b:
        if b & 1:
            out ^= a
        a <<= 1
        b >>= 1
    return out


def is_irreducible(p: int) -> bool:
    """Trial division by every polynomial of degree 1..deg(p)//2."""
    d = poly_degree(p)
    if d < 1:
        return False
    for q in range(2, 1 << (d // 2 + 1)):
        if poly_mod(p, q) == 0:
            return False
    return True


def _prime_factors(n: int) -> list[int]:
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


class BinaryField:
    """The field GF(2^k) = GF(2)[x] / (modulus).

    ``modulus`` is a (k+1)-bit mask, e.g. ``0b10011`` for x^4 + x + 1.
    Irreducibility is checked on construction.
    """

    def __init__(self, k: int, modulus: int):
        if not 1 <= k <= MAX_BITS:
            raise ValueError(f"field bit-width must be in 1..{MAX_BITS}, got {k}")
        if poly_degree(modulus) != k:
            raise ValueError(f"modulus {modulus:#x} does not have degree {k}")
        if not is_irreducible(modulus):
            raise ValueError(f"modulus {modulus:#x} is reducible over GF(2)")
        self.k = k
        self.modulus = modulus

    def __repr__(self) -> str:
        return f"BinaryField(k={self.k}, modulus={self.modulus:#x})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BinaryField):
            return NotImplemented
        return (self.k, self.modulus) == (other.k, other.modulus)

    def __hash__(self) -> int:
        return hash((self.k, self.modulus))

    @property
    def order(self) -> int:
        return 1 << self.k

    def elements(self) -> range:
        return range(self.order)

    def check(self, a: int) -> int:
        if not isinstance(a, int) or not 0 <= a < self.order:
            raise ValueError(f"{a!r} is not an element of {self}")
        return a

    def add(self, a: int, b: int) -> int:
        return self.check(a) ^ self.check(b)

    def mul(self, a: int, b: int) -> int:
        return poly_mod(clmul(self.check(a), self.check(b)), self.modulus)

    def pow(self, a: int, e: int) -> int:
        self.check(a)
        if e < 0:
            raise ValueError("negative exponent")
        if a == 0 and e == 0:
            raise ValueError("0**0 is undefined")
        result, base = 1, a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def inverse(self, a: int) -> int:
        if self.check(a) == 0:
            raise ZeroDivisionError("0 has no multiplicative inverse")
        return self.pow(a, self.order - 2)

    @cached_property
    def _group_order_primes(self) -> list[int]:
        return _prime_factors(self.order - 1)

    def multiplicative_order(self, a: int) -> int:
        if self.check(a) == 0:
            raise ValueError("0 is not in the multiplicative group")
        x, r = a, 1
        while x != 1:
            x = self.mul(x, a)
            r += 1
        return r

    def is_generator(self, a: int) -> bool:
        """True iff ``a`` generates the multiplicative group."""
        if self.check(a) == 0:
            raise ValueError("0 is not in the multiplicative group")
        q = self.order - 1
        return all(self.pow(a, q // p) != 1 for p in self._group_order_primes)

    def nonzero_cubes(self) -> frozenset[int]:
        return frozenset(self.pow(x, 3) for x in range(1, self.order))

    def format(self, a: int, var: str = "a") -> str:
        """Render an element as a polynomial, lowest degree first."""
        self.check(a)
        if a == 0:
            return "0"
        terms = []
        for i in range(self.k):
            if a >> i & 1:
                terms.append("1" if i == 0 else var if i == 1 else f"{var}^{i}")
        return "+".join(terms)


GF16 = BinaryField(4, 0b10011)
ALPHA = 0b0010
