"""Exact arithmetic in small finite fields F_q with q = p^ell.

Field elements are plain ints in ``range(q)`` encoding base-p digit
vectors, least significant digit first: the int ``sum(c_i * p**i)``
stands for the residue class of ``sum(c_i * x**i)`` modulo a fixed
irreducible polynomial.  All arithmetic is table driven and exact.

Supported fields and their defining moduli (coefficients low to high):

    p in {2, 3, 5, 7, 11, 13}, ell = 1   modulus x      (prime fields)
    F_4 = F_2[x] / (x^2 + x + 1)
    F_8 = F_2[x] / (x^3 + x + 1)
    F_9 = F_3[x] / (x^2 + 1)

The modulus table is fixed so that every run on every platform produces
identical element encodings; downstream output (search tables, circuit
files) stays byte-reproducible.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterator

_PRIMES = (2, 3, 5, 7, 11, 13)

# Irreducible moduli for the supported extension fields, low coeff first.
_EXTENSION_MODULI: dict[tuple[int, int], tuple[int, ...]] = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (3, 2): (1, 0, 1),
}


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class Field:
    """A finite field F_{p^ell}, with table-driven int arithmetic.

    Do not instantiate directly; use :func:`make_field` so that equal
    parameters always yield the same cached instance.
    """

    __slots__ = ("p", "ell", "q", "modulus", "_mul", "_inv", "_neg")

    def __init__(self, p: int, ell: int, modulus: tuple[int, ...]):
        self.p = p
        self.ell = ell
        self.q = p**ell
        self.modulus = modulus
        self._build_tables()

    def _build_tables(self) -> None:
        p, ell, q = self.p, self.ell, self.q
        mod = self.modulus

        def mul_raw(a: int, b: int) -> int:
            # schoolbook product of digit vectors, reduced mod the modulus
            da = [(a // p**i) % p for i in range(ell)]
            db = [(b // p**i) % p for i in range(ell)]
            prod = [0] * (2 * ell - 1)
            for i, ca in enumerate(da):
                if ca:
                    for j, cb in enumerate(db):
                        prod[i + j] = (prod[i + j] + ca * cb) % p
            for i in range(len(prod) - 1, ell - 1, -1):
                c = prod[i]
                if c:
                    prod[i] = 0
                    for j in range(ell):
                        prod[i - ell + j] = (prod[i - ell + j] - c * mod[j]) % p
            return sum(prod[i] * p**i for i in range(ell))

        mul = [[mul_raw(a, b) for b in range(q)] for a in range(q)]
        inv = [0] * q
        for a in range(1, q):
            for b in range(1, q):
                if mul[a][b] == 1:
                    inv[a] = b
                    break
            else:
                raise AssertionError(f"no inverse for {a}; modulus not irreducible")
        neg = [0] * q
        for a in range(q):
            neg[a] = sum(((-((a // p**i) % p)) % p) * p**i for i in range(ell))
        self._mul = tuple(tuple(row) for row in mul)
        self._inv = tuple(inv)
        self._neg = tuple(neg)

    # -- arithmetic on int encodings ------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.ell == 1:
            return (a + b) % self.p
        p = self.p
        return sum(((a // p**i + b // p**i) % p) * p**i for i in range(self.ell))

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self._neg[b])

    def neg(self, a: int) -> int:
        return self._neg[a]

    def mul(self, a: int, b: int) -> int:
        return self._mul[a][b]

    def inv(self, a: int) -> int:
        """Multiplicative inverse; raises ZeroDivisionError for 0."""
        if a == 0:
            raise ZeroDivisionError("0 has no multiplicative inverse")
        return self._inv[a]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        r = 1
        while e:
            if e & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            e >>= 1
        return r

    def multiplicative_order(self, a: int) -> int:
        if a == 0:
            raise ValueError("0 has no multiplicative order")
        r, k = a, 1
        while r != 1:
            r = self.mul(r, a)
            k += 1
        return k

    # -- element helpers -------------------------------------------------

    def elements(self) -> Iterator[int]:
        return iter(range(self.q))

    def element(self, value: int | list[int] | tuple[int, ...]) -> "FieldElement":
        if isinstance(value, (list, tuple)):
            if len(value) != self.ell:
                raise ValueError(f"coefficient vector must have length {self.ell}")
            value = sum((c % self.p) * self.p**i for i, c in enumerate(value))
        if not 0 <= value < self.q:
            raise ValueError(f"element {value} out of range for F_{self.q}")
        return FieldElement(self, value)

    def vector(self, a: int) -> tuple[int, ...]:
        """Base-p digit vector of an element, low digit first."""
        return tuple((a // self.p**i) % self.p for i in range(self.ell))

    def __repr__(self) -> str:
        return f"F_{self.q}" if self.ell == 1 else f"F_{self.q}(=F_{self.p}^{self.ell})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Field) and (self.p, self.ell) == (other.p, other.ell)

    def __hash__(self) -> int:
        return hash((self.p, self.ell))

    def __reduce__(self):
        return (make_field, (self.p, self.ell))


@functools.lru_cache(maxsize=None)
def make_field(p: int, ell: int = 1) -> Field:
    """Return the cached field F_{p^ell} with its fixed documented modulus.

    Raises ValueError for non-prime p or an (p, ell) pair outside the
    supported table.
    """
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    if ell == 1:
        if p not in _PRIMES:
            raise ValueError(f"unsupported prime field F_{p}; supported: {_PRIMES}")
        return Field(p, 1, (0, 1))
    modulus = _EXTENSION_MODULI.get((p, ell))
    if modulus is None:
        raise ValueError(f"unsupported extension field F_{p}^{ell}")
    return Field(p, ell, modulus)


def field_from_order(q: int) -> Field:
    """Resolve an order q = p^ell to the matching supported field."""
    for p in _PRIMES:
        ell = 0
        n = q
        while n % p == 0:
            n //= p
            ell += 1
        if n == 1 and ell >= 1:
            return make_field(p, ell)
    raise ValueError(f"{q} is not a supported prime power")


@dataclass(frozen=True)
class FieldElement:
    """A field element bound to its field, for use at API boundaries.

    Internally most code works on raw ints via the Field methods; this
    wrapper exists where an element must travel with its field (gate
    parameters, parsed file values).
    """

    field: Field
    value: int

    def __post_init__(self) -> None:
        if not 0 <= self.value < self.field.q:
            raise ValueError(f"element {self.value} out of range for F_{self.field.q}")

    def _check(self, other: "FieldElement") -> None:
        if self.field != other.field:
            raise ValueError("field mismatch")

    def __add__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return FieldElement(self.field, self.field.add(self.value, other.value))

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return FieldElement(self.field, self.field.sub(self.value, other.value))

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return FieldElement(self.field, self.field.mul(self.value, other.value))

    def __neg__(self) -> "FieldElement":
        return FieldElement(self.field, self.field.neg(self.value))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.value))

    def __bool__(self) -> bool:
        return self.value != 0

    @property
    def vector(self) -> tuple[int, ...]:
        return self.field.vector(self.value)

    def __repr__(self) -> str:
        return f"{self.value}@F{self.field.q}"
