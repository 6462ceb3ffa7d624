"""Laurent polynomials in the delay variable D over a finite field.

A value is stored in canonical form as ``(lo, coeffs)`` where
``coeffs[i]`` (an int encoding of a field element) multiplies
``D**(lo + i)``.  A nonzero value has nonzero first and last
coefficients; the zero value is ``lo == 0, coeffs == ()``.

"Polynomial" below always means ``lo >= 0``: division, gcd and Smith
form computations are restricted to that subring, while the adjoint
substitution D -> 1/D is available on the whole ring.
"""

from __future__ import annotations

from typing import Iterable

from .fields import Field


class LaurentPoly:
    __slots__ = ("field", "lo", "coeffs")

    def __init__(self, field: Field, lo: int, coeffs: tuple[int, ...]):
        # canonical-form invariant is the caller's job; use laurent()
        self.field = field
        self.lo = lo
        self.coeffs = coeffs

    # -- queries ----------------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int | None:
        """Highest exponent with nonzero coefficient; None for zero."""
        return self.lo + len(self.coeffs) - 1 if self.coeffs else None

    @property
    def order(self) -> int | None:
        """Lowest exponent with nonzero coefficient; None for zero."""
        return self.lo if self.coeffs else None

    @property
    def is_polynomial(self) -> bool:
        return self.lo >= 0 or not self.coeffs

    @property
    def is_constant(self) -> bool:
        return not self.coeffs or (self.lo == 0 and len(self.coeffs) == 1)

    def coeff(self, exponent: int) -> int:
        i = exponent - self.lo
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def constant_term(self) -> int:
        return self.coeff(0)

    def leading_coeff(self) -> int:
        if not self.coeffs:
            return 0
        return self.coeffs[-1]

    def terms(self) -> Iterable[tuple[int, int]]:
        """Yield (exponent, coefficient) pairs for nonzero coefficients."""
        for i, c in enumerate(self.coeffs):
            if c:
                yield self.lo + i, c

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other: "LaurentPoly") -> None:
        if self.field != other.field:
            raise ValueError("field mismatch")

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check(other)
        if not self.coeffs:
            return other
        if not other.coeffs:
            return self
        f = self.field
        lo = min(self.lo, other.lo)
        hi = max(self.lo + len(self.coeffs), other.lo + len(other.coeffs))
        out = [0] * (hi - lo)
        for i, c in enumerate(self.coeffs):
            out[self.lo - lo + i] = c
        for i, c in enumerate(other.coeffs):
            j = other.lo - lo + i
            out[j] = f.add(out[j], c)
        return laurent(f, out, lo)

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __neg__(self) -> "LaurentPoly":
        f = self.field
        return LaurentPoly(f, self.lo, tuple(f.neg(c) for c in self.coeffs))

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check(other)
        if not self.coeffs or not other.coeffs:
            return zero(self.field)
        f = self.field
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                row = f._mul[a]
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] = f.add(out[i + j], row[b])
        return laurent(f, out, self.lo + other.lo)

    def scale(self, c: int) -> "LaurentPoly":
        """Multiply by the field constant c."""
        if c == 0:
            return zero(self.field)
        f = self.field
        return LaurentPoly(f, self.lo, tuple(f.mul(c, a) for a in self.coeffs))

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by D**k."""
        if not self.coeffs:
            return self
        return LaurentPoly(self.field, self.lo + k, self.coeffs)

    def adjoint(self) -> "LaurentPoly":
        """The substitution D -> 1/D; exponent e maps to -e."""
        if not self.coeffs:
            return self
        hi = self.lo + len(self.coeffs) - 1
        return LaurentPoly(self.field, -hi, tuple(reversed(self.coeffs)))

    def monic(self) -> "LaurentPoly":
        if not self.coeffs:
            return self
        lc = self.coeffs[-1]
        if lc == 1:
            return self
        return self.scale(self.field.inv(lc))

    # -- comparisons ----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, LaurentPoly)
            and self.field == other.field
            and self.lo == other.lo
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.field, self.lo, self.coeffs))

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for e, c in self.terms():
            if e == 0:
                parts.append(str(c))
            elif e == 1:
                parts.append("D" if c == 1 else f"{c}*D")
            else:
                parts.append(f"D^{e}" if c == 1 else f"{c}*D^{e}")
        return " + ".join(parts)


def laurent(field: Field, coeffs: Iterable[int], lo: int = 0) -> LaurentPoly:
    """Build a LaurentPoly in canonical form from raw coefficients."""
    cs = list(coeffs)
    for c in cs:
        if not 0 <= c < field.q:
            raise ValueError(f"coefficient {c} out of range for F_{field.q}")
    start = 0
    while start < len(cs) and cs[start] == 0:
        start += 1
    end = len(cs)
    while end > start and cs[end - 1] == 0:
        end -= 1
    if start == end:
        return LaurentPoly(field, 0, ())
    return LaurentPoly(field, lo + start, tuple(cs[start:end]))


def zero(field: Field) -> LaurentPoly:
    return LaurentPoly(field, 0, ())


def one(field: Field) -> LaurentPoly:
    return LaurentPoly(field, 0, (1,))


def constant(field: Field, c: int) -> LaurentPoly:
    return laurent(field, [c])


def monomial(field: Field, exponent: int, c: int = 1) -> LaurentPoly:
    return laurent(field, [c], exponent)


def delay(field: Field) -> LaurentPoly:
    """The delay variable D itself."""
    return monomial(field, 1)


def divmod_poly(f: LaurentPoly, g: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    """Exact polynomial division with remainder, f = q*g + r, deg r < deg g.

    Both arguments must be polynomial (lo >= 0) and g nonzero.
    """
    if f.field != g.field:
        raise ValueError("field mismatch")
    if not f.is_polynomial or not g.is_polynomial:
        raise ValueError("divmod requires polynomial operands (no negative exponents)")
    if g.is_zero:
        raise ZeroDivisionError("polynomial division by zero")
    fld = f.field
    rem = [0] * (f.lo + len(f.coeffs))
    for i, c in enumerate(f.coeffs):
        rem[f.lo + i] = c
    dg = g.degree
    assert dg is not None
    glead_inv = fld.inv(g.leading_coeff())
    quot = [0] * max(len(rem) - dg, 0)
    for i in range(len(rem) - 1, dg - 1, -1):
        c = rem[i]
        if c == 0:
            continue
        q = fld.mul(c, glead_inv)
        quot[i - dg] = q
        for j, gc in enumerate(g.coeffs):
            k = i - dg + g.lo + j
            rem[k] = fld.sub(rem[k], fld.mul(q, gc))
    return laurent(fld, quot), laurent(fld, rem)


def gcd_poly(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    """Monic gcd of two polynomials; gcd(f, 0) = monic(f), gcd(0, 0) = 0."""
    if f.field != g.field:
        raise ValueError("field mismatch")
    if not f.is_polynomial or not g.is_polynomial:
        raise ValueError("gcd requires polynomial operands (no negative exponents)")
    a, b = f, g
    while not b.is_zero:
        _, r = divmod_poly(a, b)
        a, b = b, r
    return a.monic()
