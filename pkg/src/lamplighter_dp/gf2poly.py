"""Laurent polynomials over GF(2).

A nonzero polynomial is stored as an ``order`` (exponent of the trailing
monomial) and an integer ``bits`` whose bit ``k`` is the coefficient of
``z^(order + k)``.  The representation is strict: ``bits`` is odd for every
nonzero polynomial, and the zero polynomial is ``bits == 0, order == 0``.

Text format: a '+'-separated sum of monomials ``1``, ``z``, ``z^k`` (``k`` may
be negative), e.g. ``"z^-2+1+z^3"``; ``"0"`` is the zero polynomial.
"""

from __future__ import annotations

import re

__all__ = [
    "LaurentPoly",
    "PolyParseError",
    "ZERO",
    "ONE",
    "Z",
    "add",
    "mul",
    "div_rem",
    "divides",
    "shift",
    "monomial",
    "parse_poly",
    "ordinary_divmod",
    "ordinary_mul",
    "ordinary_mod",
]


class PolyParseError(ValueError):
    """Malformed polynomial text; ``pos`` is the offending character offset."""

    def __init__(self, message: str, pos: int = 0):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


# -- ordinary GF(2)[z] kernels on python ints ---------------------------------

def ordinary_mul(a: int, b: int) -> int:
    """Carry-less product of two bit-packed polynomials."""
    if a.bit_count() < b.bit_count():
        a, b = b, a
    c = 0
    while b:
        low = b & -b
        c ^= a << (low.bit_length() - 1)
        b ^= low
    return c


def ordinary_divmod(a: int, b: int) -> tuple[int, int]:
    if b == 0:
        raise ZeroDivisionError("division by zero polynomial")
    n = b.bit_length()
    q = 0
    m = a.bit_length()
    while m >= n:
        s = m - n
        a ^= b << s
        q |= 1 << s
        m = a.bit_length()
    return q, a


def ordinary_mod(a: int, b: int) -> int:
    if b == 0:
        raise ZeroDivisionError("division by zero polynomial")
    n = b.bit_length()
    m = a.bit_length()
    while m >= n:
        a ^= b << (m - n)
        m = a.bit_length()
    return a


def _trailing_zeros(x: int) -> int:
    return (x & -x).bit_length() - 1


class LaurentPoly:
    """Immutable Laurent polynomial over GF(2)."""

    __slots__ = ("bits", "order")

    def __init__(self, bits: int = 0, order: int = 0):
        if bits < 0:
            raise ValueError("bits must be non-negative")
        if bits == 0:
            order = 0
        elif not bits & 1:
            tz = _trailing_zeros(bits)
            bits >>= tz
            order += tz
        object.__setattr__(self, "bits", bits)
        object.__setattr__(self, "order", order)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    @classmethod
    def from_exponents(cls, exponents) -> "LaurentPoly":
        """Sum of ``z^e`` over ``exponents``, counted mod 2."""
        exps = list(exponents)
        if not exps:
            return ZERO
        lo = min(exps)
        buf = bytearray(((max(exps) - lo) >> 3) + 1)
        for e in exps:
            k = e - lo
            buf[k >> 3] ^= 1 << (k & 7)
        return cls(int.from_bytes(buf, "little"), lo)

    @classmethod
    def from_coeffs(cls, coeffs, order: int = 0) -> "LaurentPoly":
        """Build from coefficients listed in ascending exponent order starting at ``order``."""
        bits = 0
        for k, c in enumerate(coeffs):
            if int(c) & 1:
                bits |= 1 << k
        return cls(bits, order)

    @property
    def is_zero(self) -> bool:
        return self.bits == 0

    @property
    def degree(self) -> int | None:
        if self.bits == 0:
            return None
        return self.order + self.bits.bit_length() - 1

    @property
    def ord(self) -> int | None:
        return None if self.bits == 0 else self.order

    @property
    def coeffs(self) -> tuple[int, ...]:
        """Coefficients a_ord ... a_deg (empty for zero)."""
        b = self.bits
        return tuple((b >> k) & 1 for k in range(b.bit_length()))

    @property
    def size(self) -> int:
        if self.bits == 0:
            return 0
        return max(abs(self.degree), abs(self.order))

    @property
    def span(self) -> int:
        """deg - ord for nonzero polynomials, 0 for zero."""
        return self.bits.bit_length() - 1 if self.bits else 0

    def exponents(self) -> list[int]:
        out = []
        b = self.bits
        while b:
            low = b & -b
            out.append(self.order + low.bit_length() - 1)
            b ^= low
        return out

    def coefficient(self, e: int) -> int:
        k = e - self.order
        if k < 0 or self.bits == 0:
            return 0
        return (self.bits >> k) & 1

    def normalized(self) -> int:
        """The ordinary polynomial f * z^(-ord f), bit-packed."""
        return self.bits

    # arithmetic
    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        return add(self, other)

    __sub__ = __add__
    __xor__ = __add__

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        return mul(self, other)

    def __divmod__(self, other: "LaurentPoly"):
        return div_rem(self, other)

    def __floordiv__(self, other: "LaurentPoly") -> "LaurentPoly":
        return div_rem(self, other)[0]

    def __mod__(self, other: "LaurentPoly") -> "LaurentPoly":
        return div_rem(self, other)[1]

    def __bool__(self) -> bool:
        return self.bits != 0

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.bits == other.bits and self.order == other.order

    def __hash__(self) -> int:
        return hash((self.bits, self.order))

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)!r})"

    def __str__(self) -> str:
        return format_poly(self)

    def __reduce__(self):
        return (LaurentPoly, (self.bits, self.order))


ZERO = LaurentPoly(0, 0)
ONE = LaurentPoly(1, 0)
Z = LaurentPoly(1, 1)


def monomial(e: int) -> LaurentPoly:
    return LaurentPoly(1, e)


def add(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    if not f.bits:
        return g
    if not g.bits:
        return f
    m = min(f.order, g.order)
    return LaurentPoly((f.bits << (f.order - m)) ^ (g.bits << (g.order - m)), m)


def mul(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    if not f.bits or not g.bits:
        return ZERO
    # product of odd integers under carry-less multiplication stays odd
    return LaurentPoly(ordinary_mul(f.bits, g.bits), f.order + g.order)


def shift(f: LaurentPoly, k: int) -> LaurentPoly:
    """Multiply by z^k."""
    if not f.bits or k == 0:
        return f
    return LaurentPoly(f.bits, f.order + k)


def div_rem(dividend: LaurentPoly, divisor: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    """Quotient and remainder with ord(dividend) <= ord(r) <= deg(r) < ord(dividend) + span(divisor)."""
    if not divisor.bits:
        raise ZeroDivisionError("division by zero polynomial")
    if not dividend.bits:
        return ZERO, ZERO
    q, r = ordinary_divmod(dividend.bits, divisor.bits)
    return (
        LaurentPoly(q, dividend.order - divisor.order),
        LaurentPoly(r, dividend.order),
    )


def divides(divisor: LaurentPoly, dividend: LaurentPoly) -> bool:
    """True iff ``divisor`` divides ``dividend``; zero divides only zero."""
    if not divisor.bits:
        return not dividend.bits
    if not dividend.bits:
        return True
    if divisor.bits == 1:
        return True
    return ordinary_mod(dividend.bits, divisor.bits) == 0


# -- text format ----------------------------------------------------------------

_MONO = re.compile(r"z(?:\^(-?\d+))?|1")


def format_poly(f: LaurentPoly) -> str:
    if not f.bits:
        return "0"
    parts = []
    for e in f.exponents():
        if e == 0:
            parts.append("1")
        elif e == 1:
            parts.append("z")
        else:
            parts.append(f"z^{e}")
    return "+".join(parts)


def parse_poly(text: str) -> LaurentPoly:
    """Parse the '+'-separated monomial format; duplicate monomials are rejected."""
    s = "".join(text.split())
    if s == "0":
        return ZERO
    if not s:
        raise PolyParseError("empty polynomial", 0)
    seen: set[int] = set()
    pos = 0
    while True:
        m = _MONO.match(s, pos)
        if m is None:
            raise PolyParseError(f"unexpected character {s[pos:pos+1]!r}", pos)
        if m.group(0) == "1":
            e = 0
        elif m.group(1) is None:
            e = 1
        else:
            e = int(m.group(1))
        if e in seen:
            raise PolyParseError(f"duplicate monomial z^{e}", pos)
        seen.add(e)
        pos = m.end()
        if pos == len(s):
            break
        if s[pos] != "+":
            raise PolyParseError(f"expected '+', got {s[pos]!r}", pos)
        pos += 1
        if pos == len(s):
            raise PolyParseError("trailing '+'", pos)
    return LaurentPoly.from_exponents(seen)
