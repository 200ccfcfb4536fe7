"""delta-parametric polynomials  sum_i f_i(z) * z^(i*delta).

Text format uses ``d`` for z^delta: ``"(1+z^-2)*d^-1+(z^2+z+z^-1)+(z+1)*d^2"``.
Each summand is ``(poly)*d^k``, ``(poly)*d``, ``poly*d`` or a bare ``poly``
(block 0).  A repeated block index is rejected.
"""

from __future__ import annotations

import re
from typing import Iterable, Mapping

from .gf2poly import ZERO, LaurentPoly, PolyParseError, add, monomial, parse_poly, shift

__all__ = ["ParamPoly", "parse_param", "TrivialParamPolyError"]


class TrivialParamPolyError(ValueError):
    pass


class ParamPoly:
    """Sparse block map  i -> f_i  with every stored block nonzero."""

    __slots__ = ("_blocks",)

    def __init__(self, blocks: Mapping[int, LaurentPoly] | None = None):
        clean = {}
        if blocks:
            for i, f in blocks.items():
                if not isinstance(f, LaurentPoly):
                    raise TypeError("blocks must be LaurentPoly")
                if f:
                    clean[int(i)] = f
        self._blocks = dict(sorted(clean.items()))

    @classmethod
    def from_monomials(cls, pairs: Iterable[tuple[int, int]]) -> "ParamPoly":
        """Sum of z^(a + b*delta) over ``(a, b)`` pairs, mod 2."""
        acc: dict[int, set[int]] = {}
        for a, b in pairs:
            s = acc.setdefault(b, set())
            s ^= {a}
        return cls({b: LaurentPoly.from_exponents(s) for b, s in acc.items()})

    @property
    def blocks(self) -> dict[int, LaurentPoly]:
        return dict(self._blocks)

    def items(self):
        return self._blocks.items()

    def block(self, i: int) -> LaurentPoly:
        return self._blocks.get(i, ZERO)

    @property
    def is_trivial(self) -> bool:
        return not self._blocks

    @property
    def deg_delta(self) -> int:
        if not self._blocks:
            raise TrivialParamPolyError("delta-degree of the trivial parametric polynomial")
        return max(self._blocks)

    @property
    def ord_delta(self) -> int:
        if not self._blocks:
            raise TrivialParamPolyError("delta-order of the trivial parametric polynomial")
        return min(self._blocks)

    @property
    def delta_span(self) -> int:
        return self.deg_delta - self.ord_delta

    @property
    def leading_block(self) -> LaurentPoly:
        return self._blocks[self.deg_delta]

    @property
    def trailing_block(self) -> LaurentPoly:
        return self._blocks[self.ord_delta]

    def __add__(self, other: "ParamPoly") -> "ParamPoly":
        out = dict(self._blocks)
        for i, f in other._blocks.items():
            out[i] = add(out.get(i, ZERO), f)
        return ParamPoly(out)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ParamPoly):
            return NotImplemented
        return self._blocks == other._blocks

    def __hash__(self) -> int:
        return hash(tuple(self._blocks.items()))

    def __bool__(self) -> bool:
        return bool(self._blocks)

    def __repr__(self) -> str:
        return f"ParamPoly({format_param(self)!r})"

    def __str__(self) -> str:
        return format_param(self)


def toggle_monomial(p: ParamPoly, a: int, b: int) -> ParamPoly:
    """Add z^(a + b*delta) mod 2."""
    blocks = p.blocks
    blocks[b] = add(blocks.get(b, ZERO), monomial(a))
    return ParamPoly(blocks)


def instantiate(p: ParamPoly, delta: int) -> LaurentPoly:
    """Substitute an integer for delta."""
    out = ZERO
    for i, f in p.items():
        out = add(out, shift(f, i * delta))
    return out


def rev(p: ParamPoly) -> ParamPoly:
    """Replace delta by -delta."""
    return ParamPoly({-i: f for i, f in p.items()})


def amplitude(p: ParamPoly) -> int:
    """Largest |j| over all monomials z^j occurring in any block."""
    if p.is_trivial:
        raise TrivialParamPolyError("amplitude of the trivial parametric polynomial")
    return max(max(abs(f.order), abs(f.degree)) for _, f in p.items())


def to_grid(p: ParamPoly) -> set[tuple[int, int]]:
    """Monomial z^(j + i*delta) <-> grid point (i, j)."""
    return {(i, j) for i, f in p.items() for j in f.exponents()}


def from_grid(points: Iterable[tuple[int, int]]) -> ParamPoly:
    return ParamPoly.from_monomials((j, i) for i, j in points)


# -- text format -------------------------------------------------------------------

_D_SUFFIX = re.compile(r"\*d(?:\^(-?\d+))?")


def format_param(p: ParamPoly) -> str:
    if p.is_trivial:
        return "0"
    parts = []
    for i, f in p.items():
        body = f"({f})"
        if i == 0:
            parts.append(body)
        elif i == 1:
            parts.append(f"{body}*d")
        else:
            parts.append(f"{body}*d^{i}")
    return "+".join(parts)


def _split_top_level(s: str) -> list[tuple[str, int]]:
    parts, depth, start = [], 0, 0
    for k, ch in enumerate(s):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise PolyParseError("unbalanced ')'", k)
        elif ch == "+" and depth == 0:
            parts.append((s[start:k], start))
            start = k + 1
    if depth:
        raise PolyParseError("unbalanced '('", len(s))
    parts.append((s[start:], start))
    return parts


def parse_param(text: str) -> ParamPoly:
    """Parse the 'd'-notation.  Bare summands without ``*d`` belong to block 0."""
    s = "".join(text.split())
    if s == "0":
        return ParamPoly()
    if not s:
        raise PolyParseError("empty parametric polynomial", 0)
    blocks: dict[int, LaurentPoly] = {}
    bare: list[tuple[str, int]] = []
    for chunk, pos in _split_top_level(s):
        if not chunk:
            raise PolyParseError("empty summand", pos)
        if chunk.startswith("("):
            close = chunk.find(")")
            inner, rest = chunk[1:close], chunk[close + 1:]
            inner_pos = pos + 1
        else:
            star = chunk.find("*")
            inner, rest = (chunk, "") if star < 0 else (chunk[:star], chunk[star:])
            inner_pos = pos
        if rest:
            m = _D_SUFFIX.fullmatch(rest)
            if m is None:
                raise PolyParseError(f"bad delta factor {rest!r}", pos + len(chunk) - len(rest))
            i = 1 if m.group(1) is None else int(m.group(1))
        elif chunk.startswith("("):
            i = 0
        else:
            # bare monomials of block 0 may be written without parentheses
            bare.append((inner, inner_pos))
            continue
        try:
            f = parse_poly(inner)
        except PolyParseError as exc:
            raise PolyParseError(str(exc).rsplit(" (at", 1)[0], inner_pos + exc.pos) from None
        if i in blocks:
            raise PolyParseError(f"repeated block d^{i}", pos)
        blocks[i] = f
    if bare:
        if 0 in blocks:
            raise PolyParseError("repeated block d^0", bare[0][1])
        blocks[0] = parse_poly("+".join(t for t, _ in bare))
    return ParamPoly(blocks)
