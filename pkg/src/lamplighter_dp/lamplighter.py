"""The lamplighter group Z_2 wr Z as pairs (delta, lamp) in Z x| Z_2[z^+-1].

Multiplication: (d1, f1)(d2, f2) = (d1 + d2, f1 * z^(-d2) + f2).
Words are token sequences over ``a A t T x X`` (uppercase = inverse).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .gf2poly import ZERO, LaurentPoly, add, monomial, shift

__all__ = ["GroupElement", "IDENTITY", "GEN_A", "GEN_T", "g_mul", "g_inv", "from_word", "eval_equation"]


@dataclass(frozen=True)
class GroupElement:
    delta: int = 0
    lamp: LaurentPoly = ZERO

    @property
    def is_identity(self) -> bool:
        return self.delta == 0 and not self.lamp

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        return g_mul(self, other)

    def __str__(self) -> str:
        return f"({self.delta}, {self.lamp})"


IDENTITY = GroupElement(0, ZERO)
GEN_A = GroupElement(0, monomial(0))
GEN_T = GroupElement(1, ZERO)


def g_mul(u: GroupElement, v: GroupElement) -> GroupElement:
    return GroupElement(u.delta + v.delta, add(shift(u.lamp, -v.delta), v.lamp))


def g_inv(u: GroupElement) -> GroupElement:
    return GroupElement(-u.delta, shift(u.lamp, u.delta))


def from_word(word: Iterable[str]) -> GroupElement:
    """Evaluate a word over ``a A t T`` right to left in O(|w|) lamp toggles."""
    delta = 0
    exps: set[int] = set()
    for tok in reversed(list(word)):
        if tok == "a" or tok == "A":
            exps ^= {-delta}
        elif tok == "t":
            delta += 1
        elif tok == "T":
            delta -= 1
        else:
            raise ValueError(f"token {tok!r} is not a group generator")
    return GroupElement(delta, LaurentPoly.from_exponents(exps))


def eval_equation(word: Iterable[str], x_val: GroupElement) -> GroupElement:
    """Value of the word with x := x_val, folded with g_mul left to right."""
    x_inv = g_inv(x_val)
    images = {"a": GEN_A, "A": GEN_A, "t": GEN_T, "T": GroupElement(-1, ZERO), "x": x_val, "X": x_inv}
    acc = IDENTITY
    for tok in word:
        try:
            g = images[tok]
        except KeyError:
            raise ValueError(f"unknown token {tok!r}") from None
        acc = g_mul(acc, g)
    return acc
