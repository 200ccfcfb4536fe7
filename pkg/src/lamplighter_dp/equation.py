"""One-variable equation words w(a, t, x) and their xt-grid trace.

Reading w right to left with a running position (t_w, x_w):

* ``a``/``A``: toggle z^(-t_w - x_w*delta) in num;
* ``x``: toggle z^(-t_w - x_w*delta) in den, then x_w += 1;
* ``X``: x_w -= 1, then toggle z^(-t_w - x_w*delta) in den;
* ``t``/``T``: t_w += 1 / t_w -= 1.

Substituting x = (delta, f) then gives
``w(delta, f) = (t_w + delta*x_w, num_delta + f*den_delta)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .gf2poly import LaurentPoly
from .parampoly import ParamPoly, to_grid

__all__ = [
    "Equation",
    "EquationParseError",
    "TraceResult",
    "parse_equation",
    "free_reduce",
    "exponent_sums",
    "trace",
    "instantiate_at",
    "INVERSE",
]

INVERSE = {"a": "A", "A": "a", "t": "T", "T": "t", "x": "X", "X": "x"}
_SUPERSCRIPT = str.maketrans("⁻¹²³⁴⁵⁶⁷⁸⁹⁰", "-1234567890")


class EquationParseError(ValueError):
    def __init__(self, message: str, pos: int = 0):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


@dataclass(frozen=True)
class Equation:
    letters: tuple[str, ...] = ()

    def __post_init__(self):
        for tok in self.letters:
            if tok not in INVERSE:
                raise ValueError(f"invalid token {tok!r}")

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __str__(self) -> str:
        return format_equation(self)

    def reduced(self) -> "Equation":
        return free_reduce(self)


_TOKEN = re.compile(r"([aAtTxX])(?:\^(?:\{(-?\d+)\}|(-?\d+))|([⁻¹²³⁴⁵⁶⁷⁸⁹⁰]+))?")


def parse_equation(text: str, reduce: bool = False) -> Equation:
    """Parse ``"t^2 a x t^-1 x^-2 a"`` style words; uppercase letters are inverses."""
    letters: list[str] = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos].isspace() or text[pos] == "*":
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if m is None:
            raise EquationParseError(f"unexpected character {text[pos]!r}", pos)
        letter, braced, plain, sup = m.groups()
        exp_text = braced or plain or (sup.translate(_SUPERSCRIPT) if sup else None)
        try:
            k = 1 if exp_text is None else int(exp_text)
        except ValueError:
            raise EquationParseError(f"bad exponent {exp_text!r}", m.start()) from None
        tok = letter if k >= 0 else INVERSE[letter]
        letters.extend([tok] * abs(k))
        pos = m.end()
    eq = Equation(tuple(letters))
    return free_reduce(eq) if reduce else eq


def format_equation(w: Equation) -> str:
    """Compact caret form; runs of a letter are merged, inverses use negative exponents."""
    out = []
    letters = w.letters
    i = 0
    while i < len(letters):
        j = i
        while j < len(letters) and letters[j] == letters[i]:
            j += 1
        base = letters[i].lower()
        k = (j - i) * (1 if letters[i].islower() else -1)
        out.append(base if k == 1 else f"{base}^{k}")
        i = j
    return " ".join(out)


def free_reduce(w: Equation) -> Equation:
    stack: list[str] = []
    for tok in w.letters:
        if stack and stack[-1] == INVERSE[tok]:
            stack.pop()
        else:
            stack.append(tok)
    return Equation(tuple(stack))


def exponent_sums(w: Equation) -> tuple[int, int, int]:
    """(sigma_a, sigma_t, sigma_x)."""
    sa = st = sx = 0
    for tok in w.letters:
        if tok == "a":
            sa += 1
        elif tok == "A":
            sa -= 1
        elif tok == "t":
            st += 1
        elif tok == "T":
            st -= 1
        elif tok == "x":
            sx += 1
        else:
            sx -= 1
    return sa, st, sx


@dataclass(frozen=True)
class TraceResult:
    sigma_a: int
    sigma_t: int
    sigma_x: int
    num: ParamPoly
    den: ParamPoly
    n_grid: frozenset = field(default_factory=frozenset)
    d_grid: frozenset = field(default_factory=frozenset)


def _walk(w: Equation):
    """Yield (kind, a, b) toggles of z^(a + b*delta); kind is 'n' or 'd'."""
    tw = xw = 0
    for tok in reversed(w.letters):
        if tok == "a" or tok == "A":
            yield "n", -tw, -xw
        elif tok == "x":
            yield "d", -tw, -xw
            xw += 1
        elif tok == "X":
            xw -= 1
            yield "d", -tw, -xw
        elif tok == "t":
            tw += 1
        else:
            tw -= 1


def trace(w: Equation) -> TraceResult:
    num: dict[int, set[int]] = {}
    den: dict[int, set[int]] = {}
    for kind, a, b in _walk(w):
        target = num if kind == "n" else den
        s = target.setdefault(b, set())
        if a in s:
            s.remove(a)
        else:
            s.add(a)
    num_p = ParamPoly({b: LaurentPoly.from_exponents(s) for b, s in num.items()})
    den_p = ParamPoly({b: LaurentPoly.from_exponents(s) for b, s in den.items()})
    sa, st, sx = exponent_sums(w)
    return TraceResult(sa, st, sx, num_p, den_p, frozenset(to_grid(num_p)), frozenset(to_grid(den_p)))


def instantiate_at(w: Equation, delta: int) -> tuple[LaurentPoly, LaurentPoly]:
    """(num_delta, den_delta) in a single pass; no parametric polynomials are built."""
    num: set[int] = set()
    den: set[int] = set()
    e = 0  # current value of -(t_w + x_w*delta)
    for tok in reversed(w.letters):
        if tok == "a" or tok == "A":
            num.symmetric_difference_update((e,))
        elif tok == "x":
            den.symmetric_difference_update((e,))
            e -= delta
        elif tok == "X":
            e += delta
            den.symmetric_difference_update((e,))
        elif tok == "t":
            e -= 1
        else:
            e += 1
    return LaurentPoly.from_exponents(num), LaurentPoly.from_exponents(den)
