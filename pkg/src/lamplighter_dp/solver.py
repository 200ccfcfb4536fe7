"""Decision procedure for one-variable equations w(a, t, x) = 1 over Z_2 wr Z.

x = (delta, f) solves w = 1 iff t_w + delta*x_w = 0 and num_delta + f*den_delta = 0.

* sigma_x != 0 (fast path): delta is forced to -t_w/x_w; one divisibility test.
* sigma_x == 0 (slow path): needs t_w == 0, then delta ranges over a finite
  window given by the witness bounds for the divisibility instance (den, num),
  always widened to [-|w|, |w|] to catch simultaneous vanishing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterator

from . import divauto
from .divauto import AutomatonCapExceeded
from .equation import Equation, exponent_sums, instantiate_at, trace
from .gf2poly import ZERO, LaurentPoly, div_rem, divides, ordinary_mod, ordinary_mul
from .lamplighter import GroupElement, eval_equation, from_word
from .parampoly import ParamPoly, amplitude, instantiate

__all__ = [
    "Limits",
    "Verdict",
    "UnsoundWitnessError",
    "solve",
    "witness_bound",
    "crude_delta_bound",
    "canonical_deltas",
    "c2_lamp",
    "instance_divides",
    "div_search",
    "DivVerdict",
    "decide_div",
    "brute_force_solve",
    "DEFAULT_DELTA_RANGE_CAP",
]

DEFAULT_DELTA_RANGE_CAP = 10**7

SOLVABLE = "solvable"
UNSOLVABLE = "unsolvable"
RESOURCE_EXCEEDED = "resource_exceeded"


class UnsoundWitnessError(RuntimeError):
    """A candidate witness failed substitution; indicates an internal bug."""


@dataclass(frozen=True)
class Limits:
    automaton_degree_cap: int = divauto.DEFAULT_DEGREE_CAP
    delta_range_cap: int = DEFAULT_DELTA_RANGE_CAP

    def __post_init__(self):
        if self.automaton_degree_cap < 0 or self.delta_range_cap < 1:
            raise ValueError("limits must be positive")


@dataclass(frozen=True)
class Verdict:
    status: str
    path: str
    witness: GroupElement | None = None
    bound: tuple[int, int] | None = None
    diagnostics: str = ""
    details: dict = field(default_factory=dict, compare=False)

    @property
    def solvable(self) -> bool:
        return self.status == SOLVABLE

    def to_json(self) -> dict:
        return {
            "schema": "1",
            "status": self.status,
            "witness": None if self.witness is None
            else {"delta": self.witness.delta, "f": str(self.witness.lamp)},
            "path": self.path,
            "bound": None if self.bound is None else list(self.bound),
            "diagnostics": self.diagnostics,
        }


def crude_delta_bound(length: int) -> int:
    """floor(2^(|w|^2/2)) + 2|w|^2 + 3|w| + 1."""
    return math.isqrt(1 << (length * length)) + 2 * length * length + 3 * length + 1


def canonical_deltas(lo: int, hi: int) -> Iterator[int]:
    """0, 1, -1, 2, -2, ... restricted to [-lo, hi]."""
    if lo < 0 or hi < 0:
        raise ValueError("range ends must be non-negative")
    yield 0
    for k in range(1, max(lo, hi) + 1):
        if k <= hi:
            yield k
        if k <= lo:
            yield -k


def c2_lamp(num_d: LaurentPoly, den_d: LaurentPoly) -> LaurentPoly | None:
    """A lamp f with num_d + f*den_d = 0, or None.  A vanishing den_d needs num_d = 0."""
    if not den_d:
        return ZERO if not num_d else None
    q, r = div_rem(num_d, den_d)
    return q if not r else None


def witness_bound(
    f: ParamPoly,
    g: ParamPoly,
    direction: str = "plus",
    degree_cap: int | None = divauto.DEFAULT_DEGREE_CAP,
) -> int:
    """Largest |delta| that must be scanned on one side for the instance f_delta | g_delta."""
    if direction not in ("plus", "minus"):
        raise ValueError("direction must be 'plus' or 'minus'")
    if f.is_trivial or g.is_trivial:
        raise ValueError("witness_bound needs nontrivial f and g")
    A = amplitude(f)
    B = max(amplitude(g), A)
    gap = g.delta_span - f.delta_span
    if gap < 0:
        return 2 * B + 2 * A
    if gap == 0:
        # P^0 = 1 whatever P is; no automaton needed
        return 1 + 2 * B + 4 * A + 1
    block = f.leading_block if direction == "plus" else f.trailing_block
    P = divauto.period(block, degree_cap)
    return P**gap + 2 * (B + 4 * A * gap) + 4 * A + 1


# -- divisibility of instantiated parametric polynomials -----------------------

def _inverse_z(F: int) -> int:
    # F = 1 + z*h  =>  z^-1 = h mod F
    return F >> 1


def _mulmod(a: int, b: int, F: int) -> int:
    return ordinary_mod(ordinary_mul(a, b), F)


def _powmod(base: int, e: int, F: int) -> int:
    result = ordinary_mod(1, F)
    base = ordinary_mod(base, F)
    while e:
        if e & 1:
            result = _mulmod(result, base, F)
        base = _mulmod(base, base, F)
        e >>= 1
    return result


def _zpow_mod(e: int, F: int) -> int:
    if e >= 0:
        return _powmod(2, e, F)
    return _powmod(_inverse_z(F), -e, F)


def instance_divides(f: ParamPoly, g: ParamPoly, delta: int) -> bool:
    """f_delta | g_delta (zero divides only zero).

    A single-block divisor f_i(z) z^(i delta) is a unit multiple of its
    normalized block F, so the test reduces each block of g modulo F without
    expanding g_delta.
    """
    if len(f.blocks) == 1:
        F = f.leading_block.bits
        if F == 1:
            return True
        acc = 0
        for i, gi in g.items():
            r = ordinary_mod(gi.bits, F)
            if r:
                acc ^= _mulmod(r, _zpow_mod(gi.order + i * delta, F), F)
        return acc == 0
    return divides(instantiate(f, delta), instantiate(g, delta))


def div_search(f: ParamPoly, g: ParamPoly, lo: int, hi: int) -> int | None:
    """First delta in canonical order within [-lo, hi] with f_delta | g_delta."""
    for delta in canonical_deltas(lo, hi):
        if instance_divides(f, g, delta):
            return delta
    return None


@dataclass(frozen=True)
class DivVerdict:
    status: str                      # solvable / unsolvable / resource_exceeded
    delta: int | None
    bound: tuple[int, int]
    diagnostics: str = ""

    @property
    def exists(self) -> bool:
        return self.status == SOLVABLE


def decide_div(f: ParamPoly, g: ParamPoly, limits: Limits | None = None) -> DivVerdict:
    """Is there a delta with f_delta | g_delta?  Scans the certified two-sided range."""
    limits = limits or Limits()
    if g.is_trivial:
        return DivVerdict(SOLVABLE, 0, (0, 0), "g is trivial")
    if f.is_trivial:
        # only g_delta = 0 qualifies; monomials of g collide only for |delta| <= 2*amplitude(g)
        r = 2 * amplitude(g)
        for delta in canonical_deltas(r, r):
            if not instantiate(g, delta):
                return DivVerdict(SOLVABLE, delta, (-r, r), "f is trivial and g vanishes")
        return DivVerdict(UNSOLVABLE, None, (-r, r), "f is trivial and g never vanishes")
    try:
        hi = witness_bound(f, g, "plus", limits.automaton_degree_cap)
        lo = witness_bound(f, g, "minus", limits.automaton_degree_cap)
    except AutomatonCapExceeded as exc:
        return DivVerdict(RESOURCE_EXCEEDED, None, (0, 0), str(exc))
    if hi + lo + 1 > limits.delta_range_cap:
        return DivVerdict(RESOURCE_EXCEEDED, None, (-lo, hi), f"range exceeds delta range cap {limits.delta_range_cap}")
    delta = div_search(f, g, lo, hi)
    if delta is None:
        return DivVerdict(UNSOLVABLE, None, (-lo, hi), "no witness in certified range")
    return DivVerdict(SOLVABLE, delta, (-lo, hi), f"witness at delta={delta}")


# -- the decision procedure --------------------------------------------------------

def _verified(w: Equation, delta: int, lamp: LaurentPoly) -> GroupElement:
    x = GroupElement(delta, lamp)
    if not eval_equation(w, x).is_identity:
        raise UnsoundWitnessError(f"candidate x={x} does not satisfy {w}")
    return x


def _fast_path(w: Equation, st: int, sx: int) -> Verdict:
    if st % sx:
        return Verdict(UNSOLVABLE, "fast", diagnostics=f"sigma_x={sx} does not divide sigma_t={st}")
    delta = -st // sx
    num_d, den_d = instantiate_at(w, delta)
    lamp = c2_lamp(num_d, den_d)
    if lamp is None:
        return Verdict(
            UNSOLVABLE, "fast", bound=(delta, delta),
            diagnostics=f"delta={delta}: den={den_d} does not divide num={num_d}",
        )
    return Verdict(SOLVABLE, "fast", _verified(w, delta, lamp), (delta, delta), f"delta={delta}")


def _constant_path(w: Equation) -> Verdict:
    if from_word(w).is_identity:
        return Verdict(SOLVABLE, "trivial", _verified(w, 0, ZERO), (0, 0), "x-free word equal to 1")
    return Verdict(UNSOLVABLE, "trivial", diagnostics="x-free word not equal to 1")


def _den_trivial_path(w: Equation, num: ParamPoly) -> Verdict:
    L = len(w)
    if num.is_trivial:
        return Verdict(SOLVABLE, "slow", _verified(w, 0, ZERO), (0, 0), "num and den vanish identically")
    for delta in canonical_deltas(L, L):
        if not instantiate(num, delta):
            return Verdict(SOLVABLE, "slow", _verified(w, delta, ZERO), (-L, L), f"num vanishes at delta={delta}")
    return Verdict(UNSOLVABLE, "slow", bound=(-L, L), diagnostics="den is trivial and num never vanishes")


def _slow_path(w: Equation, num: ParamPoly, den: ParamPoly, limits: Limits) -> Verdict:
    L = len(w)
    if num.is_trivial:
        # every den_delta divides 0
        return Verdict(SOLVABLE, "slow", _verified(w, 0, ZERO), (0, 0), "num is trivial")

    reach: dict[str, int | None] = {}
    notes = []
    for direction in ("plus", "minus"):
        try:
            b = witness_bound(den, num, direction, limits.automaton_degree_cap)
        except AutomatonCapExceeded as exc:
            notes.append(f"{direction}: {exc}")
            reach[direction] = None
            continue
        if b > limits.delta_range_cap:
            notes.append(f"{direction}: bound {b} exceeds delta range cap {limits.delta_range_cap}")
            reach[direction] = None
            continue
        reach[direction] = b
    hi = max(reach["plus"], L) if reach["plus"] is not None else L
    lo = max(reach["minus"], L) if reach["minus"] is not None else L
    if reach["plus"] is not None and reach["minus"] is not None and hi + lo + 1 > limits.delta_range_cap:
        notes.append(f"range size {hi + lo + 1} exceeds delta range cap {limits.delta_range_cap}")
        reach = {"plus": None, "minus": None}
        hi = lo = L

    for delta in canonical_deltas(lo, hi):
        num_d = instantiate(num, delta)
        den_d = instantiate(den, delta)
        lamp = c2_lamp(num_d, den_d)
        if lamp is not None:
            return Verdict(SOLVABLE, "slow", _verified(w, delta, lamp), (-lo, hi), f"witness at delta={delta}")

    details = {"bound_plus": reach["plus"], "bound_minus": reach["minus"]}
    if reach["plus"] is None or reach["minus"] is None:
        crude = crude_delta_bound(L)
        return Verdict(
            RESOURCE_EXCEEDED, "slow", bound=(-crude, crude),
            diagnostics="; ".join(notes) + f"; no witness in scanned range [{-lo}, {hi}]",
            details=details,
        )
    return Verdict(UNSOLVABLE, "slow", bound=(-lo, hi), diagnostics="no witness in certified range", details=details)


def solve(w: Equation, limits: Limits | None = None) -> Verdict:
    limits = limits or Limits()
    if not any(tok in ("x", "X") for tok in w.letters):
        return _constant_path(w)
    _, st, sx = exponent_sums(w)
    if sx != 0:
        return _fast_path(w, st, sx)
    if st != 0:
        L = len(w)
        return Verdict(UNSOLVABLE, "slow", bound=(-L, L), diagnostics=f"sigma_x=0 but sigma_t={st}: no delta balances the t-shift")
    tr = trace(w)
    if tr.den.is_trivial:
        return _den_trivial_path(w, tr.num)
    return _slow_path(w, tr.num, tr.den, limits)


# -- independent oracle ------------------------------------------------------------

def brute_force_solve(w: Equation, delta_max: int, support_max: int) -> tuple[int, LaurentPoly] | None:
    """Search delta in [-delta_max, delta_max] and lamps supported in [-support_max, support_max].

    Uses only group evaluation: for fixed delta the lamp of w(delta, f) is
    affine in f, equal to N + f*D with N = lamp of w(delta, 0) and
    D = lamp of w(delta, 1) - N.  No tracing is involved.
    """
    for delta in canonical_deltas(delta_max, delta_max):
        base = eval_equation(w, GroupElement(delta, ZERO))
        if base.delta != 0:
            continue
        N = base.lamp
        D = eval_equation(w, GroupElement(delta, LaurentPoly(1, 0))).lamp + N
        if not D:
            lamp = ZERO if not N else None
        else:
            q, r = div_rem(N, D)
            lamp = q if not r else None
        if lamp is None:
            continue
        if lamp and (lamp.order < -support_max or lamp.degree > support_max):
            continue
        if eval_equation(w, GroupElement(delta, lamp)).is_identity:
            return delta, lamp
    return None
