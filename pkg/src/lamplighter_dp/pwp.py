"""Piecewise-periodic descriptions of polynomial families {f_delta}.

For delta >= 2A+1 the family member is written ascending from exponent
s*delta - A as

    n_s . p_s^(delta-2A-1) . n_{s+1} . ... . p_{t-1}^(delta-2A-1) . n_t

with nonperiodic blocks of length 2A+1 and p-periodic fills, where w^(k) is
the length-k prefix of w repeated.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import divauto
from .gf2poly import LaurentPoly
from .parampoly import ParamPoly, amplitude, instantiate

__all__ = ["PwpRep", "pwp_from_param", "pwp_instantiate", "remainder_period_check", "PROBE_OFFSET"]

PROBE_OFFSET = 8
_VALIDATION_RANGE = 40


@dataclass(frozen=True)
class PwpRep:
    t: int
    s: int
    nonperiodic: tuple[str, ...]
    periodic: tuple[str, ...]
    A: int
    p: int = 1

    def __post_init__(self):
        if self.s > self.t:
            raise ValueError("s must not exceed t")
        if self.p < 1 or self.A < 0:
            raise ValueError("need A >= 0 and p >= 1")
        if len(self.nonperiodic) != self.t - self.s + 1 or len(self.periodic) != self.t - self.s:
            raise ValueError("block counts do not match s..t")
        if any(len(b) != 2 * self.A + 1 for b in self.nonperiodic):
            raise ValueError("nonperiodic blocks must have length 2A+1")
        if any(len(b) != self.p for b in self.periodic):
            raise ValueError("periodic blocks must have length p")
        if any(set(b) - {"0", "1"} for b in self.nonperiodic + self.periodic):
            raise ValueError("blocks must be bit strings")

    def to_json(self) -> dict:
        return {
            "s": self.s,
            "t": self.t,
            "A": self.A,
            "p": self.p,
            "nonperiodic": list(self.nonperiodic),
            "periodic": list(self.periodic),
        }

    @classmethod
    def from_json(cls, data: dict) -> "PwpRep":
        return cls(
            t=int(data["t"]),
            s=int(data["s"]),
            nonperiodic=tuple(data["nonperiodic"]),
            periodic=tuple(data["periodic"]),
            A=int(data["A"]),
            p=int(data.get("p", 1)),
        )


def _prefix_power(w: str, k: int) -> str:
    if k <= 0:
        return ""
    reps = -(-k // len(w))
    return (w * reps)[:k]


def pwp_instantiate(r: PwpRep, delta: int) -> LaurentPoly:
    if delta < 2 * r.A + 1:
        raise ValueError(f"delta={delta} below the threshold 2A+1={2 * r.A + 1}")
    fill = delta - 2 * r.A - 1
    pieces = []
    for k in range(r.t - r.s):
        pieces.append(r.nonperiodic[k])
        pieces.append(_prefix_power(r.periodic[k], fill))
    pieces.append(r.nonperiodic[-1])
    word = "".join(pieces)
    # word[0] is the coefficient of z^(s*delta - A)
    bits = int(word[::-1], 2) if word else 0
    return LaurentPoly(bits, r.s * delta - r.A)


def _window(f: LaurentPoly, lo: int, length: int) -> str:
    return "".join(str(f.coefficient(e)) for e in range(lo, lo + length))


def pwp_from_param(p: ParamPoly) -> PwpRep:
    """(A, 1) representation read off two large instantiations, then cross-validated."""
    A = amplitude(p)
    s, t = p.ord_delta, p.deg_delta
    probes = [2 * A + 1 + PROBE_OFFSET, 2 * A + 2 + PROBE_OFFSET]
    reps = []
    for delta in probes:
        f = instantiate(p, delta)
        nonper = []
        per = []
        for i in range(s, t + 1):
            nonper.append(_window(f, i * delta - A, 2 * A + 1))
            if i < t:
                gap = _window(f, i * delta + A + 1, delta - 2 * A - 1)
                bit = gap[0]
                if gap != bit * len(gap):
                    raise AssertionError("fill between blocks is not 1-periodic")
                per.append(bit)
        reps.append(PwpRep(t, s, tuple(nonper), tuple(per), A, 1))
    if reps[0] != reps[1]:
        raise AssertionError("probe instantiations disagree")
    rep = reps[0]
    for delta in range(2 * A + 1, 2 * A + 1 + _VALIDATION_RANGE):
        if pwp_instantiate(rep, delta) != instantiate(p, delta):
            raise AssertionError(f"representation fails at delta={delta}")
    return rep


def remainder_period_check(F: LaurentPoly, u: str, s0: int, P: int) -> bool:
    """Does reading u^P from state s0 of the division-by-F automaton return to s0?"""
    if not F:
        raise ValueError("F must be nonzero")
    if F.order != 0:
        raise ValueError("F must be an ordinary polynomial with constant term 1")
    if P < 1:
        raise ValueError("P must be positive")
    A = divauto.build(F, degree_cap=None)
    if not 0 <= s0 < A.num_states:
        raise ValueError(f"state {s0} must have degree below deg F = {A.n}")
    s = s0
    for _ in range(P):
        s = divauto.run(A, s, u)
    return s == s0
