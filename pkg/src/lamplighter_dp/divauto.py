"""Division-by-F automaton over the bit alphabet {0, 1}.

States are the 2^n residues of degree < n = deg F, encoded as n-bit integers.
Reading bit b moves g to (g*z + b) mod F, so a run from state 0 over
g_m ... g_0 (most significant first) ends at (g_m z^m + ... + g_0) mod F.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .gf2poly import LaurentPoly, format_poly, ordinary_mod, ordinary_mul

__all__ = [
    "DivisionAutomaton",
    "AutomatonCapExceeded",
    "ZeroDivisorError",
    "DEFAULT_DEGREE_CAP",
    "build",
    "run",
    "accepts",
    "is_strongly_connected",
    "unique_incoming",
    "multiplicative_order_of_z",
    "period",
    "period_bfs",
    "to_dot",
    "normalize_divisor",
]

DEFAULT_DEGREE_CAP = 20
DOT_CAP = 8


class ZeroDivisorError(ValueError):
    pass


class AutomatonCapExceeded(RuntimeError):
    """The normalized divisor has degree ``required`` above the configured ``cap``."""

    def __init__(self, required: int, cap: int):
        super().__init__(f"divisor degree {required} exceeds automaton cap {cap}")
        self.required = required
        self.cap = cap


def normalize_divisor(f: LaurentPoly) -> tuple[int, int]:
    """(F, shift) with F = f * z^(-ord f) as a bit-packed ordinary polynomial."""
    if not f:
        raise ZeroDivisorError("zero divisor")
    return f.bits, f.order


def _check_cap(n: int, cap: int | None) -> None:
    if cap is not None and n > cap:
        raise AutomatonCapExceeded(n, cap)


@dataclass(frozen=True)
class DivisionAutomaton:
    divisor: int                       # normalized F, bit-packed, constant term 1
    n: int
    shift: int = 0                     # ord of the Laurent divisor that was normalized away
    trans0: tuple[int, ...] = field(repr=False, default=())
    trans1: tuple[int, ...] = field(repr=False, default=())

    @property
    def num_states(self) -> int:
        return 1 << self.n

    def step(self, state: int, bit: int) -> int:
        return (self.trans1 if bit else self.trans0)[state]

    @property
    def divisor_poly(self) -> LaurentPoly:
        return LaurentPoly(self.divisor, 0)


def build(f: LaurentPoly, degree_cap: int | None = DEFAULT_DEGREE_CAP) -> DivisionAutomaton:
    F, sh = normalize_divisor(f)
    n = F.bit_length() - 1
    _check_cap(n, degree_cap)
    top = 1 << n
    reduce = F if n else 0
    t0 = []
    t1 = []
    for g in range(top):
        h = g << 1
        if h & top:
            h ^= reduce
        t0.append(h)
        t1.append(h ^ 1 if n else 0)
    if n == 0:
        t0 = [0]
        t1 = [0]
    return DivisionAutomaton(F, n, sh, tuple(t0), tuple(t1))


def _bits(u) -> list[int]:
    if isinstance(u, str):
        out = []
        for ch in u:
            if ch not in "01":
                raise ValueError(f"bit word must contain only 0/1, got {ch!r}")
            out.append(ch == "1")
        return out
    return [1 if b else 0 for b in u]


def run(A: DivisionAutomaton, s0: int, u) -> int:
    if not 0 <= s0 < A.num_states:
        raise ValueError(f"state {s0} out of range for {A.num_states} states")
    t0, t1 = A.trans0, A.trans1
    s = s0
    for b in _bits(u):
        s = t1[s] if b else t0[s]
    return s


def accepts(A: DivisionAutomaton, u) -> bool:
    return run(A, 0, u) == 0


def is_strongly_connected(A: DivisionAutomaton) -> bool:
    """Forward and backward reachability from state 0 both cover every state."""
    N = A.num_states
    fwd = [[] for _ in range(N)]
    back = [[] for _ in range(N)]
    for s in range(N):
        for t in (A.trans0[s], A.trans1[s]):
            fwd[s].append(t)
            back[t].append(s)

    def reach(adj) -> int:
        seen = bytearray(N)
        seen[0] = 1
        q = deque([0])
        count = 1
        while q:
            s = q.popleft()
            for t in adj[s]:
                if not seen[t]:
                    seen[t] = 1
                    count += 1
                    q.append(t)
        return count

    return reach(fwd) == N and reach(back) == N


def unique_incoming(A: DivisionAutomaton) -> bool:
    """Every state has exactly one incoming edge per label."""
    N = A.num_states
    return len(set(A.trans0)) == N and len(set(A.trans1)) == N


def multiplicative_order_of_z(F: int) -> int:
    """Order of z in (GF(2)[z]/F)^*; F must have constant term 1."""
    n = F.bit_length() - 1
    if n <= 0:
        return 1
    if not F & 1:
        raise ValueError("z is not a unit modulo a divisor with zero constant term")
    x = ordinary_mod(2, F)
    k = 1
    limit = (1 << n) - 1
    while x != 1:
        if k >= limit:
            raise RuntimeError("order of z did not close; divisor is not a unit modulus")
        x <<= 1
        if x >> n & 1:
            x ^= F
        k += 1
    return k


def period(f: LaurentPoly, degree_cap: int | None = DEFAULT_DEGREE_CAP) -> int:
    """P = ord(z mod F) * 2^n, the size of the normalized product automaton."""
    F, _ = normalize_divisor(f)
    n = F.bit_length() - 1
    _check_cap(n, degree_cap)
    return multiplicative_order_of_z(F) << n


def period_bfs(f: LaurentPoly) -> int:
    """Count states reachable from (1, 0) in the (multiplier, offset) pair automaton.

    A pair (m, r) stands for the tuple of states  v -> v*m + r  over all v;
    bit b maps it to (m*z, r*z + b).  Independent of ``period``'s closed form.
    """
    F, _ = normalize_divisor(f)
    n = F.bit_length() - 1
    if n == 0:
        return 1

    def times_z(p: int) -> int:
        return ordinary_mod(ordinary_mul(p, 2), F)

    start = (1, 0)
    seen = {start}
    q = deque([start])
    while q:
        m, r = q.popleft()
        m2 = times_z(m)
        r2 = times_z(r)
        for nxt in ((m2, r2), (m2, r2 ^ 1)):
            if nxt not in seen:
                seen.add(nxt)
                q.append(nxt)
    return len(seen)


def _state_label(g: int) -> str:
    return format_poly(LaurentPoly(g, 0))


def to_dot(A: DivisionAutomaton, cap: int = DOT_CAP) -> str:
    if A.n > cap:
        raise AutomatonCapExceeded(A.n, cap)
    name = _state_label(A.divisor)
    lines = [
        "digraph division_automaton {",
        f'  label="division by {name}";',
        "  rankdir=LR;",
    ]
    for g in range(A.num_states):
        if g == 0:
            # start and accepting state
            attrs = "shape=doublecircle, style=filled, fillcolor=palegreen"
        else:
            attrs = "shape=circle"
        lines.append(f'  s{g} [{attrs}, label="{_state_label(g)}"];')
    for g in range(A.num_states):
        lines.append(f'  s{g} -> s{A.trans0[g]} [label="0"];')
        lines.append(f'  s{g} -> s{A.trans1[g]} [label="1"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
