"""Command-line front end.

Subcommands: solve, trace, automaton, period, divides, generic, poly.
JSON output is one LF-terminated line carrying ``"schema": "1"``.

Exit codes: 0 solvable / success, 1 unsolvable, 2 resource limit hit,
3 input error (message includes the character position when known).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import divauto
from .divauto import AutomatonCapExceeded, ZeroDivisorError
from .equation import EquationParseError, Equation, format_equation, instantiate_at, parse_equation, trace
from .genericity import experiment_rows
from .gf2poly import LaurentPoly, PolyParseError, div_rem, format_poly, parse_poly
from .parampoly import format_param, parse_param
from .solver import DEFAULT_DELTA_RANGE_CAP, Limits, decide_div, solve

SCHEMA = "1"
EXIT_OK, EXIT_NO, EXIT_RESOURCE, EXIT_INPUT = 0, 1, 2, 3
_STATUS_EXIT = {"solvable": EXIT_OK, "unsolvable": EXIT_NO, "resource_exceeded": EXIT_RESOURCE}


@dataclass(frozen=True)
class RunConfig:
    automaton_degree_cap: int = divauto.DEFAULT_DEGREE_CAP
    delta_range_cap: int = DEFAULT_DELTA_RANGE_CAP
    reduce_words: bool = False
    output: str = "json"
    seed: int | None = None

    @property
    def limits(self) -> Limits:
        return Limits(self.automaton_degree_cap, self.delta_range_cap)


class InputError(Exception):
    def __init__(self, message: str, pos: int | None = None):
        super().__init__(message)
        self.pos = pos


def _emit(obj: dict, out) -> None:
    out.write(json.dumps({"schema": SCHEMA, **obj}) + "\n")


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return v


def _word(text: str, cfg: RunConfig) -> Equation:
    return parse_equation(text, reduce=cfg.reduce_words)


def _config(args) -> RunConfig:
    return RunConfig(
        automaton_degree_cap=getattr(args, "degree_cap", divauto.DEFAULT_DEGREE_CAP),
        delta_range_cap=getattr(args, "delta_cap", DEFAULT_DELTA_RANGE_CAP),
        reduce_words=getattr(args, "reduce", False),
        output=getattr(args, "output", "json"),
        seed=getattr(args, "seed", None),
    )


# -- subcommands -------------------------------------------------------------------

def cmd_solve(args, cfg: RunConfig, out) -> int:
    w = _word(args.word, cfg)
    v = solve(w, cfg.limits)
    if cfg.output == "text":
        line = f"{v.status} ({v.path})"
        if v.witness is not None:
            line += f": x = {v.witness}"
        out.write(line + "\n")
    else:
        data = v.to_json()
        data.pop("schema")
        data["word"] = format_equation(w)
        _emit(data, out)
    return _STATUS_EXIT[v.status]


def _grid(points) -> list[dict]:
    return [{"x": i, "t": j} for i, j in sorted(points)]


def cmd_trace(args, cfg: RunConfig, out) -> int:
    w = _word(args.word, cfg)
    tr = trace(w)
    data = {
        "word": format_equation(w),
        "sigma": {"a": tr.sigma_a, "t": tr.sigma_t, "x": tr.sigma_x},
        "num": format_param(tr.num),
        "den": format_param(tr.den),
        "n_grid": _grid(tr.n_grid),
        "d_grid": _grid(tr.d_grid),
    }
    if args.delta is not None:
        num_d, den_d = instantiate_at(w, args.delta)
        data["instance"] = {"delta": args.delta, "num": format_poly(num_d), "den": format_poly(den_d)}
    if cfg.output == "text":
        out.write(f"num = {data['num']}\nden = {data['den']}\n")
        if "instance" in data:
            inst = data["instance"]
            out.write(f"at delta={inst['delta']}: num = {inst['num']}, den = {inst['den']}\n")
    else:
        _emit(data, out)
    return EXIT_OK


def _divisor(text: str):
    f = parse_poly(text)
    if not f:
        raise InputError("zero divisor")
    return f


def cmd_automaton(args, cfg: RunConfig, out) -> int:
    A = divauto.build(_divisor(args.f), cfg.automaton_degree_cap)
    if args.dot:
        out.write(divauto.to_dot(A))
        return EXIT_OK
    _emit({
        "divisor": format_poly(A.divisor_poly),
        "shift": A.shift,
        "n": A.n,
        "states": [format_poly(LaurentPoly(g, 0)) for g in range(A.num_states)],
        "trans0": list(A.trans0),
        "trans1": list(A.trans1),
        "strongly_connected": divauto.is_strongly_connected(A),
        "unique_incoming": divauto.unique_incoming(A),
    }, out)
    return EXIT_OK


def cmd_period(args, cfg: RunConfig, out) -> int:
    f = _divisor(args.f)
    P = divauto.period(f, cfg.automaton_degree_cap)
    F = f.normalized()
    _emit({"f": format_poly(f), "n": F.bit_length() - 1,
           "order_of_z": divauto.multiplicative_order_of_z(F), "period": P}, out)
    return EXIT_OK


def cmd_divides(args, cfg: RunConfig, out) -> int:
    f, g = parse_param(args.f), parse_param(args.g)
    v = decide_div(f, g, cfg.limits)
    data = {"status": v.status, "exists": v.exists, "range": list(v.bound), "diagnostics": v.diagnostics}
    if v.delta is not None:
        data["delta"] = v.delta
    _emit(data, out)
    return _STATUS_EXIT[v.status]


def cmd_generic(args, cfg: RunConfig, out) -> int:
    seed = cfg.seed if cfg.seed is not None else 0
    out.write(f"# seed\t{seed}\n")
    out.write("m\tsamples\tfraction_sigma_zero\tmean_fastpath_time\n")
    for m, n, frac, t in experiment_rows(args.m, args.samples, seed, args.timed):
        out.write(f"{m}\t{n}\t{frac:.6f}\t{t:.3e}\n")
    return EXIT_OK


def cmd_poly(args, cfg: RunConfig, out) -> int:
    f, g = parse_poly(args.f), parse_poly(args.g)
    if args.op == "add":
        _emit({"op": "add", "result": format_poly(f + g)}, out)
    elif args.op == "mul":
        _emit({"op": "mul", "result": format_poly(f * g)}, out)
    else:
        if not g:
            raise InputError("zero divisor")
        q, r = div_rem(f, g)
        _emit({"op": "divrem", "q": format_poly(q), "r": format_poly(r)}, out)
    return EXIT_OK


# -- argument parsing ----------------------------------------------------------------

def _m_list(text: str) -> list[int]:
    try:
        ms = [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad length list {text!r}") from None
    if not ms or any(m < 0 for m in ms):
        raise argparse.ArgumentTypeError("lengths must be non-negative")
    return ms


def build_parser() -> argparse.ArgumentParser:
    caps = argparse.ArgumentParser(add_help=False)
    caps.add_argument("--degree-cap", type=_positive, default=divauto.DEFAULT_DEGREE_CAP,
                      help="largest divisor degree for which an automaton is built (default %(default)s)")
    caps.add_argument("--delta-cap", type=_positive, default=DEFAULT_DELTA_RANGE_CAP,
                      help="largest number of delta values enumerated (default %(default)s)")
    words = argparse.ArgumentParser(add_help=False)
    words.add_argument("word", help='equation word, e.g. "t^2 a x t^-1 x^-2 a"; uppercase = inverse')
    words.add_argument("--reduce", action="store_true", help="freely reduce the word first")
    words.add_argument("--output", choices=("json", "text"), default="json")

    p = argparse.ArgumentParser(prog="lamplighter-dp", description="One-variable equations over Z_2 wr Z.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", parents=[words, caps], help="decide solvability and print a witness")
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("trace", parents=[words], help="num/den parametric polynomials and grids")
    s.add_argument("--delta", type=int, help="also instantiate at this delta")
    s.set_defaults(func=cmd_trace)

    s = sub.add_parser("automaton", parents=[caps], help="division automaton as JSON or DOT")
    s.add_argument("--f", required=True, help="divisor polynomial")
    fmt = s.add_mutually_exclusive_group()
    fmt.add_argument("--dot", action="store_true")
    fmt.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_automaton)

    s = sub.add_parser("period", parents=[caps], help="period constant of a divisor")
    s.add_argument("--f", required=True)
    s.set_defaults(func=cmd_period)

    s = sub.add_parser("divides", parents=[caps], help="is there a delta with f_delta | g_delta?")
    s.add_argument("--f", required=True, help='parametric divisor, e.g. "(1)+(1)*d"')
    s.add_argument("--g", required=True)
    s.set_defaults(func=cmd_divides)

    s = sub.add_parser("generic", help="sigma_x = 0 frequency on random reduced words (TSV)")
    s.add_argument("--m", type=_m_list, default=[25, 100, 400, 1600], help="comma-separated lengths")
    s.add_argument("--samples", type=_positive, default=10_000)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--timed", type=int, default=50, help="words per length timed through solve")
    s.set_defaults(func=cmd_generic)

    s = sub.add_parser("poly", help="GF(2) Laurent polynomial arithmetic")
    s.add_argument("op", choices=("add", "mul", "divrem"))
    s.add_argument("f")
    s.add_argument("g")
    s.set_defaults(func=cmd_poly)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors; bad input maps to 3 here
        return EXIT_INPUT if exc.code else EXIT_OK
    cfg = _config(args)
    try:
        return args.func(args, cfg, out)
    except (EquationParseError, PolyParseError, InputError) as exc:
        pos = getattr(exc, "pos", None)
        err = {"schema": SCHEMA, "error": str(exc)}
        if pos is not None:
            err["position"] = pos
        sys.stderr.write(json.dumps(err) + "\n")
        return EXIT_INPUT
    except ZeroDivisorError as exc:
        sys.stderr.write(json.dumps({"schema": SCHEMA, "error": str(exc)}) + "\n")
        return EXIT_INPUT
    except AutomatonCapExceeded as exc:
        sys.stderr.write(json.dumps({"schema": SCHEMA, "error": str(exc), "status": "resource_exceeded"}) + "\n")
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
