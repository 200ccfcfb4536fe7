"""Deciding one-variable equations over the lamplighter group Z_2 wr Z."""

from .divauto import AutomatonCapExceeded, DivisionAutomaton, ZeroDivisorError, period
from .equation import Equation, EquationParseError, TraceResult, exponent_sums, free_reduce, instantiate_at, parse_equation, trace
from .gf2poly import ONE, ZERO, Z, LaurentPoly, PolyParseError, div_rem, divides, parse_poly
from .lamplighter import GroupElement, eval_equation, from_word
from .parampoly import ParamPoly, amplitude, instantiate, parse_param
from .pwp import PwpRep, pwp_from_param, pwp_instantiate
from .solver import Limits, Verdict, brute_force_solve, decide_div, solve, witness_bound

__all__ = [
    "AutomatonCapExceeded", "DivisionAutomaton", "ZeroDivisorError", "period",
    "Equation", "EquationParseError", "TraceResult", "exponent_sums", "free_reduce",
    "instantiate_at", "parse_equation", "trace",
    "ONE", "ZERO", "Z", "LaurentPoly", "PolyParseError", "div_rem", "divides", "parse_poly",
    "GroupElement", "eval_equation", "from_word",
    "ParamPoly", "amplitude", "instantiate", "parse_param",
    "PwpRep", "pwp_from_param", "pwp_instantiate",
    "Limits", "Verdict", "brute_force_solve", "decide_div", "solve", "witness_bound",
]
