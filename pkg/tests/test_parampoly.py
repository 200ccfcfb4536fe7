import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lamplighter_dp.gf2poly import ONE, ZERO, PolyParseError, parse_poly, shift
from lamplighter_dp.parampoly import (
    ParamPoly, TrivialParamPolyError, amplitude, format_param, from_grid, instantiate, parse_param, rev,
    to_grid, toggle_monomial,
)

from oracles import random_param

P = parse_poly
PWP_EXAMPLE = "(1+z^-2)*d^-1+(z^2+z+z^-1)+(z+1)*d^2"

monomial_pairs = st.lists(st.tuples(st.integers(-6, 6), st.integers(-3, 3)), max_size=12)
params = monomial_pairs.map(ParamPoly.from_monomials)


def test_toggle_examples():
    assert toggle_monomial(ParamPoly(), 0, 0) == ParamPoly({0: ONE})
    assert toggle_monomial(toggle_monomial(ParamPoly(), 1, 2), 1, 2) == ParamPoly()
    assert toggle_monomial(ParamPoly({0: ONE}), 2, 0) == ParamPoly({0: P("1+z^2")})


def test_instantiate_examples():
    assert instantiate(parse_param(PWP_EXAMPLE), 0) == P("z^-2+z^-1+z^2")
    assert instantiate(ParamPoly({1: ONE}) + ParamPoly({0: ONE}), 0) == ZERO
    assert instantiate(ParamPoly({1: ONE, 0: ONE}), 3) == P("z^3+1")


def test_rev_examples():
    assert rev(ParamPoly({1: ONE})) == ParamPoly({-1: ONE})
    assert rev(ParamPoly({0: P("z+1")})) == ParamPoly({0: P("z+1")})
    p = ParamPoly({2: P("z")})
    assert instantiate(rev(p), 5) == instantiate(p, -5) == P("z^-9")


def test_amplitude_examples():
    assert amplitude(parse_param(PWP_EXAMPLE)) == 2
    assert amplitude(ParamPoly({3: ONE})) == 0
    assert amplitude(ParamPoly({0: P("z^-5+z^3")})) == 5
    with pytest.raises(TrivialParamPolyError):
        amplitude(ParamPoly())


def test_grid_examples():
    assert to_grid(parse_param("(1)+(z)*d")) == {(0, 0), (1, 1)}
    assert to_grid(ParamPoly()) == set()
    assert to_grid(parse_param("(z+z^2)+(z^2)*d")) == {(0, 1), (0, 2), (1, 2)}


def test_degree_order_span():
    p = parse_param(PWP_EXAMPLE)
    assert (p.ord_delta, p.deg_delta, p.delta_span) == (-1, 2, 3)
    assert p.leading_block == P("z+1") and p.trailing_block == P("1+z^-2")


def test_zero_blocks_dropped():
    assert ParamPoly({0: ZERO, 1: ONE}).blocks == {1: ONE}


def test_parse_format_round_trip():
    for text in [PWP_EXAMPLE, "0", "(1)", "(z)*d", "1+z", "z*d^-3+1"]:
        p = parse_param(text)
        assert parse_param(format_param(p)) == p
    assert parse_param("1+z") == ParamPoly({0: P("1+z")})
    assert parse_param("z*d^-3+1") == ParamPoly({-3: P("z"), 0: ONE})


@pytest.mark.parametrize("bad", ["(1)+(z)", "(1", "(1)*e", "(z+z)*d", "(1)+", ""])
def test_parse_errors(bad):
    with pytest.raises(PolyParseError):
        parse_param(bad)


@settings(max_examples=300)
@given(params, st.integers(-6, 6), st.integers(-3, 3), st.integers(-20, 20))
def test_instantiate_linear_over_toggle(p, a, b, delta):
    assert instantiate(toggle_monomial(p, a, b), delta) == instantiate(p, delta) + shift(ONE, a + b * delta)


@settings(max_examples=300)
@given(params, params, st.integers(-20, 20))
def test_instantiate_additive(p, q, delta):
    assert instantiate(p + q, delta) == instantiate(p, delta) + instantiate(q, delta)


@settings(max_examples=300)
@given(params, st.integers(-30, 30))
def test_rev_adjunction(p, delta):
    assert instantiate(rev(p), delta) == instantiate(p, -delta)
    assert rev(rev(p)) == p


@given(params)
def test_grid_bijection(p):
    assert from_grid(to_grid(p)) == p


def test_leading_term_beyond_twice_amplitude():
    rng = random.Random(11)
    for _ in range(500):
        p = random_param(rng, rng.randint(0, 4), rng.randint(0, 3))
        A = amplitude(p)
        for delta in (2 * A + 1, 2 * A + 2, 2 * A + 9):
            f = instantiate(p, delta)
            assert f.degree == p.deg_delta * delta + p.leading_block.degree
            assert f.ord == p.ord_delta * delta + p.trailing_block.ord
