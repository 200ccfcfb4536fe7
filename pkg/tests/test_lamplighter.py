import random

from hypothesis import given, settings
from hypothesis import strategies as st

from lamplighter_dp.equation import parse_equation
from lamplighter_dp.gf2poly import ONE, ZERO, Z, LaurentPoly, parse_poly, shift
from lamplighter_dp.lamplighter import GEN_A, GEN_T, IDENTITY, GroupElement, eval_equation, from_word, g_inv, g_mul

from oracles import from_set, random_poly

P = parse_poly

elements = st.builds(
    GroupElement,
    st.integers(-40, 40),
    st.frozensets(st.integers(-32, 32), max_size=12).map(from_set),
)


def test_mul_examples():
    assert g_mul(GEN_T, GEN_T) == GroupElement(2, ZERO)
    assert g_mul(GEN_A, GEN_A) == IDENTITY
    assert g_mul(GEN_A, GEN_T) == GroupElement(1, P("z^-1"))
    assert g_mul(GEN_T, GEN_A) == GroupElement(1, ONE)


def test_inv_examples():
    assert g_inv(GEN_T) == GroupElement(-1, ZERO)
    assert g_inv(GroupElement(0, P("1+z"))) == GroupElement(0, P("1+z"))
    assert g_inv(GroupElement(2, Z)) == GroupElement(-2, P("z^3"))


def test_from_word_examples():
    assert from_word(parse_equation("t a t^-1")) == GroupElement(0, Z)
    assert from_word(()) == IDENTITY
    # a * (t a t^-1) = (0, 1) * (0, z)
    assert from_word(parse_equation("a t a t^-1")) == GroupElement(0, P("1+z"))


def test_eval_examples():
    assert eval_equation(parse_equation("x t"), GroupElement(-1, ZERO)) == IDENTITY
    assert eval_equation(parse_equation("a"), GroupElement(7, P("z+z^5"))) == GEN_A
    assert eval_equation(parse_equation("a x a x^-1"), IDENTITY) == IDENTITY


def _fold(word):
    images = {"a": GEN_A, "A": GEN_A, "t": GEN_T, "T": g_inv(GEN_T)}
    g = IDENTITY
    for c in word:
        g = g_mul(g, images[c])
    return g


def test_from_word_matches_fold():
    rng = random.Random(3)
    for _ in range(500):
        w = "".join(rng.choice("aAtT") for _ in range(rng.randint(0, 30)))
        assert from_word(w) == _fold(w)


@settings(max_examples=300)
@given(elements, elements, elements)
def test_group_axioms(u, v, w):
    assert g_mul(g_mul(u, v), w) == g_mul(u, g_mul(v, w))
    assert g_mul(u, g_inv(u)) == IDENTITY == g_mul(g_inv(u), u)
    assert g_mul(u, IDENTITY) == u == g_mul(IDENTITY, u)


@settings(max_examples=300)
@given(elements, elements)
def test_conjugation_formula(g, h):
    # g^-1 h g = (delta_h, (1 - z^-delta_h) f_g + z^-delta_g f_h)
    d1, f1 = h.delta, h.lamp
    d, f = g.delta, g.lamp
    expected = GroupElement(d1, f + shift(f, -d1) + shift(f1, -d))
    assert g_mul(g_inv(g), g_mul(h, g)) == expected


def test_commutator_of_lamps_vanishes_at_zero_shift():
    rng = random.Random(4)
    for _ in range(200):
        f = random_poly(rng, 6)
        x = GroupElement(0, f)
        assert eval_equation(parse_equation("a x a x^-1"), x) == IDENTITY
