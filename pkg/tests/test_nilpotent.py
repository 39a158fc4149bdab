from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from continuum.errors import ZeroDivisorError
from continuum.nilpotent import (
    Dual,
    GalileanBoost,
    Polynomial,
    add,
    boost,
    div,
    embed,
    eval_dual,
    lex_le,
    mul,
    worldline_position,
)

rationals = st.fractions(min_value=-100, max_value=100, max_denominator=50)
duals = st.builds(Dual, rationals, rationals)
polys = st.lists(rationals, max_size=7).map(Polynomial.of)

t = sympy.Symbol("t")


def symbolic_derivative(p: Polynomial, a: Fraction) -> Fraction:
    expr = sum(sympy.Rational(c.numerator, c.denominator) * t**i for i, c in enumerate(p.coefficients))
    d = sympy.diff(expr, t).subs(t, sympy.Rational(a.numerator, a.denominator))
    d = sympy.Rational(d)
    return Fraction(int(d.p), int(d.q))


def test_add_examples():
    assert add(Dual(1, 2), Dual(3, 4)) == Dual(4, 6)
    assert add(Dual(5, 7), Dual(0, 0)) == Dual(5, 7)
    assert add(Dual(1, 1), Dual(-1, -1)) == Dual(0, 0)


def test_mul_examples():
    assert mul(Dual(0, 1), Dual(0, 1)) == Dual(0, 0)
    assert mul(Dual(5, 7), Dual(1, 0)) == Dual(5, 7)
    assert mul(Dual(2, 3), Dual(4, 5)) == Dual(8, 22)


def test_div_examples():
    assert div(Dual(1, 0), Dual(2, 0)) == Dual(Fraction(1, 2), 0)
    assert div(Dual(8, 22), Dual(4, 5)) == Dual(2, 3)
    with pytest.raises(ZeroDivisorError):
        div(Dual(1, 0), Dual(0, 1))
    with pytest.raises(ZeroDivisionError):
        Dual(1, 0) / Dual(0, 0)


def test_lex_le_examples():
    assert lex_le(Dual(1, 100), Dual(2, 0))
    assert lex_le(Dual(1, 0), Dual(1, 1))
    assert not lex_le(Dual(0, 1), Dual(0, 0))


def test_embed_examples():
    assert embed(0) == Dual(0, 0)
    assert embed(2) == Dual(2, 0)
    assert embed(1) < embed(2)


@pytest.mark.parametrize(
    "coeffs, x, expected",
    [
        ((0, 0, 1), Dual(3, 1), Dual(9, 6)),
        ((7,), Dual(3, 5), Dual(7, 0)),
        ((0, -2, 0, 1), Dual(2, 1), Dual(4, 10)),
    ],
)
def test_eval_dual_examples(coeffs, x, expected):
    assert eval_dual(Polynomial.of(coeffs), x) == expected


def test_polynomial_trims_trailing_zeros():
    p = Polynomial.of([1, 2, 0, 0])
    assert p.coefficients == (1, 2)
    assert p.degree == 1
    assert Polynomial.of([]).degree == -1


@pytest.mark.parametrize("d, time, pos", [(Dual(3, 2), 0, 3), (Dual(3, 2), 5, 13), (Dual(0, 0), 9, 0)])
def test_worldline_position(d, time, pos):
    assert worldline_position(d, time) == pos


def test_boost_examples():
    d = Dual(3, 2)
    assert boost(d, GalileanBoost(5)) == Dual(3, 7)
    assert boost(d, GalileanBoost(0)) == d
    assert boost(boost(d, GalileanBoost(2)), GalileanBoost(-7)) == boost(d, GalileanBoost(-5))


def test_string_forms():
    assert str(Dual(0, 0)) == "0 + 0·h"
    assert Dual.parse("1/2,-3") == Dual(Fraction(1, 2), -3)
    assert Dual(Fraction(1, 2), -3).to_json() == {"a": "1/2", "b": "-3/1"}


def test_float_backend_keeps_floats():
    d = eval_dual(Polynomial.of([1, 2]).to_float(), Dual.variable(0.5))
    assert isinstance(d.a, float) and d == Dual(2.0, 2.0)


@given(duals, duals, duals)
def test_ring_axioms(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x + y == y + x and x * y == y * x
    assert x * (y + z) == x * y + x * z
    assert x + Dual(0, 0) == x and x * Dual(1, 0) == x
    assert x + (-x) == Dual(0, 0)


@given(rationals, rationals)
def test_nilpotency(b, c):
    assert Dual(0, b) * Dual(0, c) == Dual(0, 0)


@given(duals, duals)
def test_division_inverts_multiplication(x, y):
    if y.a == 0:
        with pytest.raises(ZeroDivisorError):
            x / y
    else:
        assert (x / y) * y == x
        assert (x * y) / y == x


@given(polys, rationals)
def test_eval_dual_is_forward_derivative(p, a):
    out = eval_dual(p, Dual(a, 1))
    assert out.a == p(a)
    assert out.b == symbolic_derivative(p, a)


@given(polys, polys, rationals)
def test_product_rule(p, q, a):
    lhs = eval_dual(p * q, Dual(a, 1)).b
    dp, dq = eval_dual(p, Dual(a, 1)).b, eval_dual(q, Dual(a, 1)).b
    assert lhs == p(a) * dq + dp * q(a)
    assert eval_dual(p + q, Dual(a, 1)).b == dp + dq


@given(duals, duals, duals)
def test_lex_le_total_order(x, y, z):
    assert lex_le(x, y) or lex_le(y, x)
    assert lex_le(x, x)
    if lex_le(x, y) and lex_le(y, x):
        assert x == y
    if lex_le(x, y) and lex_le(y, z):
        assert lex_le(x, z)


@given(rationals, rationals)
def test_embed_is_order_embedding(r, s):
    assert (r < s) == (embed(r) < embed(s))
    assert (embed(r) == embed(s)) == (r == s)


@given(duals, rationals, rationals, rationals)
def test_galilean_contract(d, v, w, time):
    bv, bw = GalileanBoost(v), GalileanBoost(w)
    assert worldline_position(boost(d, bw), time) == worldline_position(d, time) + w * time
    assert boost(boost(d, bv), bw) == boost(d, bv.then(bw))
    assert boost(boost(d, bw), bw.inverse()) == d
