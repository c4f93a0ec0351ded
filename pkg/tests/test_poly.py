import random
from fractions import Fraction

import pytest

from gradedufd import Context, Field, Polynomial, parse_poly, poly_arith
from gradedufd.poly import ContextMismatch


def P(text, ctx):
    return parse_poly(text, ctx)


class TestArithmetic:
    def test_add_cancellation(self, ctx_q3):
        assert P("x + y", ctx_q3) + P("x - y", ctx_q3) == P("2 x", ctx_q3)

    def test_difference_of_squares(self, ctx_q3):
        assert P("x + y", ctx_q3) * P("x - y", ctx_q3) == P("x^2 - y^2", ctx_q3)

    def test_mod5_coefficient_wrap(self):
        ctx = Context(Field(5), ("x",))
        assert P("3 x", ctx) * P("2 x", ctx) == P("x^2", ctx)

    def test_dispatch(self, ctx_q3):
        p, q = P("x", ctx_q3), P("y", ctx_q3)
        assert poly_arith("add", p, q) == P("x + y", ctx_q3)
        assert poly_arith("sub", p, q) == P("x - y", ctx_q3)
        assert poly_arith("mul", p, q) == P("x y", ctx_q3)
        assert poly_arith("neg", p) == P("-x", ctx_q3)
        assert poly_arith("scalar_mul", p, Fraction(3)) == P("3 x", ctx_q3)

    def test_zero_is_empty(self, ctx_q3):
        p = P("x", ctx_q3)
        assert (p - p).terms == {}
        assert (p - p).is_zero()

    def test_context_mismatch(self, ctx_q3):
        other = Context(Field(), ("a", "b"))
        with pytest.raises(ContextMismatch):
            P("x", ctx_q3) + Polynomial.variable(other, 0)


class TestDerivative:
    def test_power_rule(self, ctx_q3):
        assert P("x^5 + y^3 + z^2", ctx_q3).diff(0) == P("5 x^4", ctx_q3)

    def test_char_p_kill(self):
        ctx = Context(Field(5), ("x",))
        assert P("x^5", ctx).diff(0).is_zero()

    def test_mixed_term(self):
        # d/dz2 of x^2 z2 + z1^2 + z0^3, expanded by hand
        ctx = Context(Field(), ("x", "z0", "z1", "z2"))
        p = P("x^2 z2 + z1^2 + z0^3", ctx)
        assert p.diff(3) == P("x^2", ctx)

    def test_index_out_of_range(self, ctx_q3):
        with pytest.raises(IndexError):
            P("x", ctx_q3).diff(3)


class TestEvaluate:
    def test_origin(self, ctx_q3):
        assert P("x^5 + y^3 + z^2", ctx_q3).evaluate([0, 0, 0]) == 0

    def test_mod2(self):
        ctx = Context(Field(2), ("x",))
        assert P("x + 1", ctx).evaluate([1]) == 0

    def test_russell_point(self):
        ctx = Context(Field(), ("x", "y", "z", "t"))
        p = P("x + x^2 y + z^2 + t^3", ctx)
        # 1 - 1 + 1 - 1 = 0 by direct substitution
        assert p.evaluate([Fraction(1), Fraction(-1), Fraction(1),
                           Fraction(-1)]) == 0

    def test_arity_mismatch(self, ctx_q3):
        with pytest.raises(ValueError):
            P("x", ctx_q3).evaluate([1, 2])


def random_poly(rng, ctx, max_terms=4, max_exp=4):
    F = ctx.field
    terms = {}
    for _ in range(rng.randrange(max_terms + 1)):
        exps = tuple(rng.randrange(max_exp) for _ in range(ctx.nvars))
        if F.p is None:
            terms[exps] = Fraction(rng.randrange(-5, 6), rng.randrange(1, 5))
        else:
            terms[exps] = rng.randrange(F.p)
    return Polynomial(ctx, terms)


@pytest.mark.parametrize("field", [Field(), Field(5)], ids=["Q", "F5"])
def test_ring_axioms(field):
    ctx = Context(field, ("x", "y"))
    rng = random.Random(20240817)
    for _ in range(1000):
        p, q, r = (random_poly(rng, ctx) for _ in range(3))
        assert (p + q) + r == p + (q + r)
        assert (p * q) * r == p * (q * r)
        assert p * (q + r) == p * q + p * r
        assert p * q == q * p
        assert p + q == q + p


@pytest.mark.parametrize("field", [Field(), Field(3)], ids=["Q", "F3"])
def test_leibniz_rule(field):
    ctx = Context(field, ("x", "y"))
    rng = random.Random(7)
    for _ in range(300):
        p, q = random_poly(rng, ctx), random_poly(rng, ctx)
        for i in range(2):
            assert (p * q).diff(i) == p * q.diff(i) + q * p.diff(i)


def test_characteristic_consistency():
    field = Field(7)
    ctx = Context(field, ("x", "y"))
    rng = random.Random(11)
    for _ in range(200):
        p = random_poly(rng, ctx)
        assert p.scalar_mul(field.from_int(7)).is_zero()
