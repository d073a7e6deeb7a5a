"""Interval arithmetic: containment, inclusion monotonicity, edge cases."""

from __future__ import annotations

import math
import random
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ineqcert.intervals import (
    DomainError,
    Interval,
    IntervalError,
    PI,
    PI_HALF,
    PoleError,
    elem,
)

MP_FN = {
    "sin": mpmath.sin,
    "cos": mpmath.cos,
    "sinh": mpmath.sinh,
    "cosh": mpmath.cosh,
    "tanh": mpmath.tanh,
    "exp": mpmath.exp,
    "log": mpmath.log,
    "sqrt": mpmath.sqrt,
    "abs": abs,
}


def test_add_basic():
    r = Interval(1, 2) + Interval(3, 4)
    assert r.lo <= 4 and r.hi >= 6


def test_mul_endpoint_products():
    r = Interval(-1, 2) * Interval(3, 4)
    assert r.lo <= -4 and r.hi >= 8


def test_pow_even_includes_zero():
    r = Interval(-2, 1).pow_int(2)
    assert r.lo <= 0 <= r.hi and r.hi >= 4
    assert r.lo >= -1e-15


def test_pow_zero_and_negative():
    assert Interval(-3, 5).pow_int(0) == Interval(1.0, 1.0)
    r = Interval(2, 4).pow_int(-1)
    assert r.contains(0.25) and r.contains(0.5)
    with pytest.raises(PoleError):
        Interval(-1, 1).pow_int(-2)


def test_div_by_zero_interval():
    with pytest.raises(PoleError):
        Interval(1, 2) / Interval(-1, 1)


def test_invalid_bounds():
    with pytest.raises(IntervalError):
        Interval(2, 1)
    with pytest.raises(IntervalError):
        Interval(math.nan, 1)


def test_neg_is_exact():
    a = Interval(1.25, 2.5)
    assert -a == Interval(-2.5, -1.25)


def test_from_fraction_tight():
    q = Fraction(1, 3)
    enc = Interval.from_fraction(q)
    assert enc.lo <= 1 / 3 <= enc.hi
    assert enc.width <= 2 * math.ulp(1 / 3)
    exact = Interval.from_fraction(Fraction(3, 4))
    assert exact == Interval(0.75, 0.75)


def test_cos_quadrant():
    # the upper endpoint must cover the real pi/2, hence PI_HALF.hi
    r = elem("cos", Interval(0.0, PI_HALF.hi))
    assert r.lo <= 0.0 and r.hi >= 1.0
    assert r.lo >= -1e-12 and r.hi <= 1.0 + 1e-12


def test_sin_interior_maximum():
    r = elem("sin", Interval(0.0, math.pi))
    assert r.hi >= 1.0


def test_exp_identity():
    r = elem("exp", Interval(0.0, 0.0))
    assert r.contains(1.0) and r.width < 1e-14


def test_log_domain():
    with pytest.raises(DomainError):
        elem("log", Interval(-1.0, 2.0))
    with pytest.raises(DomainError):
        elem("sqrt", Interval(-0.5, 1.0))


def test_cosh_minimum_at_zero():
    r = elem("cosh", Interval(-1.0, 2.0))
    assert r.lo == 1.0
    assert r.hi >= math.cosh(2.0)


def test_pi_enclosures():
    assert PI.lo < float(mpmath.pi) + 1e-15 and PI.contains_interval  # sanity
    with mpmath.workdps(40):
        assert PI.lo <= mpmath.pi <= PI.hi
        assert PI_HALF.lo <= mpmath.pi / 2 <= PI_HALF.hi


_ARITH_OPS = ["add", "sub", "mul", "div"]


def _rand_interval(rng: random.Random, center_scale: float = 3.0) -> tuple[Interval, float]:
    c = rng.uniform(-center_scale, center_scale)
    w1 = abs(rng.gauss(0, 0.5)) * rng.choice([0, 1e-12, 1e-6, 1.0])
    w2 = abs(rng.gauss(0, 0.5)) * rng.choice([0, 1e-12, 1e-6, 1.0])
    iv = Interval(c - w1, c + w2)
    x = rng.uniform(iv.lo, iv.hi)
    return iv, x


def test_arith_containment_sample():
    rng = random.Random(1234)
    with mpmath.workdps(40):
        for _ in range(4000):
            op = rng.choice(_ARITH_OPS)
            a, xa = _rand_interval(rng)
            b, xb = _rand_interval(rng)
            try:
                if op == "add":
                    r, ref = a + b, mpmath.mpf(xa) + mpmath.mpf(xb)
                elif op == "sub":
                    r, ref = a - b, mpmath.mpf(xa) - mpmath.mpf(xb)
                elif op == "mul":
                    r, ref = a * b, mpmath.mpf(xa) * mpmath.mpf(xb)
                else:
                    r, ref = a / b, mpmath.mpf(xa) / mpmath.mpf(xb)
            except PoleError:
                continue
            assert r.lo <= ref <= r.hi, (op, a, b, xa, xb)


def test_elem_containment_sample():
    rng = random.Random(99)
    with mpmath.workdps(40):
        for _ in range(4000):
            fn = rng.choice(list(MP_FN))
            a, x = _rand_interval(rng, center_scale=8.0)
            if fn == "log":
                if a.lo <= 0:
                    continue
            if fn == "sqrt" and a.lo < 0:
                continue
            r = elem(fn, a)
            ref = MP_FN[fn](mpmath.mpf(x))
            assert r.lo <= ref <= r.hi, (fn, a, x)


@settings(max_examples=200, deadline=None)
@given(
    st.floats(-10, 10),
    st.floats(0, 2),
    st.floats(0, 1),
    st.sampled_from(["sin", "cos", "sinh", "cosh", "tanh", "exp", "abs"]),
)
def test_inclusion_monotonicity(c, w, shrink, fn):
    outer = Interval(c - w, c + w)
    inner = Interval(c - w * shrink, c + w * shrink)
    ro, ri = elem(fn, outer), elem(fn, inner)
    assert ro.lo <= ri.lo and ri.hi <= ro.hi


@settings(max_examples=200, deadline=None)
@given(st.floats(-5, 5), st.floats(-5, 5), st.floats(-5, 5), st.floats(-5, 5))
def test_mul_inclusion_monotone(a_lo, a_w, b_lo, b_w):
    a = Interval(a_lo, a_lo + abs(a_w))
    b = Interval(b_lo, b_lo + abs(b_w))
    sub_a = Interval(a.mid, a.mid)
    sub_b = Interval(b.mid, b.mid)
    big = a * b
    small = sub_a * sub_b
    assert big.lo <= small.lo + 1e-300 and small.hi <= big.hi + 1e-300


def test_arith_dispatch():
    from ineqcert.intervals import arith

    assert arith("add", Interval(1, 2), Interval(3, 4)).contains(6.0)
    assert arith("neg", Interval(1, 2)) == Interval(-2, -1)
    assert arith("pow_int", Interval(-2, 1), 2).contains(4.0)
    with pytest.raises(DomainError):
        arith("wat", Interval(0, 1), Interval(0, 1))
    with pytest.raises(DomainError):
        arith("pow_int", Interval(0, 1), Interval(0, 1))
