"""Expression AST: printing, differentiation, dual evaluation."""

from __future__ import annotations

import math
import random
from fractions import Fraction

import mpmath
import pytest

from ineqcert.expr import (
    Const,
    EvalError,
    Fn,
    PowConst,
    Prim,
    UnsupportedError,
    Var,
    differentiate,
    eval_interval,
    eval_numpy,
    eval_point,
    print_expr,
)
from ineqcert.intervals import Interval
from ineqcert.parser import parse_expr


def test_derivative_of_square():
    d = differentiate(parse_expr("x^2"))
    enc = eval_interval(d, Interval(3.0, 3.0))
    assert enc.contains(6.0)


def test_derivative_of_cusa_bound():
    d = differentiate(parse_expr("(cos(x) + 2)/3"))
    enc = eval_interval(d, Interval(1.0, 1.0))
    assert enc.contains(-math.sin(1.0) / 3)
    assert enc.width < 1e-13


def test_derivative_constant_is_zero():
    d = differentiate(parse_expr("pi/(pi - 2)"))
    assert d == Const(value=Fraction(0))


def test_abs_derivative_unsupported():
    with pytest.raises(UnsupportedError):
        differentiate(Fn("abs", Var()))


def test_powconst_requires_positive_base():
    e = parse_expr("cos(x)^(1/3)")
    with pytest.raises(EvalError):
        eval_interval(e, Interval(1.6, 1.7))  # cos < 0 there
    enc = eval_interval(e, Interval(0.0, 1.0))
    assert enc.contains(math.cos(1.0) ** (1 / 3))


def test_pole_error_names_subexpression():
    e = parse_expr("1/sin(x)")
    with pytest.raises(EvalError) as err:
        eval_interval(e, Interval(-0.5, 0.5))
    assert "sin" in str(err.value)


def test_eval_point_precision():
    e = parse_expr("(cos(x) + alpha - 1)/alpha")
    v = eval_point(e, math.pi / 2, dps=30)
    assert abs(v - 2 / math.pi) < 1e-15


def test_eval_point_at_sharp_origin():
    e = parse_expr("(cos(x) + 2)/3 - sinc(x)")
    assert abs(eval_point(e, 0.0)) < 1e-25


def test_eval_interval_sinc_range():
    enc = eval_interval(parse_expr("sinc(x)"), Interval(0.0, math.pi / 2))
    assert enc.lo <= 2 / math.pi + 1e-12 and enc.hi >= 1.0 - 1e-12


CATALOG_LIKE = [
    "sinc(x)^2 + sinc(x)/cos(x)",
    "inv_sinc2(x) + xcot(x)",
    "(cos(x) + alpha - 1)/alpha",
    "(1/sinc(x))^alpha + xcot(x)",
    "exp(-x^2/6)",
    "cos(x/2)^(4/3)",
    "sinhc(x)/cosh(x)",
    "2/(sqrt(9 + 4*x^2) - 1)",
    "log(((pi - 2)*cos(x) + 2)/pi) + (pi - 2)*x^2/(2*pi)",
    "3*sinc(x) - cos(x)",
]


def test_interval_contains_point_evaluations():
    rng = random.Random(77)
    for text in CATALOG_LIKE:
        e = parse_expr(text)
        for _ in range(100):
            x = rng.uniform(0.01, 1.5)
            enc = eval_interval(e, Interval(x, x))
            ref = eval_point(e, x, dps=40)
            assert enc.lo <= ref <= enc.hi, (text, x)


def test_derivatives_against_central_differences():
    rng = random.Random(2024)
    h = mpmath.mpf("1e-5")
    for text in CATALOG_LIKE:
        e = parse_expr(text)
        d = differentiate(e)
        for _ in range(25):
            x = rng.uniform(0.05, 1.4)
            enc = eval_interval(d, Interval(x, x))
            with mpmath.workdps(40):
                fd = (eval_point(e, mpmath.mpf(x) + h, dps=40) - eval_point(e, mpmath.mpf(x) - h, dps=40)) / (2 * h)
            fd = float(fd)
            mid = 0.5 * (enc.lo + enc.hi)
            assert abs(mid - fd) <= 1e-6 * max(1.0, abs(fd)), (text, x)
            assert enc.lo - 1e-6 <= fd <= enc.hi + 1e-6


def test_second_derivatives_of_kernels_against_differences():
    # the hand-written quotient forms behind the curvature bound must agree
    # with finite differences, or cell acceptance would be unsound
    h = mpmath.mpf("1e-6")
    for fn in ("dsinc", "dxcot", "dsinhc", "dxcoth", "dinv_sinc2", "dinv_sinhc2"):
        e = Prim(fn, Var())
        d = differentiate(e)
        for x in (0.1, 0.45, 0.8, 1.3):
            enc = eval_interval(d, Interval(x, x))
            with mpmath.workdps(50):
                fd = (eval_point(e, mpmath.mpf(x) + h, dps=50) - eval_point(e, mpmath.mpf(x) - h, dps=50)) / (2 * h)
            fd = float(fd)
            assert enc.lo - 1e-5 <= fd <= enc.hi + 1e-5, (fn, x)


def test_eval_numpy_matches_eval_point():
    import numpy as np

    xs = np.linspace(0.05, 1.5, 64)
    for text in CATALOG_LIKE:
        e = parse_expr(text)
        vals = eval_numpy(e, xs)
        for i in (0, 20, 63):
            ref = float(eval_point(e, float(xs[i]), dps=30))
            assert abs(vals[i] - ref) <= 1e-9 * max(1.0, abs(ref)), text


def test_powconst_structure():
    e = parse_expr("cos(x)^(4/3)")
    assert isinstance(e, PowConst)
    assert print_expr(e) == "cos(x)^(4/3)"
