"""Primitive kernels: removable singularities, containment, branch
consistency around the series/quotient crossover, width convergence."""

from __future__ import annotations

import math
import random

import mpmath
import pytest

from ineqcert.intervals import DomainError, Interval, PI_HALF
from ineqcert.primitives import CROSSOVER, PRIM_NAMES, eval_prim, prim_mp, prim_np


def test_sinc_at_zero():
    r = eval_prim("sinc", Interval(0.0, 0.0))
    assert r.contains(1.0)
    assert r.width <= 1e-14


def test_sinc_at_half_pi():
    r = eval_prim("sinc", PI_HALF)
    assert r.contains(2 / math.pi)
    assert r.width < 1e-12


def test_xcot_zero_of_half_pi():
    r = eval_prim("xcot", PI_HALF)
    assert r.contains(0.0)
    assert r.width <= 1e-12


def test_kernel_values_at_zero():
    for fn in ("sinc", "sinhc", "xcot", "xcoth", "inv_sinc2", "inv_sinhc2"):
        r = eval_prim(fn, Interval(0.0, 0.0))
        assert r.contains(1.0), fn
    for fn in ("dsinc", "dsinhc", "dxcot", "dxcoth", "dinv_sinc2", "dinv_sinhc2"):
        r = eval_prim(fn, Interval(0.0, 0.0))
        assert r.contains(0.0), fn


def test_circular_domain_guard():
    with pytest.raises(DomainError):
        eval_prim("xcot", Interval(0.0, 3.2))
    with pytest.raises(DomainError):
        eval_prim("inv_sinc2", Interval(-4.0, 0.0))
    # sinc itself extends beyond pi (plain sin x / x)
    r = eval_prim("sinc", Interval(4.0, 7.0))
    assert r.contains(math.sin(5.0) / 5.0)


def test_hyperbolic_any_finite_interval():
    r = eval_prim("xcoth", Interval(20.0, 20.0))
    assert r.contains(20.0 / math.tanh(20.0))
    r = eval_prim("inv_sinhc2", Interval(0.0, 20.0))
    assert r.lo >= 0.0 and r.contains(1.0)


def test_containment_fuzz_sample():
    rng = random.Random(4321)
    with mpmath.workdps(40):
        for _ in range(3000):
            fn = rng.choice(PRIM_NAMES)
            circular = fn in ("xcot", "inv_sinc2", "dxcot", "dinv_sinc2")
            hi = 3.1 if circular else 12.0
            c = rng.uniform(-hi, hi)
            w = abs(rng.gauss(0, 0.3)) * rng.choice([0.0, 1e-9, 1e-3, 1.0])
            lo_v = max(-hi, c - w)
            hi_v = min(hi, c + w)
            a = Interval(lo_v, hi_v)
            x = rng.uniform(a.lo, a.hi)
            r = eval_prim(fn, a)
            ref = prim_mp(fn, mpmath.mpf(x))
            assert r.lo <= ref <= r.hi, (fn, a.lo, a.hi, x)


def test_inclusion_monotonicity():
    rng = random.Random(5)
    for _ in range(500):
        fn = rng.choice(PRIM_NAMES)
        c = rng.uniform(-2.5, 2.5)
        w = rng.uniform(0, 0.5)
        outer = Interval(c - w, c + w)
        inner = Interval(c - w / 3, c + w / 3)
        ro = eval_prim(fn, outer)
        ri = eval_prim(fn, inner)
        assert ro.lo <= ri.lo + 1e-300 and ri.hi <= ro.hi + 1e-300, (fn, c, w)


def test_width_convergence():
    rng = random.Random(11)
    for _ in range(60):
        fn = rng.choice(["sinc", "xcot"])
        m = rng.uniform(-1.5, 1.5)
        prev = math.inf
        for h in (1e-1, 1e-3, 1e-6, 1e-9):
            r = eval_prim(fn, Interval(m - h, m + h))
            assert r.width <= prev + 1e-300
            prev = r.width
        assert prev < 1e-8


def test_branch_consistency_near_crossover():
    # the series result just inside and the quotient result just outside
    # must overlap: both contain the true values near the switch point
    for fn in ("sinc", "xcot", "sinhc", "xcoth", "inv_sinc2", "inv_sinhc2"):
        inside = eval_prim(fn, Interval(CROSSOVER - 1e-4, CROSSOVER))
        outside = eval_prim(fn, Interval(CROSSOVER, CROSSOVER + 1e-4))
        straddle = eval_prim(fn, Interval(CROSSOVER - 1e-4, CROSSOVER + 1e-4))
        assert inside.intersects(outside), fn
        assert straddle.intersects(inside) and straddle.intersects(outside), fn


def test_numpy_matches_mpmath():
    import numpy as np

    xs = np.array([-1.2, -0.5, -1e-6, 0.0, 1e-5, 0.3, 0.7, 1.3])
    with mpmath.workdps(30):
        for fn in PRIM_NAMES:
            vals = prim_np(fn, xs)
            for x, v in zip(xs, vals):
                ref = float(prim_mp(fn, mpmath.mpf(float(x))))
                assert abs(v - ref) <= 1e-9 * max(1.0, abs(ref)), (fn, x)
