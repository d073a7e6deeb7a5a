"""Concurrent use: pure evaluation and the guarded coefficient cache."""

from __future__ import annotations

import concurrent.futures
from fractions import Fraction

from ineqcert.expr import eval_interval
from ineqcert.intervals import Interval
from ineqcert.parser import parse_expr
from ineqcert.series import bernoulli_even, series


def test_concurrent_interval_evaluation_is_deterministic():
    e = parse_expr("(1/sinc(x))^alpha + xcot(x) - sinc(x)^2")
    args = [Interval(0.05 + 0.01 * i, 0.06 + 0.01 * i) for i in range(120)]
    sequential = [eval_interval(e, a) for a in args]
    with concurrent.futures.ThreadPoolExecutor(max_workers=8) as pool:
        parallel = list(pool.map(lambda a: eval_interval(e, a), args))
    assert sequential == parallel


def test_concurrent_bernoulli_cache():
    # hammer the cache from many threads; results must be exact and stable
    def task(n: int) -> Fraction:
        return bernoulli_even(1 + n % 40)

    with concurrent.futures.ThreadPoolExecutor(max_workers=16) as pool:
        results = list(pool.map(task, range(400)))
    for i, value in enumerate(results):
        assert value == bernoulli_even(1 + i % 40)
    assert bernoulli_even(6) == Fraction(-691, 2730)


def test_concurrent_series_construction():
    names = ["xcot", "xcsc", "inv_sin2", "inv_sinh2", "xcoth_aux", "cot_aux"] * 10
    with concurrent.futures.ThreadPoolExecutor(max_workers=8) as pool:
        built = list(pool.map(lambda n: series(n, 20), names))
    for name, s in zip(names, built):
        assert s.coeffs == series(name, 20).coeffs
