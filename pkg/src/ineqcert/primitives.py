"""Singularity-free primitive kernels over intervals.

The six even kernels (sinc, xcot, sinhc, xcoth, inv_sinc2, inv_sinhc2) and
their six odd derivative kernels are evaluated through two branches:

* |x| <= CROSSOVER: exact-series partial sum (accumulated powers of the
  nonnegative x^2 interval, enclosed rational coefficients) plus a provable
  tail pad;
* |x| >= CROSSOVER: the quotient form.  Where the kernel is monotone on the
  positive half-axis the quotient is evaluated only at the endpoints, which
  keeps enclosures tight on narrow cells.

Intervals that straddle the crossover are split there and hulled; negative
arguments are reduced by parity.  The monotonicity facts used below are
classical (e.g. x cot x strictly decreasing on (0, pi), sinh x / x strictly
increasing on (0, oo)) and are exercised by the containment fuzz tests.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

import mpmath

from .intervals import DomainError, Interval, PoleError, elem, _down, _up
from .series import EvenSeries, derivative_series, series, tail_bound

__all__ = [
    "PRIM_NAMES",
    "DERIV_OF_PRIM",
    "eval_prim",
    "prim_mp",
    "prim_np",
    "CROSSOVER",
    "SERIES_TERMS",
]

CROSSOVER = 0.7
# Default order for the public series interface: the smallest order whose
# provable tail at pi/2 is below 1e-14 for all six kernels.  (At 24 terms
# the true remainder of the (2n-1)-weighted kernels is still 1.2e-13.)
SERIES_TERMS = 28
# The evaluation branch only ever sees |x| <= CROSSOVER, where 14 terms
# leave a tail below 1e-19 for every kernel: well under rounding noise.
_EVAL_TERMS = 14

# a float strictly below pi: intervals with |x| <= this stay inside (-pi, pi)
_PI_FLOOR = math.pi

PRIM_NAMES = (
    "sinc",
    "xcot",
    "sinhc",
    "xcoth",
    "inv_sinc2",
    "inv_sinhc2",
    "dsinc",
    "dxcot",
    "dsinhc",
    "dxcoth",
    "dinv_sinc2",
    "dinv_sinhc2",
)

DERIV_OF_PRIM = {
    "sinc": "dsinc",
    "xcot": "dxcot",
    "sinhc": "dsinhc",
    "xcoth": "dxcoth",
    "inv_sinc2": "dinv_sinc2",
    "inv_sinhc2": "dinv_sinhc2",
}


def _series_data(s: EvenSeries) -> tuple[Interval, tuple[Interval, ...], float]:
    const = Interval.from_fraction(s.constant_term)
    coeffs = tuple(Interval.from_fraction(c) for c in s.coeffs)
    pad = tail_bound(s, s.terms, CROSSOVER)
    if s.odd_factor:
        # the pad is applied before the final multiplication by x, so it
        # must cover remainder(x)/|x| <= tail(r)/r for every |x| <= r
        pad = _up(pad / CROSSOVER, 2)
    return const, coeffs, pad


@dataclass(frozen=True)
class _Prim:
    name: str
    odd: bool  # parity of the kernel itself
    circular: bool  # poles at +-pi restrict the domain to (-pi, pi)
    const: Interval
    coeffs: tuple[Interval, ...]
    tail_pad: float  # valid tail bound for every |x| <= CROSSOVER
    quotient: Callable[[Interval], Interval]  # on intervals with lo >= CROSSOVER


def _series_eval(p: _Prim, m: Interval) -> Interval:
    # m subset [0, CROSSOVER]; powers of the nonnegative x^2 interval are tight.
    # Even kernels: const + sum coeffs[i] * (x^2)^(i+1).
    # Odd (derivative) kernels: x * sum coeffs[i] * (x^2)^i.
    t = m.pow_int(2)
    acc = p.const
    power = Interval(1.0, 1.0)
    for c in p.coeffs:
        if p.odd:
            acc = acc + c * power
            power = power * t
        else:
            power = power * t
            acc = acc + c * power
    pad = Interval(-p.tail_pad, p.tail_pad)
    acc = acc + pad
    if p.odd:
        acc = acc * m
    return acc


def _point(f: Callable[[Interval], Interval], x: float) -> Interval:
    return f(Interval(x, x))


def _q_sinc(a: Interval) -> Interval:
    # sin x / x; strictly decreasing on (0, pi], generic quotient beyond
    if a.hi <= _PI_FLOOR:
        lo = _point(_q_sinc_generic, a.hi)
        hi = _point(_q_sinc_generic, a.lo)
        return Interval(lo.lo, hi.hi)
    return _q_sinc_generic(a)


def _q_sinc_generic(a: Interval) -> Interval:
    return elem("sin", a) / a


def _q_xcot(a: Interval) -> Interval:
    # x cos x / sin x; strictly decreasing on (0, pi)
    lo = _point(_q_xcot_point, a.hi)
    hi = _point(_q_xcot_point, a.lo)
    return Interval(lo.lo, hi.hi)


def _q_xcot_point(a: Interval) -> Interval:
    s = elem("sin", a)
    if s.straddles_zero():
        raise PoleError(f"cot pole inside {a}")
    return a * elem("cos", a) / s


def _q_inv_sinc2(a: Interval) -> Interval:
    # (x / sin x)^2; strictly increasing on (0, pi)
    lo = _point(_q_inv_sinc2_point, a.lo)
    hi = _point(_q_inv_sinc2_point, a.hi)
    return Interval(max(lo.lo, 0.0), hi.hi)


def _q_inv_sinc2_point(a: Interval) -> Interval:
    s = elem("sin", a)
    if s.straddles_zero():
        raise PoleError(f"1/sin^2 pole inside {a}")
    return (a / s).pow_int(2)


def _q_sinhc(a: Interval) -> Interval:
    # sinh x / x; strictly increasing on (0, oo)
    lo = _point(_q_sinhc_point, a.lo)
    hi = _point(_q_sinhc_point, a.hi)
    return Interval(lo.lo, hi.hi)


def _q_sinhc_point(a: Interval) -> Interval:
    try:
        return elem("sinh", a) / a
    except OverflowError:
        return Interval(_down(math.exp(min(a.lo, 700.0)) / (2.0 * a.hi), 8), math.inf)


def _q_xcoth(a: Interval) -> Interval:
    # x / tanh x; strictly increasing on (0, oo); tanh form avoids overflow
    lo = _point(_q_xcoth_point, a.lo)
    hi = _point(_q_xcoth_point, a.hi)
    return Interval(max(lo.lo, 1.0), hi.hi)


def _q_xcoth_point(a: Interval) -> Interval:
    return a / elem("tanh", a)


def _q_inv_sinhc2(a: Interval) -> Interval:
    # (x / sinh x)^2; strictly decreasing on (0, oo)
    lo = _point(_q_inv_sinhc2_point, a.hi)
    hi = _point(_q_inv_sinhc2_point, a.lo)
    return Interval(max(lo.lo, 0.0), hi.hi)


def _q_inv_sinhc2_point(a: Interval) -> Interval:
    try:
        return (a / elem("sinh", a)).pow_int(2)
    except OverflowError:
        return Interval(0.0, _up((2.0 * a.hi / math.exp(min(a.lo, 700.0))) ** 2, 8))


# quotient forms of the derivative kernels; generic interval evaluation
# (already pole-free away from 0, which is all the quotient branch sees)


def _q_dsinc(a: Interval) -> Interval:
    return (elem("cos", a) - eval_prim("sinc", a)) / a


def _q_dxcot(a: Interval) -> Interval:
    return (eval_prim("xcot", a) - eval_prim("inv_sinc2", a)) / a


def _q_dinv_sinc2(a: Interval) -> Interval:
    two = Interval(2.0, 2.0)
    one = Interval(1.0, 1.0)
    return two * eval_prim("inv_sinc2", a) * (one - eval_prim("xcot", a)) / a


def _q_dsinhc(a: Interval) -> Interval:
    return (elem("cosh", a) - eval_prim("sinhc", a)) / a


def _q_dxcoth(a: Interval) -> Interval:
    return (eval_prim("xcoth", a) - eval_prim("inv_sinhc2", a)) / a


def _q_dinv_sinhc2(a: Interval) -> Interval:
    two = Interval(2.0, 2.0)
    one = Interval(1.0, 1.0)
    return two * eval_prim("inv_sinhc2", a) * (one - eval_prim("xcoth", a)) / a


def _build() -> dict[str, _Prim]:
    base = {
        "sinc": ("sinc", False, _q_sinc),
        "xcot": ("xcot", True, _q_xcot),
        "sinhc": ("sinhc", False, _q_sinhc),
        "xcoth": ("xcoth_aux", False, _q_xcoth),
        "inv_sinc2": ("inv_sin2", True, _q_inv_sinc2),
        "inv_sinhc2": ("inv_sinh2", False, _q_inv_sinhc2),
    }
    dquot = {
        "dsinc": _q_dsinc,
        "dxcot": _q_dxcot,
        "dsinhc": _q_dsinhc,
        "dxcoth": _q_dxcoth,
        "dinv_sinc2": _q_dinv_sinc2,
        "dinv_sinhc2": _q_dinv_sinhc2,
    }
    prims: dict[str, _Prim] = {}
    for name, (series_name, circular, quot) in base.items():
        s = series(series_name, _EVAL_TERMS)
        const, coeffs, pad = _series_data(s)
        prims[name] = _Prim(name, False, circular, const, coeffs, pad, quot)
        d = derivative_series(s)
        dconst, dcoeffs, dpad = _series_data(d)
        dname = DERIV_OF_PRIM[name]
        prims[dname] = _Prim(dname, True, circular, dconst, dcoeffs, dpad, dquot[dname])
    return prims


_PRIMS = _build()


@lru_cache(maxsize=1 << 17)
def _eval_prim_cached(fn: str, lo: float, hi: float) -> tuple[float, float]:
    # adjacent bisection cells share endpoints, so point evaluations from
    # the monotone-endpoint branches get heavy reuse
    r = _eval_prim_impl(fn, Interval(lo, hi))
    return (r.lo, r.hi)


def eval_prim(fn: str, a: Interval) -> Interval:
    """Containment-preserving enclosure of a primitive kernel."""
    lo, hi = _eval_prim_cached(fn, a.lo, a.hi)
    return Interval(lo, hi)


def _eval_prim_impl(fn: str, a: Interval) -> Interval:
    try:
        p = _PRIMS[fn]
    except KeyError:
        raise DomainError(f"unknown primitive {fn!r}") from None
    if p.circular and not (-_PI_FLOOR <= a.lo and a.hi <= _PI_FLOOR):
        raise DomainError(f"{fn} needs its argument inside (-pi, pi), got {a}")
    if p.odd:
        if a.hi <= 0.0:
            return -_eval_nonneg(p, -a)
        if a.lo >= 0.0:
            return _eval_nonneg(p, a)
        return Interval.hull(
            -_eval_nonneg(p, Interval(0.0, -a.lo)),
            _eval_nonneg(p, Interval(0.0, a.hi)),
        )
    return _eval_nonneg(p, a.abs())


def _series_branch(p: _Prim, m: Interval) -> Interval:
    if p.odd or m.width == 0.0:
        return _series_eval(p, m)
    # every even kernel is monotone on [0, CROSSOVER] (classical facts:
    # sinc, xcot, (x/sinh x)^2 strictly decrease; sinh x/x, x/tanh x,
    # (x/sin x)^2 strictly increase), so endpoint evaluation is exact up
    # to rounding and avoids the alternating-term dependency on wide cells
    return Interval.hull(
        _series_eval(p, Interval(m.lo, m.lo)),
        _series_eval(p, Interval(m.hi, m.hi)),
    )


def _eval_nonneg(p: _Prim, m: Interval) -> Interval:
    if m.hi <= CROSSOVER:
        return _series_branch(p, m)
    if m.lo >= CROSSOVER:
        return p.quotient(m)
    return Interval.hull(
        _series_branch(p, Interval(m.lo, CROSSOVER)),
        p.quotient(Interval(CROSSOVER, m.hi)),
    )


# -- reference evaluators (non-certified) --------------------------------


def prim_mp(fn: str, x):
    """mpmath evaluation of a primitive at a high-precision point."""
    if x == 0:
        if fn in ("sinc", "sinhc", "xcot", "xcoth"):
            return mpmath.mpf(1)
        if fn in ("inv_sinc2", "inv_sinhc2"):
            return mpmath.mpf(1)
        return mpmath.mpf(0)  # all derivative kernels are odd
    if fn == "sinc":
        return mpmath.sin(x) / x
    if fn == "xcot":
        return x * mpmath.cos(x) / mpmath.sin(x)
    if fn == "sinhc":
        return mpmath.sinh(x) / x
    if fn == "xcoth":
        return x / mpmath.tanh(x)
    if fn == "inv_sinc2":
        return (x / mpmath.sin(x)) ** 2
    if fn == "inv_sinhc2":
        return (x / mpmath.sinh(x)) ** 2
    if fn == "dsinc":
        return (mpmath.cos(x) - mpmath.sin(x) / x) / x
    if fn == "dxcot":
        return (prim_mp("xcot", x) - prim_mp("inv_sinc2", x)) / x
    if fn == "dsinhc":
        return (mpmath.cosh(x) - mpmath.sinh(x) / x) / x
    if fn == "dxcoth":
        return (prim_mp("xcoth", x) - prim_mp("inv_sinhc2", x)) / x
    if fn == "dinv_sinc2":
        return 2 * prim_mp("inv_sinc2", x) * (1 - prim_mp("xcot", x)) / x
    if fn == "dinv_sinhc2":
        return 2 * prim_mp("inv_sinhc2", x) * (1 - prim_mp("xcoth", x)) / x
    raise DomainError(f"unknown primitive {fn!r}")


def _np_poly(p: _Prim, x):
    import numpy as np

    t = x * x
    acc = np.full_like(x, float(p.const.mid))
    power = np.ones_like(x)
    for c in p.coeffs:
        if p.odd:
            acc = acc + float(c.mid) * power
            power = power * t
        else:
            power = power * t
            acc = acc + float(c.mid) * power
    if p.odd:
        acc = acc * x
    return acc


def prim_np(fn: str, x):
    """Vectorized numpy evaluation (for scans; not containment-checked)."""
    import numpy as np

    p = _PRIMS[fn]
    x = np.asarray(x, dtype=float)
    small = np.abs(x) < 1e-2
    xs = np.where(small, 0.0, x)  # keep the quotient branch division safe
    with np.errstate(divide="ignore", invalid="ignore"):
        if fn == "sinc":
            far = np.sin(xs) / xs
        elif fn == "xcot":
            far = xs * np.cos(xs) / np.sin(xs)
        elif fn == "sinhc":
            far = np.sinh(xs) / xs
        elif fn == "xcoth":
            far = xs / np.tanh(xs)
        elif fn == "inv_sinc2":
            far = (xs / np.sin(xs)) ** 2
        elif fn == "inv_sinhc2":
            far = (xs / np.sinh(xs)) ** 2
        elif fn == "dsinc":
            far = (np.cos(xs) - np.sin(xs) / xs) / xs
        elif fn == "dxcot":
            far = (prim_np("xcot", xs) - prim_np("inv_sinc2", xs)) / xs
        elif fn == "dsinhc":
            far = (np.cosh(xs) - np.sinh(xs) / xs) / xs
        elif fn == "dxcoth":
            far = (prim_np("xcoth", xs) - prim_np("inv_sinhc2", xs)) / xs
        elif fn == "dinv_sinc2":
            far = 2 * prim_np("inv_sinc2", xs) * (1 - prim_np("xcot", xs)) / xs
        elif fn == "dinv_sinhc2":
            far = 2 * prim_np("inv_sinhc2", xs) * (1 - prim_np("xcoth", xs)) / xs
        else:
            raise DomainError(f"unknown primitive {fn!r}")
    return np.where(small, _np_poly(p, x), far)
