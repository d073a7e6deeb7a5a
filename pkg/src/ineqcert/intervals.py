"""Validated interval arithmetic with outward rounding.

Every operation returns an interval that contains the true mathematical
image of its inputs.  Rounding is absorbed by nudging results outward with
``math.nextafter`` instead of switching FPU rounding modes: portable, and
the cost is a little slack, never soundness.

Arithmetic results (round-to-nearest, error <= 0.5 ulp) are widened by one
ulp.  libm transcendentals are not correctly rounded, so those results are
widened by ``TRANS_ULPS`` ulps; the containment fuzz suite hammers this
margin against mpmath references.
"""

from __future__ import annotations

import math
from fractions import Fraction

__all__ = [
    "Interval",
    "IntervalError",
    "PoleError",
    "DomainError",
    "arith",
    "elem",
    "ELEM_FNS",
    "PI",
    "PI_HALF",
    "E",
]

# slack applied to libm-evaluated transcendental endpoints
TRANS_ULPS = 3

_INF = math.inf


class IntervalError(ValueError):
    """Base class for interval evaluation failures."""


class PoleError(IntervalError):
    """Division by an interval containing zero."""


class DomainError(IntervalError):
    """Argument outside the mathematical domain of an operation."""


def _down(x: float, n: int = 1) -> float:
    for _ in range(n):
        x = math.nextafter(x, -_INF)
    return x


def _up(x: float, n: int = 1) -> float:
    for _ in range(n):
        x = math.nextafter(x, _INF)
    return x


class Interval:
    """Closed interval [lo, hi] of binary floats."""

    __slots__ = ("lo", "hi")

    def __init__(self, lo: float, hi: float):
        if math.isnan(lo) or math.isnan(hi) or lo > hi:
            raise IntervalError(f"invalid interval bounds [{lo}, {hi}]")
        self.lo = lo
        self.hi = hi

    # -- constructors -------------------------------------------------

    @staticmethod
    def point(x: float) -> "Interval":
        return Interval(x, x)

    @staticmethod
    def from_fraction(q: Fraction) -> "Interval":
        """Tightest float enclosure of an exact rational."""
        f = float(q)
        if math.isinf(f):
            raise IntervalError(f"rational {q} overflows float range")
        fq = Fraction(f)
        lo = f if fq <= q else _down(f)
        hi = f if fq >= q else _up(f)
        return Interval(lo, hi)

    @staticmethod
    def hull(*items: "Interval") -> "Interval":
        return Interval(min(i.lo for i in items), max(i.hi for i in items))

    # -- inspection ---------------------------------------------------

    @property
    def width(self) -> float:
        return self.hi - self.lo

    @property
    def mid(self) -> float:
        m = 0.5 * (self.lo + self.hi)
        if not math.isfinite(m):
            m = 0.5 * self.lo + 0.5 * self.hi
        return m

    @property
    def mag(self) -> float:
        """Largest absolute value inside."""
        return max(abs(self.lo), abs(self.hi))

    def contains(self, x: float) -> bool:
        return self.lo <= x <= self.hi

    def contains_interval(self, other: "Interval") -> bool:
        return self.lo <= other.lo and other.hi <= self.hi

    def intersects(self, other: "Interval") -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def straddles_zero(self) -> bool:
        return self.lo <= 0.0 <= self.hi

    def __repr__(self) -> str:
        return f"Interval({self.lo!r}, {self.hi!r})"

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Interval)
            and self.lo == other.lo
            and self.hi == other.hi
        )

    def __hash__(self) -> int:
        return hash((self.lo, self.hi))

    # -- arithmetic ---------------------------------------------------

    def __neg__(self) -> "Interval":
        # IEEE negation is exact: no widening
        return Interval(-self.hi, -self.lo)

    def __add__(self, other: "Interval") -> "Interval":
        # adding an exact zero is exact; skipping the nudge keeps
        # degenerate series terms from inflating enclosures
        if other.lo == 0.0 and other.hi == 0.0:
            return self
        if self.lo == 0.0 and self.hi == 0.0:
            return other
        return Interval(_down(self.lo + other.lo), _up(self.hi + other.hi))

    def __sub__(self, other: "Interval") -> "Interval":
        if other.lo == 0.0 and other.hi == 0.0:
            return self
        return Interval(_down(self.lo - other.hi), _up(self.hi - other.lo))

    def __mul__(self, other: "Interval") -> "Interval":
        if (self.lo == 0.0 and self.hi == 0.0) or (other.lo == 0.0 and other.hi == 0.0):
            return Interval(0.0, 0.0)
        a, b, c, d = self.lo, self.hi, other.lo, other.hi
        p = (a * c, a * d, b * c, b * d)
        return Interval(_down(min(p)), _up(max(p)))

    def __truediv__(self, other: "Interval") -> "Interval":
        if other.straddles_zero():
            raise PoleError(f"division by interval containing zero: {other}")
        a, b, c, d = self.lo, self.hi, other.lo, other.hi
        p = (a / c, a / d, b / c, b / d)
        return Interval(_down(min(p)), _up(max(p)))

    def abs(self) -> "Interval":
        if self.lo >= 0.0:
            return self
        if self.hi <= 0.0:
            return -self
        return Interval(0.0, max(-self.lo, self.hi))

    def pow_int(self, n: int) -> "Interval":
        if n == 0:
            return Interval(1.0, 1.0)
        if n < 0:
            return Interval(1.0, 1.0) / self.pow_int(-n)
        if n % 2 == 0 and self.lo < 0.0:
            return self.abs().pow_int(n)  # abs() yields lo >= 0, no re-entry
        # binary exponentiation over interval multiply keeps containment
        # (avoids trusting the rounding of float ** for large n)
        result: Interval | None = None
        base = self
        m = n
        while m:
            if m & 1:
                result = base if result is None else result * base
            m >>= 1
            if m:
                base = base * base
        assert result is not None
        return result


# -- elementary functions ----------------------------------------------

# math.pi is the double just below the true pi: math.pi < pi < nextafter(math.pi, inf)
PI = Interval(math.pi, _up(math.pi))
PI_HALF = Interval(math.pi / 2, _up(math.pi / 2))
E = Interval(math.e, _up(math.e))

# float strictly below the true pi; |x| <= _PI_FLOOR implies |x| < pi
_PI_FLOOR = math.pi
_TWO_PI = 2.0 * math.pi


def _monotone(f, a: Interval, *, ulps: int = TRANS_ULPS) -> Interval:
    return Interval(_down(f(a.lo), ulps), _up(f(a.hi), ulps))


def _contains_extremum(a: Interval, half_multiple: float) -> bool:
    """Conservatively test whether (half_multiple + 2k)*pi meets [a.lo, a.hi].

    Used to detect interior extrema of sin/cos.  The candidate angles are
    computed in floats, so the test widens the window by a few ulps: it may
    report an extremum that is just outside, never miss one inside.
    """
    k_lo = math.floor((a.lo / _TWO_PI) - half_multiple / 2.0) - 1
    k_hi = math.ceil((a.hi / _TWO_PI) - half_multiple / 2.0) + 1
    for k in range(k_lo, k_hi + 1):
        c = (half_multiple + 2.0 * k) * math.pi
        slack = 4.0 * abs(math.ulp(c)) + 5e-324
        if a.lo - slack <= c <= a.hi + slack:
            return True
    return False


def _clamp(v: Interval, lo: float, hi: float) -> Interval:
    return Interval(max(v.lo, lo), min(v.hi, hi))


def _isin(a: Interval) -> Interval:
    if a.width >= _TWO_PI:
        return Interval(-1.0, 1.0)
    vals = (math.sin(a.lo), math.sin(a.hi))
    lo = _down(min(vals), TRANS_ULPS)
    hi = _up(max(vals), TRANS_ULPS)
    if _contains_extremum(a, 0.5):
        hi = 1.0
    if _contains_extremum(a, 1.5):
        lo = -1.0
    return _clamp(Interval(lo, hi), -1.0, 1.0)


def _icos(a: Interval) -> Interval:
    if a.width >= _TWO_PI:
        return Interval(-1.0, 1.0)
    vals = (math.cos(a.lo), math.cos(a.hi))
    lo = _down(min(vals), TRANS_ULPS)
    hi = _up(max(vals), TRANS_ULPS)
    if _contains_extremum(a, 0.0):
        hi = 1.0
    if _contains_extremum(a, 1.0):
        lo = -1.0
    return _clamp(Interval(lo, hi), -1.0, 1.0)


def _isinh(a: Interval) -> Interval:
    return _monotone(math.sinh, a)


def _icosh(a: Interval) -> Interval:
    if a.straddles_zero():
        hi = _up(math.cosh(a.mag), TRANS_ULPS)
        return Interval(1.0, hi)  # cosh >= 1, minimum exactly at 0
    v = _monotone(math.cosh, a.abs())
    return Interval(max(v.lo, 1.0), v.hi)


def _itanh(a: Interval) -> Interval:
    return _clamp(_monotone(math.tanh, a), -1.0, 1.0)


def _iexp(a: Interval) -> Interval:
    v = _monotone(math.exp, a)
    return Interval(max(v.lo, 0.0), v.hi)  # exp > 0


def _ilog(a: Interval) -> Interval:
    if a.lo <= 0.0:
        raise DomainError(f"log needs a strictly positive interval, got {a}")
    return _monotone(math.log, a)


def _isqrt(a: Interval) -> Interval:
    if a.lo < 0.0:
        raise DomainError(f"sqrt needs a nonnegative interval, got {a}")
    # math.sqrt is correctly rounded; 1 ulp is already generous
    return Interval(max(0.0, _down(math.sqrt(a.lo))), _up(math.sqrt(a.hi)))


def _iabs(a: Interval) -> Interval:
    return a.abs()


ELEM_FNS = {
    "sin": _isin,
    "cos": _icos,
    "sinh": _isinh,
    "cosh": _icosh,
    "tanh": _itanh,
    "exp": _iexp,
    "log": _ilog,
    "sqrt": _isqrt,
    "abs": _iabs,
}


def elem(fn: str, a: Interval) -> Interval:
    """Enclosure of an elementary function over an interval."""
    try:
        impl = ELEM_FNS[fn]
    except KeyError:
        raise DomainError(f"unknown elementary function {fn!r}") from None
    return impl(a)


def arith(op: str, a: Interval, b: "Interval | int | None" = None) -> Interval:
    """Name-dispatched arithmetic (same semantics as the operators)."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    if op == "neg":
        return -a
    if op == "pow_int":
        if not isinstance(b, int):
            raise DomainError("pow_int needs an integer exponent")
        return a.pow_int(b)
    raise DomainError(f"unknown arithmetic op {op!r}")
