"""Exact rational power series for the even analytic kernels.

All six pole-factored kernels used by the toolkit are even functions,
analytic on (-pi, pi):

    xcot       x*cot(x)         = 1 - sum_{n>=1} 2^{2n}|B_{2n}|/(2n)! x^{2n}
    cot_aux    alias of xcot (the 1/x pole is always factored out)
    xcoth_aux  x*coth(x)        = 1 + sum 2^{2n} B_{2n}/(2n)! x^{2n}
    inv_sin2   x^2/sin(x)^2     = 1 + sum (2n-1) 2^{2n}|B_{2n}|/(2n)! x^{2n}
    inv_sinh2  x^2/sinh(x)^2    = 1 - sum (2n-1) 2^{2n} B_{2n}/(2n)! x^{2n}
    xcsc       x/sin(x)         = 1 + sum (2^{2n}-2)|B_{2n}|/(2n)! x^{2n}

plus entire factorial-family helpers (cos, sinc, cosh, sinhc) used by the
limit engine.  Coefficients are exact ``fractions.Fraction`` values, and
every series carries a provable truncation tail bound.

Tail bounds for the Bernoulli family come from
|B_{2n}| = 2 (2n)! zeta(2n) / (2 pi)^{2n}, which makes every coefficient
magnitude at most K * p(n) * (1/pi^2)^n for a small rational K and a
quadratic p; the tail is then a closed-form arithmetico-geometric sum,
evaluated in exact rational arithmetic and rounded up.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from threading import Lock

from .intervals import DomainError

__all__ = [
    "bernoulli_even",
    "EvenSeries",
    "series",
    "tail_bound",
    "ratio_monotone",
    "RatioResult",
    "SERIES_NAMES",
    "derivative_series",
]

N_MAX_DEFAULT = 64

# 2*zeta(2) = pi^2/3 <= 33/10; zeta(2n) <= zeta(2) for n >= 1
_K_ZETA = Fraction(33, 10)
# rational lower bound for pi (math.pi is the double below pi)
_PI_LO = Fraction(math.pi)

_bern_cache: list[Fraction] = [Fraction(1)]  # B_0
_bern_lock = Lock()


def bernoulli_even(n: int, n_max: int = N_MAX_DEFAULT) -> Fraction:
    """Exact even-indexed Bernoulli number B_{2n} for 1 <= n <= n_max.

    Uses the binomial recurrence restricted to even indices (odd Bernoulli
    numbers vanish for index >= 3; the lone B_1 = -1/2 term is added
    explicitly).  Results are cached.
    """
    if not isinstance(n, int) or n < 1 or n > n_max:
        raise DomainError(f"bernoulli_even index must satisfy 1 <= n <= {n_max}, got {n}")
    with _bern_lock:
        while len(_bern_cache) <= n:
            m = 2 * len(_bern_cache)
            s = Fraction(0)
            for j in range(len(_bern_cache)):
                s += comb(m + 1, 2 * j) * _bern_cache[j]
            s += Fraction(m + 1) * Fraction(-1, 2)  # B_1 term of the recurrence
            _bern_cache.append(-s / (m + 1))
        return _bern_cache[n]


@dataclass(frozen=True)
class TailRule:
    """Coefficient-magnitude bound used to derive truncation tails.

    kind == "bernoulli": |a_m| <= K * (c2 m^2 + c1 m + c0) * (1/pi^2)^m
    kind == "factorial": |a_m| <= C / (2m + shift)!
    ``x_power_offset`` shifts the power of x attached to coefficient m
    (0 for plain even series, -1 for termwise-differentiated series whose
    terms are 2m a_m x^{2m-1}).
    """

    kind: str
    K: Fraction = Fraction(0)
    c2: Fraction = Fraction(0)
    c1: Fraction = Fraction(0)
    c0: Fraction = Fraction(0)
    C: Fraction = Fraction(1)
    shift: int = 0
    x_power_offset: int = 0


@dataclass(frozen=True)
class EvenSeries:
    """Truncated even power series with exact coefficients and a tail rule.

    ``coeffs[i]`` is the coefficient of x^{2(i+1)} (x^{2(i+1)-1} when the
    series is a termwise derivative, see ``odd_factor``).
    """

    name: str
    constant_term: Fraction
    coeffs: tuple[Fraction, ...]
    radius: float  # convergence radius (math.inf for entire functions)
    tail_rule: TailRule
    odd_factor: bool = False  # True: evaluate as sum a_i x^{2i+1} (derivative series)

    @property
    def terms(self) -> int:
        return len(self.coeffs)


def _geom_sums(N: int, q: Fraction) -> tuple[Fraction, Fraction, Fraction]:
    """Exact S0 = sum_{m>N} q^m, S1 = sum m q^m, S2 = sum m^2 q^m for 0<q<1."""
    M = N + 1
    one = Fraction(1)
    r = one - q
    qM = q**M
    s0 = qM / r
    s1 = qM * (M - (M - 1) * q) / r**2
    # derived from s2 = sum_{m>=M} m^2 q^m; verified against brute force in tests
    s2 = qM * (M * M - (2 * M * M - 2 * M - 1) * q + (M - 1) * (M - 1) * q * q) / r**3
    return s0, s1, s2


def _tail_fraction(rule: TailRule, N: int, r: Fraction) -> Fraction:
    if rule.kind == "bernoulli":
        q = r * r / (_PI_LO * _PI_LO)
        if q >= 1:
            raise DomainError(f"tail bound requires |x| < pi, got r={float(r)}")
        s0, s1, s2 = _geom_sums(N, q)
        total = rule.K * (rule.c2 * s2 + rule.c1 * s1 + rule.c0 * s0)
        if rule.x_power_offset:
            total = total * r ** rule.x_power_offset if r > 0 else total
        return total
    if rule.kind == "factorial":
        # terms |a_m x^{2m}| <= C r^{2m} / (2m + shift)!; sum exact terms
        # until the term ratio is provably < 1/2, then a geometric
        # remainder.  Valid and finite for every finite r.
        total = Fraction(0)
        m = N + 1
        r2 = r * r
        term = rule.C * r ** (2 * m) / factorial(2 * m + rule.shift)
        for _ in range(10_000):
            ratio = r2 / ((2 * m + rule.shift + 1) * (2 * m + rule.shift + 2))
            if ratio < Fraction(1, 2):
                total += term / (1 - ratio)
                if rule.x_power_offset and r > 0:
                    total *= r ** rule.x_power_offset
                return total
            total += term
            m += 1
            term = term * r2 / ((2 * m + rule.shift - 1) * (2 * m + rule.shift))
        raise DomainError("factorial tail did not converge")
    raise DomainError(f"unknown tail rule {rule.kind!r}")


def tail_bound(s: EvenSeries, N: int, r: float) -> float:
    """Upper bound on |true value - N-term partial sum| for all |x| <= r.

    Finite and monotone decreasing in N; requires r strictly inside the
    convergence radius.
    """
    if N < 0:
        raise DomainError("N must be nonnegative")
    if r < 0:
        raise DomainError("r must be nonnegative")
    if math.isfinite(s.radius) and r >= s.radius:
        raise DomainError(f"r={r} is not inside the radius {s.radius} of {s.name}")
    t = _tail_fraction(s.tail_rule, N, Fraction(r))
    f = float(t)
    return math.nextafter(f, math.inf) if Fraction(f) < t else f


# -- the built-in series -------------------------------------------------

SERIES_NAMES = ("xcot", "cot_aux", "xcoth_aux", "inv_sin2", "inv_sinh2", "xcsc")
_EXTRA_NAMES = ("cos", "sinc", "cosh", "sinhc")


def _coeff(name: str, n: int) -> Fraction:
    if name in ("xcot", "cot_aux"):
        return -(2**(2 * n)) * abs(bernoulli_even(n)) / factorial(2 * n)
    if name == "xcoth_aux":
        return Fraction(2**(2 * n)) * bernoulli_even(n) / factorial(2 * n)
    if name == "inv_sin2":
        return (2 * n - 1) * Fraction(2**(2 * n)) * abs(bernoulli_even(n)) / factorial(2 * n)
    if name == "inv_sinh2":
        return -(2 * n - 1) * Fraction(2**(2 * n)) * bernoulli_even(n) / factorial(2 * n)
    if name == "xcsc":
        return (2**(2 * n) - 2) * abs(bernoulli_even(n)) / factorial(2 * n)
    if name == "cos":
        return Fraction((-1)**n, factorial(2 * n))
    if name == "sinc":
        return Fraction((-1)**n, factorial(2 * n + 1))
    if name == "cosh":
        return Fraction(1, factorial(2 * n))
    if name == "sinhc":
        return Fraction(1, factorial(2 * n + 1))
    raise DomainError(f"unknown series {name!r}")


def _rule(name: str) -> TailRule:
    one = Fraction(1)
    if name in ("xcot", "cot_aux", "xcoth_aux", "xcsc"):
        return TailRule("bernoulli", K=_K_ZETA, c0=one)
    if name in ("inv_sin2", "inv_sinh2"):
        return TailRule("bernoulli", K=_K_ZETA, c1=Fraction(2), c0=Fraction(-1))
    if name in ("cos", "cosh"):
        return TailRule("factorial", C=one, shift=0)
    if name in ("sinc", "sinhc"):
        return TailRule("factorial", C=one, shift=1)
    raise DomainError(f"unknown series {name!r}")


def series(name: str, N: int) -> EvenSeries:
    """Build the named even series with N exact coefficients."""
    if name not in SERIES_NAMES and name not in _EXTRA_NAMES:
        raise DomainError(f"unknown series {name!r}; expected one of {SERIES_NAMES + _EXTRA_NAMES}")
    if N < 1:
        raise DomainError("N must be >= 1")
    coeffs = tuple(_coeff(name, n) for n in range(1, N + 1))
    radius = math.pi if name in SERIES_NAMES else math.inf
    return EvenSeries(name, Fraction(1), coeffs, radius, _rule(name))


# -- termwise derivative (tails transform accordingly) --------------------


def derivative_series(s: EvenSeries) -> EvenSeries:
    """Termwise derivative: sum 2(i+1) a_{i+1} x^{2i+1} as an odd series.

    The result stores the x^{2i+1} coefficients in ``coeffs`` with
    ``odd_factor`` set; evaluation is x * (even part).  The tail rule is the
    termwise-differentiated bound |2m a_m x^{2m-1}|.
    """
    if s.odd_factor:
        raise DomainError("cannot differentiate an already-odd series")
    coeffs = tuple(2 * (i + 1) * c for i, c in enumerate(s.coeffs))
    r = s.tail_rule
    if r.kind == "bernoulli":
        # |2m a_m| <= K * 2m * (c1 m + c0) * (1/pi^2)^m stays quadratic as
        # long as the base rule has no m^2 term (true for all built-ins)
        if r.c2 != 0:
            raise DomainError("derivative tail needs a linear base rule")
        rule = TailRule(
            "bernoulli",
            K=r.K,
            c2=2 * r.c1,
            c1=2 * r.c0,
            c0=Fraction(0),
            x_power_offset=-1,
        )
    elif r.kind == "factorial":
        # 2m / (2m + shift)! <= 1 / (2m + shift - 1)!
        rule = TailRule("factorial", C=r.C, shift=r.shift - 1, x_power_offset=-1)
    else:
        raise DomainError(f"unknown tail rule {r.kind!r}")
    return EvenSeries(f"d({s.name})", Fraction(0), coeffs, s.radius, rule, odd_factor=True)


# -- coefficient-ratio test (finite executable form) ---------------------


@dataclass(frozen=True)
class RatioResult:
    classification: str  # "increasing" | "decreasing" | "neither"
    first_violation: int | None  # 1-based index of the first break, if any
    ratios: tuple[Fraction, ...]


def ratio_monotone(
    a: list[Fraction] | tuple[Fraction, ...],
    c: list[Fraction] | tuple[Fraction, ...],
    N: int,
    strict: bool = True,
) -> RatioResult:
    """Classify the finite ratio sequence a_n/c_n, n = 1..N, exactly.

    Requires every c_n > 0 (the hypothesis of the coefficient-ratio
    monotonicity lemma); a violation raises DomainError.
    """
    if len(a) < N or len(c) < N:
        raise DomainError(f"need at least N={N} coefficients, got {len(a)}, {len(c)}")
    for i in range(N):
        if c[i] <= 0:
            raise DomainError(f"hypothesis violated: c_{i + 1} = {c[i]} is not positive")
    ratios = tuple(Fraction(a[i]) / c[i] for i in range(N))
    inc = dec = True
    first_inc_break = first_dec_break = None
    for i in range(1, N):
        up = ratios[i] > ratios[i - 1] if strict else ratios[i] >= ratios[i - 1]
        dn = ratios[i] < ratios[i - 1] if strict else ratios[i] <= ratios[i - 1]
        if inc and not up and first_inc_break is None:
            first_inc_break = i + 1
        if dec and not dn and first_dec_break is None:
            first_dec_break = i + 1
        inc = inc and up
        dec = dec and dn
    if inc and not dec:
        return RatioResult("increasing", None, ratios)
    if dec and not inc:
        return RatioResult("decreasing", None, ratios)
    if inc and dec:  # single element
        return RatioResult("increasing" if N == 1 else "neither", None, ratios)
    return RatioResult("neither", first_inc_break or first_dec_break, ratios)
