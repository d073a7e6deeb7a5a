"""Named constants: tight two-float enclosures plus mpmath builders.

Certificates must not depend on decimal literals, so every named constant
is derived through interval arithmetic from the pi/e enclosures.  The
mpmath builders provide the matching high-precision values for point
evaluation and scans.
"""

from __future__ import annotations

from typing import Callable

import mpmath

from .intervals import E, PI, Interval

__all__ = ["NAMED_CONSTANTS", "constant_enclosure", "constant_mp", "CONSTANT_NAMES"]

_ONE = Interval(1.0, 1.0)
_TWO = Interval(2.0, 2.0)
_THREE = Interval(3.0, 3.0)
_SIX = Interval(6.0, 6.0)
_EIGHT = Interval(8.0, 8.0)

from .intervals import elem as _elem


def _ilog(a: Interval) -> Interval:
    return _elem("log", a)


def _build_enclosures() -> dict[str, Interval]:
    pi = PI
    alpha = pi / (pi - _TWO)
    # k = (pi/2)^alpha = exp(alpha * log(pi/2))
    k = _elem("exp", alpha * _ilog(pi / _TWO))
    alpha1 = _ilog(pi) / _ilog(_THREE)
    alpha2 = _ilog(_SIX / pi) / _ilog(_TWO)
    alpha2702 = (pi * pi + _EIGHT * _ilog(_TWO / pi) - _TWO * pi) / _EIGHT
    return {
        "pi": pi,
        "e": E,
        "alpha": alpha,
        "k": k,
        "alpha1": alpha1,
        "alpha2": alpha2,
        "alpha2702": alpha2702,
    }


NAMED_CONSTANTS: dict[str, Interval] = _build_enclosures()
CONSTANT_NAMES = tuple(NAMED_CONSTANTS)

_MP_BUILDERS: dict[str, Callable[[], "mpmath.mpf"]] = {
    "pi": lambda: mpmath.pi + 0,
    "e": lambda: mpmath.e + 0,
    "alpha": lambda: mpmath.pi / (mpmath.pi - 2),
    "k": lambda: (mpmath.pi / 2) ** (mpmath.pi / (mpmath.pi - 2)),
    "alpha1": lambda: mpmath.log(mpmath.pi) / mpmath.log(3),
    "alpha2": lambda: mpmath.log(6 / mpmath.pi) / mpmath.log(2),
    "alpha2702": lambda: (mpmath.pi**2 + 8 * mpmath.log(2 / mpmath.pi) - 2 * mpmath.pi) / 8,
}


def constant_enclosure(name: str) -> Interval:
    try:
        return NAMED_CONSTANTS[name]
    except KeyError:
        raise KeyError(f"unknown named constant {name!r}") from None


def constant_mp(name: str):
    try:
        return _MP_BUILDERS[name]()
    except KeyError:
        raise KeyError(f"unknown named constant {name!r}") from None
