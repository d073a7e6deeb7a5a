"""Expression AST over one real variable with dual evaluation.

Nodes cover rational and named constants, the elementary function set, the
pole-free primitive kernels, integer powers, and powers with constant real
exponents (evaluated as exp(c*log(base)); the base must be provably
positive).  Trees are immutable; evaluation is pure.

Three evaluators:

* ``eval_interval``   -- containment-preserving interval enclosure;
* ``eval_point``      -- high-precision mpmath value (scans, root finding);
* ``eval_numpy``      -- vectorized floats (grid scans only).

``differentiate`` returns an expression whose interval evaluation encloses
the true derivative.  Derivatives of the even primitive kernels are closed
under dedicated odd kernels (dsinc & co.), so differentiating a catalog
expression never reintroduces a bare 1/x.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .constants import constant_enclosure, constant_mp
from .intervals import DomainError, Interval, IntervalError, PoleError, elem
from .primitives import DERIV_OF_PRIM, PRIM_NAMES, eval_prim, prim_mp, prim_np

__all__ = [
    "Expr",
    "Const",
    "Var",
    "Add",
    "Sub",
    "Mul",
    "Div",
    "Neg",
    "PowInt",
    "PowConst",
    "Fn",
    "Prim",
    "EvalError",
    "UnsupportedError",
    "eval_interval",
    "eval_point",
    "eval_numpy",
    "differentiate",
    "print_expr",
    "FN_NAMES",
]

FN_NAMES = ("sin", "cos", "sinh", "cosh", "tanh", "exp", "log", "sqrt", "abs")


class EvalError(ValueError):
    """Evaluation failure carrying the offending subexpression."""

    def __init__(self, message: str, subexpr: "Expr | None" = None):
        self.subexpr = subexpr
        if subexpr is not None:
            message = f"{message} (in {print_expr(subexpr)})"
        super().__init__(message)


class UnsupportedError(ValueError):
    """Requested operation is not defined for this node."""


class Expr:
    __slots__ = ()

    def __repr__(self) -> str:
        return f"<{type(self).__name__}: {print_expr(self)}>"


@dataclass(frozen=True, repr=False)
class Const(Expr):
    """Rational literal or a named constant with a certified enclosure."""

    value: Fraction | None = None
    name: str | None = None

    def __post_init__(self):
        if (self.value is None) == (self.name is None):
            raise ValueError("Const needs exactly one of value, name")

    def enclosure(self) -> Interval:
        if self.value is not None:
            return Interval.from_fraction(self.value)
        return constant_enclosure(self.name)

    def mp(self):
        if self.value is not None:
            return mpmath.mpf(self.value.numerator) / self.value.denominator
        return constant_mp(self.name)


@dataclass(frozen=True, repr=False)
class Var(Expr):
    pass


@dataclass(frozen=True, repr=False)
class Add(Expr):
    a: Expr
    b: Expr


@dataclass(frozen=True, repr=False)
class Sub(Expr):
    a: Expr
    b: Expr


@dataclass(frozen=True, repr=False)
class Mul(Expr):
    a: Expr
    b: Expr


@dataclass(frozen=True, repr=False)
class Div(Expr):
    a: Expr
    b: Expr


@dataclass(frozen=True, repr=False)
class Neg(Expr):
    a: Expr


@dataclass(frozen=True, repr=False)
class PowInt(Expr):
    base: Expr
    n: int


@dataclass(frozen=True, repr=False)
class PowConst(Expr):
    """base ** c for a constant real exponent; base must stay positive."""

    base: Expr
    expo: Expr  # constant-only subtree

    def __post_init__(self):
        if not is_constant(self.expo):
            raise ValueError("PowConst exponent must be a constant expression")


@dataclass(frozen=True, repr=False)
class Fn(Expr):
    fn: str
    arg: Expr

    def __post_init__(self):
        if self.fn not in FN_NAMES:
            raise ValueError(f"unknown function {self.fn!r}")


@dataclass(frozen=True, repr=False)
class Prim(Expr):
    fn: str
    arg: Expr

    def __post_init__(self):
        if self.fn not in PRIM_NAMES:
            raise ValueError(f"unknown primitive {self.fn!r}")


def is_constant(e: Expr) -> bool:
    if isinstance(e, Const):
        return True
    if isinstance(e, Var):
        return False
    if isinstance(e, (Add, Sub, Mul, Div)):
        return is_constant(e.a) and is_constant(e.b)
    if isinstance(e, Neg):
        return is_constant(e.a)
    if isinstance(e, PowInt):
        return is_constant(e.base)
    if isinstance(e, PowConst):
        return is_constant(e.base)
    if isinstance(e, (Fn, Prim)):
        return is_constant(e.arg)
    raise TypeError(f"unknown node {e!r}")


# -- printing -------------------------------------------------------------

_PREC_ADD, _PREC_MUL, _PREC_NEG, _PREC_POW, _PREC_ATOM = 1, 2, 3, 4, 5


def _fmt(e: Expr) -> tuple[str, int]:
    if isinstance(e, Const):
        if e.name is not None:
            return e.name, _PREC_ATOM
        v = e.value
        if v.denominator == 1:
            return (str(v), _PREC_ATOM) if v >= 0 else (f"-{-v}", _PREC_NEG)
        # "p/q" reparses at term level, so both signs carry Mul precedence
        s = f"{v.numerator}/{v.denominator}" if v >= 0 else f"-{-v.numerator}/{v.denominator}"
        return s, _PREC_MUL
    if isinstance(e, Var):
        return "x", _PREC_ATOM
    if isinstance(e, Add):
        return f"{_wrap(e.a, _PREC_ADD)} + {_wrap(e.b, _PREC_ADD + 1)}", _PREC_ADD
    if isinstance(e, Sub):
        return f"{_wrap(e.a, _PREC_ADD)} - {_wrap(e.b, _PREC_ADD + 1)}", _PREC_ADD
    if isinstance(e, Mul):
        return f"{_wrap(e.a, _PREC_MUL)}*{_wrap(e.b, _PREC_MUL + 1)}", _PREC_MUL
    if isinstance(e, Div):
        return f"{_wrap(e.a, _PREC_MUL)}/{_wrap(e.b, _PREC_MUL + 1)}", _PREC_MUL
    if isinstance(e, Neg):
        return f"-{_wrap(e.a, _PREC_NEG)}", _PREC_NEG
    if isinstance(e, PowInt):
        expo = str(e.n) if e.n >= 0 else f"({e.n})"
        return f"{_wrap(e.base, _PREC_POW + 1)}^{expo}", _PREC_POW
    if isinstance(e, PowConst):
        return f"{_wrap(e.base, _PREC_POW + 1)}^{_wrap_pow_expo(e.expo)}", _PREC_POW
    if isinstance(e, (Fn, Prim)):
        return f"{e.fn}({print_expr(e.arg)})", _PREC_ATOM
    raise TypeError(f"unknown node {e!r}")


def _wrap_pow_expo(e: Expr) -> str:
    s, prec = _fmt(e)
    if isinstance(e, Const) and e.name is not None:
        return s
    if isinstance(e, Const) and e.value is not None and e.value.denominator == 1 and e.value >= 0:
        return s
    return f"({s})"


def _wrap(e: Expr, min_prec: int) -> str:
    s, prec = _fmt(e)
    return s if prec >= min_prec else f"({s})"


def print_expr(e: Expr) -> str:
    return _fmt(e)[0]


# -- interval evaluation --------------------------------------------------


def eval_interval(e: Expr, x: Interval) -> Interval:
    # derivative trees share subtrees heavily; memo by node identity is
    # valid because x is fixed for the whole walk
    try:
        return _ev(e, x, {})
    except EvalError:
        raise
    except IntervalError as exc:
        raise EvalError(str(exc), e) from exc


def _ev(e: Expr, x: Interval, memo: dict) -> Interval:
    key = id(e)
    hit = memo.get(key)
    if hit is not None:
        return hit
    r = _ev_raw(e, x, memo)
    memo[key] = r
    return r


def _ev_raw(e: Expr, x: Interval, memo: dict) -> Interval:
    if isinstance(e, Const):
        return e.enclosure()
    if isinstance(e, Var):
        return x
    if isinstance(e, Add):
        return _ev(e.a, x, memo) + _ev(e.b, x, memo)
    if isinstance(e, Sub):
        return _ev(e.a, x, memo) - _ev(e.b, x, memo)
    if isinstance(e, Mul):
        return _ev(e.a, x, memo) * _ev(e.b, x, memo)
    if isinstance(e, Div):
        num = _ev(e.a, x, memo)
        den = _ev(e.b, x, memo)
        try:
            return num / den
        except PoleError as exc:
            raise EvalError(str(exc), e) from exc
    if isinstance(e, Neg):
        return -_ev(e.a, x, memo)
    if isinstance(e, PowInt):
        try:
            return _ev(e.base, x, memo).pow_int(e.n)
        except PoleError as exc:
            raise EvalError(str(exc), e) from exc
    if isinstance(e, PowConst):
        base = _ev(e.base, x, memo)
        if base.lo <= 0.0:
            raise EvalError(
                f"power base must be provably positive, enclosure is {base}", e
            )
        c = _ev(e.expo, x, memo)
        return elem("exp", c * elem("log", base))
    if isinstance(e, Fn):
        try:
            return elem(e.fn, _ev(e.arg, x, memo))
        except DomainError as exc:
            raise EvalError(str(exc), e) from exc
    if isinstance(e, Prim):
        try:
            return eval_prim(e.fn, _ev(e.arg, x, memo))
        except (DomainError, PoleError) as exc:
            raise EvalError(str(exc), e) from exc
    raise TypeError(f"unknown node {e!r}")


# -- high-precision point evaluation --------------------------------------

_MP_FN = {
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


def eval_point(e: Expr, x, dps: int = 30):
    """Evaluate at a point with mpmath (>= 50 correct bits for catalog use)."""
    with mpmath.workdps(dps):
        return _evp(e, mpmath.mpf(x) + 0)


def _evp(e: Expr, x):
    if isinstance(e, Const):
        return e.mp()
    if isinstance(e, Var):
        return x
    if isinstance(e, Add):
        return _evp(e.a, x) + _evp(e.b, x)
    if isinstance(e, Sub):
        return _evp(e.a, x) - _evp(e.b, x)
    if isinstance(e, Mul):
        return _evp(e.a, x) * _evp(e.b, x)
    if isinstance(e, Div):
        return _evp(e.a, x) / _evp(e.b, x)
    if isinstance(e, Neg):
        return -_evp(e.a, x)
    if isinstance(e, PowInt):
        return _evp(e.base, x) ** e.n
    if isinstance(e, PowConst):
        return _evp(e.base, x) ** _evp(e.expo, x)
    if isinstance(e, Fn):
        return _MP_FN[e.fn](_evp(e.arg, x))
    if isinstance(e, Prim):
        return prim_mp(e.fn, _evp(e.arg, x))
    raise TypeError(f"unknown node {e!r}")


# -- vectorized evaluation -------------------------------------------------


def eval_numpy(e: Expr, xs):
    """Vectorized float evaluation for scans (not containment-checked)."""
    import numpy as np

    xs = np.asarray(xs, dtype=float)

    def rec(n: Expr):
        if isinstance(n, Const):
            enc = n.enclosure()
            return np.full_like(xs, enc.mid)
        if isinstance(n, Var):
            return xs
        if isinstance(n, Add):
            return rec(n.a) + rec(n.b)
        if isinstance(n, Sub):
            return rec(n.a) - rec(n.b)
        if isinstance(n, Mul):
            return rec(n.a) * rec(n.b)
        if isinstance(n, Div):
            return rec(n.a) / rec(n.b)
        if isinstance(n, Neg):
            return -rec(n.a)
        if isinstance(n, PowInt):
            return rec(n.base) ** n.n
        if isinstance(n, PowConst):
            return rec(n.base) ** rec(n.expo)
        if isinstance(n, Fn):
            if n.fn == "abs":
                return np.abs(rec(n.arg))
            return getattr(np, n.fn)(rec(n.arg))
        if isinstance(n, Prim):
            return prim_np(n.fn, rec(n.arg))
        raise TypeError(f"unknown node {n!r}")

    with np.errstate(divide="ignore", invalid="ignore"):
        return rec(e)


# -- differentiation -------------------------------------------------------

_ZERO = Const(value=Fraction(0))
_ONE = Const(value=Fraction(1))


def _is_const_val(e: Expr, v: int) -> bool:
    return isinstance(e, Const) and e.value is not None and e.value == v


def _add(a: Expr, b: Expr) -> Expr:
    if _is_const_val(a, 0):
        return b
    if _is_const_val(b, 0):
        return a
    return Add(a, b)


def _sub(a: Expr, b: Expr) -> Expr:
    if _is_const_val(b, 0):
        return a
    if _is_const_val(a, 0):
        return Neg(b)
    return Sub(a, b)


def _mul(a: Expr, b: Expr) -> Expr:
    if _is_const_val(a, 0) or _is_const_val(b, 0):
        return _ZERO
    if _is_const_val(a, 1):
        return b
    if _is_const_val(b, 1):
        return a
    return Mul(a, b)


_FN_DERIV = {
    "sin": lambda u: Fn("cos", u),
    "cos": lambda u: Neg(Fn("sin", u)),
    "sinh": lambda u: Fn("cosh", u),
    "cosh": lambda u: Fn("sinh", u),
    "tanh": lambda u: Sub(_ONE, PowInt(Fn("tanh", u), 2)),
    "exp": lambda u: Fn("exp", u),
}


def differentiate(e: Expr) -> Expr:
    """Symbolic derivative whose interval evaluation encloses the true one."""
    if isinstance(e, Const) or is_constant(e):
        return _ZERO
    if isinstance(e, Var):
        return _ONE
    if isinstance(e, Add):
        return _add(differentiate(e.a), differentiate(e.b))
    if isinstance(e, Sub):
        return _sub(differentiate(e.a), differentiate(e.b))
    if isinstance(e, Mul):
        return _add(_mul(differentiate(e.a), e.b), _mul(e.a, differentiate(e.b)))
    if isinstance(e, Div):
        num = _sub(_mul(differentiate(e.a), e.b), _mul(e.a, differentiate(e.b)))
        return Div(num, PowInt(e.b, 2))
    if isinstance(e, Neg):
        return Neg(differentiate(e.a))
    if isinstance(e, PowInt):
        if e.n == 0:
            return _ZERO
        du = differentiate(e.base)
        factor = Const(value=Fraction(e.n))
        if e.n == 1:
            return _mul(factor, du)
        return _mul(_mul(factor, PowInt(e.base, e.n - 1)), du)
    if isinstance(e, PowConst):
        du = differentiate(e.base)
        lowered = PowConst(e.base, Sub(e.expo, _ONE))
        return _mul(_mul(e.expo, lowered), du)
    if isinstance(e, Fn):
        if e.fn == "log":
            return Div(differentiate(e.arg), e.arg)
        if e.fn == "sqrt":
            num = differentiate(e.arg)
            return Div(num, Mul(Const(value=Fraction(2)), Fn("sqrt", e.arg)))
        if e.fn == "abs":
            raise UnsupportedError("abs is not differentiable across 0")
        outer = _FN_DERIV[e.fn](e.arg)
        return _mul(outer, differentiate(e.arg))
    if isinstance(e, Prim):
        du = differentiate(e.arg)
        if e.fn in DERIV_OF_PRIM:
            return _mul(Prim(DERIV_OF_PRIM[e.fn], e.arg), du)
        return _mul(_dkernel_derivative(e.fn, e.arg), du)
    raise TypeError(f"unknown node {e!r}")


def _dkernel_derivative(fn: str, u: Expr) -> Expr:
    """Derivative of an odd derivative kernel, as a quotient expression.

    These forms contain a visible division by the argument, so they are only
    evaluable on intervals bounded away from 0; the toolkit never needs
    second derivatives at the origin.
    """
    two = Const(value=Fraction(2))
    if fn == "dsinc":
        # (cos u - sinc u)/u differentiated
        num = Sub(Mul(Sub(Neg(Fn("sin", u)), Prim("dsinc", u)), u), Sub(Fn("cos", u), Prim("sinc", u)))
        return Div(num, PowInt(u, 2))
    if fn == "dsinhc":
        num = Sub(Mul(Sub(Fn("sinh", u), Prim("dsinhc", u)), u), Sub(Fn("cosh", u), Prim("sinhc", u)))
        return Div(num, PowInt(u, 2))
    if fn == "dxcot":
        num = Sub(
            Mul(Sub(Prim("dxcot", u), Prim("dinv_sinc2", u)), u),
            Sub(Prim("xcot", u), Prim("inv_sinc2", u)),
        )
        return Div(num, PowInt(u, 2))
    if fn == "dxcoth":
        num = Sub(
            Mul(Sub(Prim("dxcoth", u), Prim("dinv_sinhc2", u)), u),
            Sub(Prim("xcoth", u), Prim("inv_sinhc2", u)),
        )
        return Div(num, PowInt(u, 2))
    if fn == "dinv_sinc2":
        # 2 * inv_sinc2(u) * (1 - xcot(u)) / u differentiated via product rule
        g = Mul(Mul(two, Prim("inv_sinc2", u)), Sub(_ONE, Prim("xcot", u)))
        dg = _add(
            Mul(Mul(two, Prim("dinv_sinc2", u)), Sub(_ONE, Prim("xcot", u))),
            Mul(Mul(two, Prim("inv_sinc2", u)), Neg(Prim("dxcot", u))),
        )
        return Div(Sub(Mul(dg, u), g), PowInt(u, 2))
    if fn == "dinv_sinhc2":
        g = Mul(Mul(two, Prim("inv_sinhc2", u)), Sub(_ONE, Prim("xcoth", u)))
        dg = _add(
            Mul(Mul(two, Prim("dinv_sinhc2", u)), Sub(_ONE, Prim("xcoth", u))),
            Mul(Mul(two, Prim("inv_sinhc2", u)), Neg(Prim("dxcoth", u))),
        )
        return Div(Sub(Mul(dg, u), g), PowInt(u, 2))
    raise UnsupportedError(f"no derivative rule for {fn!r}")
