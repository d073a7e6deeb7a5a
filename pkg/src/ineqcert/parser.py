"""Recursive-descent parser for expressions and inequality statements.

Grammar (standard precedence, ^ binds tightest and is right-associative):

    expr      := term (('+' | '-') term)*
    term      := unary (('*' | '/') unary)*
    unary     := '-' unary | power
    power     := atom ('^' unary)?
    atom      := NUMBER | IDENT | IDENT '(' expr ')' | '(' expr ')'

    statement := expr REL expr 'on' '[' cexpr ',' cexpr ']'
                 ('sharp' 'at' '{' cexpr (',' cexpr)* '}')?
    REL       := '<' | '<=' | '>' | '>='

NUMBER covers integers and decimals (parsed exactly as rationals);
rationals ``p/q`` arrive through the '/' operator and constant folding.
Domain endpoints and sharpness points are constant expressions, typically
in pi.  Syntax errors report the byte offset and the expected token set.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .constants import CONSTANT_NAMES
from .expr import (
    Add,
    Const,
    Div,
    Expr,
    Fn,
    FN_NAMES,
    Mul,
    Neg,
    PowConst,
    PowInt,
    Prim,
    Sub,
    Var,
    eval_interval,
    is_constant,
    print_expr,
)
from .intervals import Interval
from .primitives import PRIM_NAMES

__all__ = [
    "ParseError",
    "InequalityStmt",
    "parse_expr",
    "parse_inequality",
    "print_stmt",
]

_RELATIONS = ("<=", ">=", "<", ">")


class ParseError(ValueError):
    def __init__(self, message: str, offset: int, expected: tuple[str, ...] = ()):
        self.offset = offset
        self.expected = expected
        detail = f" (expected one of: {', '.join(expected)})" if expected else ""
        super().__init__(f"{message} at offset {offset}{detail}")


@dataclass(frozen=True)
class ConstPoint:
    """A constant expression with its certified enclosure (domain ends, sharp points)."""

    expr: Expr
    enclosure: Interval

    @property
    def value(self) -> float:
        return self.enclosure.mid


@dataclass(frozen=True)
class InequalityStmt:
    lhs: Expr
    rhs: Expr
    relation: str  # one of <, <=, >, >=
    lo: ConstPoint
    hi: ConstPoint
    sharpness: tuple[ConstPoint, ...] = field(default_factory=tuple)

    def difference(self) -> Expr:
        """The expression whose nonnegativity is the claim (rhs-lhs or lhs-rhs)."""
        if self.relation in ("<", "<="):
            return Sub(self.rhs, self.lhs)
        return Sub(self.lhs, self.rhs)


# -- tokenizer -------------------------------------------------------------

_PUNCT = ("<=", ">=", "<", ">", "+", "-", "*", "/", "^", "(", ")", "[", "]", "{", "}", ",")


@dataclass
class _Token:
    kind: str  # "num" | "ident" | punctuation literal | "end"
    text: str
    pos: int
    value: Fraction | None = None


def _tokenize(text: str) -> list[_Token]:
    toks: list[_Token] = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        matched = False
        for p in _PUNCT:
            if text.startswith(p, i):
                toks.append(_Token(p, p, i))
                i += len(p)
                matched = True
                break
        if matched:
            continue
        if ch.isdigit() or (ch == "." and i + 1 < n and text[i + 1].isdigit()):
            j = i
            while j < n and text[j].isdigit():
                j += 1
            if j < n and text[j] == ".":
                j += 1
                while j < n and text[j].isdigit():
                    j += 1
            lit = text[i:j]
            if lit.endswith("."):
                raise ParseError(f"malformed number {lit!r}", i, ("digit",))
            toks.append(_Token("num", lit, i, value=Fraction(lit)))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            toks.append(_Token("ident", text[i:j], i))
            i = j
            continue
        raise ParseError(f"unexpected character {ch!r}", i)
    toks.append(_Token("end", "", n))
    return toks


# -- parser -----------------------------------------------------------------


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    @property
    def cur(self) -> _Token:
        return self.toks[self.i]

    def advance(self) -> _Token:
        t = self.cur
        self.i += 1
        return t

    def expect(self, kind: str) -> _Token:
        if self.cur.kind != kind:
            raise ParseError(f"unexpected token {self.cur.text or 'end of input'!r}", self.cur.pos, (kind,))
        return self.advance()

    def accept(self, kind: str) -> bool:
        if self.cur.kind == kind:
            self.advance()
            return True
        return False

    # expression grammar

    def expr(self) -> Expr:
        e = self.term()
        while self.cur.kind in ("+", "-"):
            op = self.advance().kind
            rhs = self.term()
            e = Add(e, rhs) if op == "+" else Sub(e, rhs)
        return e

    def term(self) -> Expr:
        e = self.unary()
        while self.cur.kind in ("*", "/"):
            op = self.advance().kind
            rhs = self.unary()
            if op == "*":
                e = Mul(e, rhs)
            else:
                e = _fold_div(e, rhs)
        return e

    def unary(self) -> Expr:
        if self.accept("-"):
            return _fold_neg(self.unary())
        return self.power()

    def power(self) -> Expr:
        base = self.atom()
        if self.accept("^"):
            expo = self.unary()
            return _make_power(base, expo, self.cur.pos)
        return base

    def atom(self) -> Expr:
        t = self.cur
        if t.kind == "num":
            self.advance()
            return Const(value=t.value)
        if t.kind == "ident":
            self.advance()
            name = t.text
            if self.accept("("):
                arg = self.expr()
                self.expect(")")
                if name in FN_NAMES:
                    return Fn(name, arg)
                if name in PRIM_NAMES:
                    return Prim(name, arg)
                raise ParseError(
                    f"unknown function {name!r}", t.pos, FN_NAMES + PRIM_NAMES
                )
            if name == "x":
                return Var()
            if name in CONSTANT_NAMES:
                return Const(name=name)
            raise ParseError(
                f"unknown identifier {name!r}", t.pos, ("x",) + CONSTANT_NAMES
            )
        if t.kind == "(":
            self.advance()
            e = self.expr()
            self.expect(")")
            return e
        raise ParseError(
            f"unexpected token {t.text or 'end of input'!r}",
            t.pos,
            ("number", "identifier", "("),
        )


def _fold_div(a: Expr, b: Expr) -> Expr:
    if (
        isinstance(a, Const)
        and a.value is not None
        and isinstance(b, Const)
        and b.value is not None
        and b.value != 0
    ):
        return Const(value=a.value / b.value)
    return Div(a, b)


def _fold_neg(a: Expr) -> Expr:
    if isinstance(a, Const) and a.value is not None:
        return Const(value=-a.value)
    return Neg(a)


def _make_power(base: Expr, expo: Expr, pos: int) -> Expr:
    if isinstance(expo, Const) and expo.value is not None and expo.value.denominator == 1:
        return PowInt(base, int(expo.value))
    if not is_constant(expo):
        raise ParseError("exponent must be a constant expression", pos)
    return PowConst(base, expo)


def parse_expr(text: str) -> Expr:
    """Parse a single expression; round-trips with print_expr."""
    p = _Parser(text)
    e = p.expr()
    if p.cur.kind != "end":
        raise ParseError(f"trailing input {p.cur.text!r}", p.cur.pos, ("end of input",))
    return e


def _const_point(p: _Parser) -> ConstPoint:
    start = p.cur.pos
    e = p.expr()
    if not is_constant(e):
        raise ParseError("expected a constant expression", start)
    return ConstPoint(e, eval_interval(e, Interval(0.0, 0.0)))


def parse_inequality(text: str) -> InequalityStmt:
    """Parse ``<expr> REL <expr> on [a, b] (sharp at {p1, ...})?``."""
    p = _Parser(text)
    lhs = p.expr()
    if p.cur.kind not in _RELATIONS:
        raise ParseError(
            f"expected a relation, got {p.cur.text or 'end of input'!r}",
            p.cur.pos,
            _RELATIONS,
        )
    relation = p.advance().kind
    rhs = p.expr()
    kw = p.expect("ident")
    if kw.text != "on":
        raise ParseError(f"expected 'on', got {kw.text!r}", kw.pos, ("on",))
    p.expect("[")
    lo = _const_point(p)
    p.expect(",")
    hi = _const_point(p)
    p.expect("]")
    sharpness: list[ConstPoint] = []
    if p.cur.kind == "ident" and p.cur.text == "sharp":
        p.advance()
        at = p.expect("ident")
        if at.text != "at":
            raise ParseError(f"expected 'at', got {at.text!r}", at.pos, ("at",))
        p.expect("{")
        sharpness.append(_const_point(p))
        while p.accept(","):
            sharpness.append(_const_point(p))
        p.expect("}")
    if p.cur.kind != "end":
        raise ParseError(f"trailing input {p.cur.text!r}", p.cur.pos, ("end of input",))
    if not lo.enclosure.hi < hi.enclosure.lo:
        raise ParseError(
            f"empty or inverted domain [{print_expr(lo.expr)}, {print_expr(hi.expr)}]",
            0,
        )
    for s in sharpness:
        if s.enclosure.hi < lo.enclosure.lo or s.enclosure.lo > hi.enclosure.hi:
            raise ParseError(
                f"sharpness point {print_expr(s.expr)} outside the domain", 0
            )
    return InequalityStmt(lhs, rhs, relation, lo, hi, tuple(sharpness))


def print_stmt(stmt: InequalityStmt) -> str:
    parts = [
        print_expr(stmt.lhs),
        stmt.relation,
        print_expr(stmt.rhs),
        "on",
        f"[{print_expr(stmt.lo.expr)}, {print_expr(stmt.hi.expr)}]",
    ]
    if stmt.sharpness:
        pts = ", ".join(print_expr(s.expr) for s in stmt.sharpness)
        parts.append(f"sharp at {{{pts}}}")
    return " ".join(parts)
