"""A small expression language for series summands and limit sequences.

    expr      := term (('+' | '-') term)*
    term      := factor ('*' factor)*
    factor    := rational | 'u' | 'n' | '(' expr ')' | factor '^' exponent
               | '(-1)' '^' '(' var ['-' '1'] ')'
               | rational '^' var
               | ('sin' | 'cos') '(' linarg ')'
               | 'binom' '(' int ',' var ')'
    linarg    := [int ['*']] var [('+'|'-') rational] ['*'] 'theta'  |  rational
    rational  := int ['/' positive-int]

'u' indexes a series, 'n' a limit.  '^' binds tighter than '*', unary minus
is allowed before a factor, and there is no implicit multiplication.  Besides
the grammar above, the parser accepts a parenthesized linear argument such as
sin((2*u-1)*theta), which is also what the renderer emits, and a shifted
exponent such as 2^(u-1).

Parsing produces an AST, the AST is expanded into a normal form (polynomial
coefficients keyed by the non-polynomial factors present), and the normal
form is classified into the narrowest summation or limit class.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple, Union

from . import limits as L
from . import series as S
from .errors import ExprSyntaxError, InvalidArgument, LexError, UnsupportedClass
from .exact import ext_binomial, format_rational
from .poly import Polynomial, X

MAX_INT_DIGITS = 40
MAX_EXPONENT = 64
MAX_DEGREE = 200


# ---------------------------------------------------------------------- lexer


class TokenKind(str, enum.Enum):
    INT = "Int"
    SLASH = "Slash"
    CARET = "Caret"
    STAR = "Star"
    PLUS = "Plus"
    MINUS = "Minus"
    LPAREN = "LParen"
    RPAREN = "RParen"
    COMMA = "Comma"
    IDENT = "Ident"
    END = "End"


@dataclass(frozen=True)
class Token:
    kind: TokenKind
    text: str
    position: int


_SINGLE = {
    "/": TokenKind.SLASH, "^": TokenKind.CARET, "*": TokenKind.STAR, "+": TokenKind.PLUS,
    "-": TokenKind.MINUS, "(": TokenKind.LPAREN, ")": TokenKind.RPAREN, ",": TokenKind.COMMA,
}


def tokenize(text: str) -> List[Token]:
    out: List[Token] = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch in "0123456789":
            j = i
            while j < n and text[j] in "0123456789":
                j += 1
            if j - i > MAX_INT_DIGITS:
                raise LexError(f"integer literal longer than {MAX_INT_DIGITS} digits", i)
            out.append(Token(TokenKind.INT, text[i:j], i))
            i = j
        elif ch.isascii() and ch.isalpha():
            j = i
            while j < n and text[j].isascii() and text[j].isalpha():
                j += 1
            out.append(Token(TokenKind.IDENT, text[i:j], i))
            i = j
        elif ch in _SINGLE:
            out.append(Token(_SINGLE[ch], ch, i))
            i += 1
        else:
            raise LexError(f"unexpected character {ch!r}", i)
    out.append(Token(TokenKind.END, "", n))
    return out


# ------------------------------------------------------------------------ AST


@dataclass(frozen=True)
class Num:
    value: Fraction
    pos: int


@dataclass(frozen=True)
class Var:
    name: str
    pos: int


@dataclass(frozen=True)
class Neg:
    arg: "Node"
    pos: int


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Node"
    right: "Node"
    pos: int


@dataclass(frozen=True)
class Pow:
    base: "Node"
    exponent: int
    pos: int


@dataclass(frozen=True)
class ExpOf:
    """scalar * base^var."""

    base: Fraction
    var: str
    scalar: Fraction
    pos: int


@dataclass(frozen=True)
class Trig:
    """func((a*var + b) * theta), or func(b) when has_theta is false."""

    func: str
    a: int
    b: Fraction
    has_theta: bool
    var: Optional[str]
    pos: int


@dataclass(frozen=True)
class Binom:
    top: int
    var: str
    pos: int


Node = Union[Num, Var, Neg, BinOp, Pow, ExpOf, Trig, Binom]

VARS = ("u", "n")


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.i = 0
        self.vars: Dict[str, int] = {}

    def peek(self, offset: int = 0) -> Token:
        return self.tokens[min(self.i + offset, len(self.tokens) - 1)]

    def take(self) -> Token:
        tok = self.peek()
        self.i += 1
        return tok

    def expect(self, kind: TokenKind, what: str) -> Token:
        tok = self.peek()
        if tok.kind is not kind:
            raise self.error(f"expected {what}", tok)
        return self.take()

    def error(self, message: str, tok: Optional[Token] = None) -> ExprSyntaxError:
        tok = tok or self.peek()
        if tok.kind is TokenKind.END:
            message = f"{message}, found end of input"
        else:
            message = f"{message}, found {tok.text!r}"
        return ExprSyntaxError(message, tok.position)

    def use_var(self, tok: Token) -> str:
        name = tok.text
        other = [v for v in self.vars if v != name]
        if other:
            raise ExprSyntaxError(f"cannot mix {other[0]} and {name} in one expression", tok.position)
        self.vars.setdefault(name, tok.position)
        return name

    def expect_var(self) -> str:
        tok = self.peek()
        if tok.kind is TokenKind.IDENT and tok.text in VARS:
            self.take()
            return self.use_var(tok)
        raise self.error("expected u or n", tok)

    # grammar

    def parse(self) -> Node:
        node = self.expr()
        if self.peek().kind is not TokenKind.END:
            raise self.error("expected an operator or end of input")
        return node

    def expr(self) -> Node:
        node = self.term()
        while self.peek().kind in (TokenKind.PLUS, TokenKind.MINUS):
            tok = self.take()
            node = BinOp(tok.text, node, self.term(), tok.position)
        return node

    def term(self) -> Node:
        node = self.unary()
        while self.peek().kind is TokenKind.STAR:
            tok = self.take()
            node = BinOp("*", node, self.unary(), tok.position)
        return node

    def unary(self) -> Node:
        if self.peek().kind is TokenKind.MINUS:
            tok = self.take()
            return Neg(self.unary(), tok.position)
        return self.postfix()

    def postfix(self) -> Node:
        node = self.primary()
        while self.peek().kind is TokenKind.CARET:
            caret = self.take()
            node = self.exponent(node, caret)
        return node

    def exponent(self, base: Node, caret: Token) -> Node:
        tok = self.peek()
        if tok.kind is TokenKind.INT:
            self.take()
            e = int(tok.text)
            if e > MAX_EXPONENT:
                raise ExprSyntaxError(f"exponent {e} exceeds the limit {MAX_EXPONENT}", tok.position)
            return Pow(base, e, caret.position)
        shift = 0
        if tok.kind is TokenKind.IDENT and tok.text in VARS:
            self.take()
            var = self.use_var(tok)
        elif tok.kind is TokenKind.LPAREN:
            self.take()
            var = self.expect_var()
            if self.peek().kind in (TokenKind.PLUS, TokenKind.MINUS):
                op = self.take()
                k = self.expect(TokenKind.INT, "an integer shift")
                shift = int(k.text) if op.kind is TokenKind.PLUS else -int(k.text)
                if abs(shift) > MAX_EXPONENT:
                    raise ExprSyntaxError("exponent shift too large", k.position)
            self.expect(TokenKind.RPAREN, "')'")
        else:
            raise self.error("expected an exponent", tok)
        c = constant_value(base)
        if c is None:
            raise ExprSyntaxError("only a constant can be raised to the power of the index", caret.position)
        if c == 0 and shift < 0:
            raise ExprSyntaxError("zero raised to a negative power", caret.position)
        return ExpOf(c, var, c**shift, _pos(base))

    def rational(self) -> Tuple[Fraction, int]:
        tok = self.expect(TokenKind.INT, "an integer")
        value = Fraction(int(tok.text))
        if self.peek().kind is TokenKind.SLASH:
            self.take()
            den = self.expect(TokenKind.INT, "a denominator")
            if int(den.text) == 0:
                raise ExprSyntaxError("zero denominator", den.position)
            value /= int(den.text)
        return value, tok.position

    def primary(self) -> Node:
        tok = self.peek()
        if tok.kind is TokenKind.INT:
            value, pos = self.rational()
            return Num(value, pos)
        if tok.kind is TokenKind.IDENT:
            if tok.text in VARS:
                self.take()
                return Var(self.use_var(tok), tok.position)
            if tok.text in ("sin", "cos"):
                self.take()
                return self.trig(tok)
            if tok.text == "binom":
                self.take()
                return self.binom(tok)
            if tok.text == "theta":
                raise ExprSyntaxError("theta may only appear inside sin(...) or cos(...)", tok.position)
            raise ExprSyntaxError(f"unknown identifier {tok.text!r}", tok.position)
        if tok.kind is TokenKind.LPAREN:
            self.take()
            node = self.expr()
            self.expect(TokenKind.RPAREN, "')'")
            return node
        raise self.error("expected a number, u, n, a function or '('", tok)

    def trig(self, name: Token) -> Node:
        self.expect(TokenKind.LPAREN, "'(' after " + name.text)
        tok = self.peek()
        if tok.kind is TokenKind.LPAREN:
            self.take()
            a, var, b = self.linear_core()
            self.expect(TokenKind.RPAREN, "')'")
            self.theta_suffix()
            node = Trig(name.text, a, b, True, var, name.position)
        elif tok.kind is TokenKind.INT and self.peek(1).kind in (TokenKind.RPAREN, TokenKind.SLASH):
            value, _ = self.rational()
            node = Trig(name.text, 0, value, False, None, name.position)
        else:
            a, var, b = self.linear_core()
            self.theta_suffix()
            node = Trig(name.text, a, b, True, var, name.position)
        self.expect(TokenKind.RPAREN, "')'")
        return node

    def linear_core(self) -> Tuple[int, str, Fraction]:
        a = 1
        if self.peek().kind is TokenKind.INT:
            tok = self.take()
            a = int(tok.text)
            if self.peek().kind is TokenKind.STAR:
                self.take()
        var = self.expect_var()
        b = Fraction(0)
        if self.peek().kind in (TokenKind.PLUS, TokenKind.MINUS):
            op = self.take()
            value, _ = self.rational()
            b = value if op.kind is TokenKind.PLUS else -value
        return a, var, b

    def theta_suffix(self) -> None:
        if self.peek().kind is TokenKind.STAR:
            self.take()
        tok = self.peek()
        if tok.kind is TokenKind.IDENT and tok.text == "theta":
            self.take()
            return
        raise self.error("expected theta", tok)

    def binom(self, name: Token) -> Node:
        self.expect(TokenKind.LPAREN, "'(' after binom")
        neg = False
        if self.peek().kind is TokenKind.MINUS:
            self.take()
            neg = True
        tok = self.expect(TokenKind.INT, "an integer")
        top = -int(tok.text) if neg else int(tok.text)
        self.expect(TokenKind.COMMA, "','")
        var = self.expect_var()
        self.expect(TokenKind.RPAREN, "')'")
        return Binom(top, var, name.position)


def _pos(node: Node) -> int:
    return node.pos


def constant_value(node: Node) -> Optional[Fraction]:
    if isinstance(node, Num):
        return node.value
    if isinstance(node, Neg):
        c = constant_value(node.arg)
        return None if c is None else -c
    if isinstance(node, BinOp):
        left, right = constant_value(node.left), constant_value(node.right)
        if left is None or right is None:
            return None
        return {"+": left + right, "-": left - right, "*": left * right}[node.op]
    if isinstance(node, Pow):
        c = constant_value(node.base)
        return None if c is None else c**node.exponent
    return None


def parse_ast(text: str) -> Tuple[Node, Optional[str]]:
    p = _Parser(text)
    node = p.parse()
    var = next(iter(p.vars), None)
    return node, var


def evaluate(node: Node, x: int, theta: Optional[float] = None):
    """Direct evaluation of the AST at index value x (exact unless trig is involved)."""
    if isinstance(node, Num):
        return node.value
    if isinstance(node, Var):
        return Fraction(x)
    if isinstance(node, Neg):
        return -evaluate(node.arg, x, theta)
    if isinstance(node, BinOp):
        left, right = evaluate(node.left, x, theta), evaluate(node.right, x, theta)
        return left + right if node.op == "+" else left - right if node.op == "-" else left * right
    if isinstance(node, Pow):
        return evaluate(node.base, x, theta) ** node.exponent
    if isinstance(node, ExpOf):
        return node.scalar * node.base**x
    if isinstance(node, Trig):
        f = math.sin if node.func == "sin" else math.cos
        if not node.has_theta:
            return f(float(node.b))
        return f((node.a * x + float(node.b)) * theta)
    if isinstance(node, Binom):
        return ext_binomial(node.top, x)
    raise InvalidArgument(f"cannot evaluate {node!r}")


# ---------------------------------------------------------------- normal form

TrigAtom = Tuple[str, int, Fraction, bool]
Key = Tuple[int, Fraction, Tuple[Tuple[TrigAtom, int], ...], Optional[int]]
ONE_KEY: Key = (0, Fraction(1), (), None)


class _Normal:
    """Polynomial coefficients keyed by (alternating, geometric base, trig factors, binomial top)."""

    def __init__(self, terms: Optional[Dict[Key, Polynomial]] = None, where: Optional[dict] = None):
        self.terms = {k: v for k, v in (terms or {}).items() if not v.is_zero()}
        self.where = dict(where or {})

    @classmethod
    def const(cls, c, key: Key = ONE_KEY, where=None) -> "_Normal":
        return cls({key: Polynomial.constant(c)}, where)

    def _joined_where(self, other: "_Normal") -> dict:
        w = dict(other.where)
        w.update(self.where)
        return w

    def __add__(self, other: "_Normal") -> "_Normal":
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out[k] + v if k in out else v
        return _Normal(out, self._joined_where(other))

    def __neg__(self) -> "_Normal":
        return _Normal({k: -v for k, v in self.terms.items()}, self.where)

    def __sub__(self, other: "_Normal") -> "_Normal":
        return self + (-other)

    def __mul__(self, other: "_Normal") -> "_Normal":
        out: Dict[Key, Polynomial] = {}
        where = self._joined_where(other)
        for k1, v1 in self.terms.items():
            for k2, v2 in other.terms.items():
                if v1.degree + v2.degree > MAX_DEGREE:
                    raise ExprSyntaxError(f"expanded degree exceeds {MAX_DEGREE}", 0)
                k = _mul_key(k1, k2, where)
                prod = v1 * v2
                out[k] = out[k] + prod if k in out else prod
        return _Normal(out, where)

    def power(self, e: int) -> "_Normal":
        result = _Normal.const(1)
        for _ in range(e):
            result = result * self
        result.where = dict(self.where)
        return result


def _mul_key(a: Key, b: Key, where: dict) -> Key:
    if a[3] is not None and b[3] is not None:
        raise UnsupportedClass("no series class for a product of binomial coefficients",
                               where.get(("binom", b[3]), 0), "binom")
    trig: Dict[TrigAtom, int] = dict(a[2])
    for atom, e in b[2]:
        trig[atom] = trig.get(atom, 0) + e
    merged = tuple(sorted(trig.items(), key=lambda it: (it[0][0], it[0][1], it[0][2], it[0][3])))
    return ((a[0] + b[0]) % 2, a[1] * b[1], merged, a[3] if a[3] is not None else b[3])


def normalize(node: Node) -> _Normal:
    if isinstance(node, Num):
        return _Normal.const(node.value)
    if isinstance(node, Var):
        return _Normal({ONE_KEY: X})
    if isinstance(node, Neg):
        return -normalize(node.arg)
    if isinstance(node, BinOp):
        left, right = normalize(node.left), normalize(node.right)
        return left + right if node.op == "+" else left - right if node.op == "-" else left * right
    if isinstance(node, Pow):
        return normalize(node.base).power(node.exponent)
    if isinstance(node, ExpOf):
        g, c = node.base, node.scalar
        if g == 1:
            return _Normal.const(c)
        alt = 0
        if g < 0:
            alt, g = 1, -g
        if g == 1:
            return _Normal.const(c, (1, Fraction(1), (), None), {("alt",): node.pos})
        return _Normal.const(c, (alt, g, (), None), {("geo", g): node.pos})
    if isinstance(node, Trig):
        if node.a == 0 and node.b == 0:
            return _Normal.const(0 if node.func == "sin" else 1)
        atom: TrigAtom = (node.func, node.a, node.b, node.has_theta)
        return _Normal.const(1, (0, Fraction(1), ((atom, 1),), None), {atom: node.pos})
    if isinstance(node, Binom):
        return _Normal.const(1, (0, Fraction(1), (), node.top), {("binom", node.top): node.pos})
    raise InvalidArgument(f"cannot normalize {node!r}")


# ------------------------------------------------------------ classification


@dataclass(frozen=True)
class Sum:
    start: int = 1


@dataclass(frozen=True)
class Limit:
    pass


@dataclass(frozen=True)
class RangeSum:
    a: int
    b: int


Target = Union[Sum, Limit, RangeSum]


@dataclass(frozen=True)
class ParsedExpr:
    target: Target
    body: object
    source: str = field(default="", compare=False)
    ast: Optional[Node] = field(default=None, compare=False, repr=False)


def _atom_text(atom: TrigAtom) -> str:
    func, a, b, has_theta = atom
    if not has_theta:
        return f"{func}({format_rational(b)})"
    return f"{func}({_linarg(a, b, 'u')})"


def _unsupported(what: str, factor: str, normal: _Normal, where_key) -> UnsupportedClass:
    return UnsupportedClass(f"no {what} class for factor {factor}", normal.where.get(where_key, 0), factor)


def _odd_power(p: Polynomial) -> Optional[int]:
    d = p.degree
    if d >= 2 and p == Polynomial((-1, 2)) ** d:
        return d
    return None


def classify_polynomial(p: Polynomial):
    if p.degree <= 1:
        return S.ArithProg(p(1), p.coefficient(1))
    d = _odd_power(p)
    if d is not None:
        return S.OddPoly(d + 1)
    return S.PolyTerm(p)


def classify_alt_polynomial(p: Polynomial):
    """p multiplies (-1)^(u-1)."""
    if p.degree <= 1:
        return S.AltArithProg(p(1), p.coefficient(1))
    d = _odd_power(p)
    if d is not None:
        return S.AltOddPoly(d + 1)
    return S.AltPolyTerm(p)


def _monomial(p: Polynomial) -> Optional[Tuple[Fraction, int]]:
    nonzero = [(j, a) for j, a in enumerate(p.coefficients) if a]
    if len(nonzero) != 1:
        return None
    j, a = nonzero[0]
    return a, j


def _classify_series_key(key: Key, p: Polynomial, normal: _Normal, start: int):
    alt, geo, trig, top = key
    if top is not None:
        if trig:
            raise _unsupported("series", _atom_text(trig[0][0]), normal, trig[0][0])
        x = -geo if alt else geo
        if p.degree != 0:
            raise _unsupported("series", f"polynomial multiplier of binom({top},u)", normal, ("binom", top))
        try:
            return p.coefficient(0), S.Binomial(top, x)
        except InvalidArgument as exc:
            raise UnsupportedClass(str(exc), normal.where.get(("binom", top), 0), f"binom({top},u)") from exc
    if trig:
        return _classify_trig_series(key, p, normal)
    if geo != 1:
        if p.degree != 0:
            raise _unsupported("series", f"polynomial multiplier of {format_rational(geo)}^u", normal, ("geo", geo))
        g = -geo if alt else geo
        return Fraction(1), S.Geometric(p.coefficient(0), g, start if start in (0, 1) else 0)
    if alt:
        # (-1)^u p(u) = (-1)^(u-1) (-p(u))
        return Fraction(1), classify_alt_polynomial(-p)
    return Fraction(1), classify_polynomial(p)


def _classify_trig_series(key: Key, p: Polynomial, normal: _Normal):
    alt, geo, trig, _ = key
    atom, e = trig[0]
    factor = _atom_text(atom)
    if len(trig) > 1 or e != 1 or geo != 1 or not atom[3]:
        bad = trig[1][0] if len(trig) > 1 else atom
        raise _unsupported("series", _atom_text(bad) if e == 1 else f"{factor}^{e}", normal, bad)
    mono = _monomial(p)
    if mono is None:
        raise _unsupported("series", f"polynomial multiplier of {factor}", normal, atom)
    c, j = mono
    func, a, b, _ = atom
    # alternating keys carry (-1)^u = -(-1)^(u-1)
    if alt:
        c = -c
    if (a, b) == (1, 0):
        if func == "cos" and j == 0:
            return c, (S.AltTrigCosSeries() if alt else S.TrigCosSeries())
        if func == "sin" and j == 0 and not alt:
            return c, S.TrigSinSeries()
        if alt and func == "sin" and j % 2 == 1:
            return c, S.AltPolySin((j + 1) // 2)
        if alt and func == "cos" and j >= 2 and j % 2 == 0:
            return c, S.AltPolyCos(j // 2)
    if (func, a, b, j, alt) == ("sin", 2, -1, 0, 0):
        return c, S.OddTrigSinSeries()
    raise _unsupported("series", factor, normal, atom)


def _combine(items, combo):
    items = [(c, t) for c, t in items]
    if len(items) == 1 and items[0][0] == 1:
        return items[0][1]
    return combo(tuple(items))


def _key_order(key: Key):
    alt, geo, trig, top = key
    return (top is not None, top or 0, bool(trig), tuple((a[0], a[1], a[2], a[3], e) for a, e in trig), geo, alt)


def classify_series(normal: _Normal, start: int = 1):
    if not normal.terms:
        return S.ArithProg(0, 0)
    items = []
    for key in sorted(normal.terms, key=_key_order):
        items.append(_classify_series_key(key, normal.terms[key], normal, start))
    return _combine(items, S.Combo)


def classify_limit(normal: _Normal):
    if not normal.terms:
        return L.Poly(Polynomial())
    items = []
    for key in sorted(normal.terms, key=_key_order):
        alt, geo, trig, top = key
        p = normal.terms[key]
        if top is not None:
            raise _unsupported("limit", f"binom({top},n)", normal, ("binom", top))
        if geo != 1:
            raise _unsupported("limit", f"{format_rational(geo)}^n", normal, ("geo", geo))
        if not trig:
            items.append((Fraction(1), L.AltPoly(p) if alt else L.Poly(p)))
            continue
        atom, e = trig[0]
        func, a, b, has_theta = atom
        factor = _atom_text(atom).replace("u", "n")
        ok = len(trig) == 1 and has_theta and not alt and p.degree == 0 and a == 1
        if not ok:
            raise _unsupported("limit", factor, normal, atom)
        c = p.coefficient(0)
        if e == 1:
            items.append((c, L.TrigSin(b) if func == "sin" else L.TrigCos(b)))
        elif e == 2 and func == "sin" and b == 0:
            items.append((c, L.TrigSinSq()))
        else:
            raise _unsupported("limit", f"{factor}^{e}", normal, atom)
    return _combine(items, L.LinearCombo)


def parse(text: str, target: Optional[Union[Target, str]] = None) -> ParsedExpr:
    """Parse and classify.  The target defaults to a limit when the index is n, else a sum from 1."""
    node, var = parse_ast(text)
    if isinstance(target, str):
        target = {"sum": Sum(), "limit": Limit()}.get(target)
        if target is None:
            raise InvalidArgument("target must be 'sum' or 'limit'")
    if target is None:
        target = Limit() if var == "n" else Sum()
    want = "n" if isinstance(target, Limit) else "u"
    if var is not None and var != want:
        kind = "a limit" if want == "n" else "a sum"
        raise ExprSyntaxError(f"{kind} uses the index {want}, not {var}", _first_var_pos(node))
    normal = normalize(node)
    if isinstance(target, Limit):
        body = classify_limit(normal)
    elif isinstance(target, RangeSum):
        if set(normal.terms) - {ONE_KEY}:
            raise UnsupportedClass("range sums accept polynomial expressions only", 0, "non-polynomial factor")
        body = S.PolyTerm(normal.terms.get(ONE_KEY, Polynomial()))
    else:
        body = classify_series(normal, target.start)
    return ParsedExpr(target, body, text, node)


def _first_var_pos(node: Node) -> int:
    stack = [node]
    best = None
    while stack:
        cur = stack.pop()
        if isinstance(cur, (Var, Binom)) or (isinstance(cur, ExpOf)) or (isinstance(cur, Trig) and cur.var):
            best = cur.pos if best is None else min(best, cur.pos)
        for attr in ("arg", "left", "right", "base"):
            child = getattr(cur, attr, None)
            if isinstance(child, (Num, Var, Neg, BinOp, Pow, ExpOf, Trig, Binom)):
                stack.append(child)
    return best or 0


# ------------------------------------------------------------------ rendering


def _linarg(a: int, b: Fraction, var: str) -> str:
    head = var if a == 1 else f"{a}*{var}"
    if b == 0:
        return f"{head}*theta"
    op = "+" if b > 0 else "-"
    return f"({head}{op}{format_rational(abs(b))})*theta"


def _coef(c: Fraction) -> str:
    s = format_rational(c)
    return f"({s})" if c < 0 else s


def _geo_text(c: Fraction, g: Fraction) -> str:
    parts = []
    if g < 0:
        parts.append("(-1)^u")
    if abs(g) != 1:
        parts.append(f"{format_rational(abs(g))}^u")
    body = "*".join(parts) if parts else "1"
    if c == 1:
        return body
    return f"{_coef(c)}*{body}"


def render_series(t) -> str:
    if isinstance(t, S.AltOddPoly):
        return f"(-1)^(u-1)*(2*u-1)^{t.k - 1}"
    if isinstance(t, S.AltArithProg):
        return f"(-1)^(u-1)*({t.poly().render('u')})"
    if isinstance(t, S.ArithProg):
        return t.poly().render("u")
    if isinstance(t, S.OddPoly):
        return f"(2*u-1)^{t.k - 1}"
    if isinstance(t, (S.PolyTerm,)):
        return t.p.render("u")
    if isinstance(t, S.QuasiEvenPoly):
        return t.f.render("u")
    if isinstance(t, S.AltPolyTerm):
        return f"(-1)^(u-1)*({t.p.render('u')})"
    if isinstance(t, S.Geometric):
        return _geo_text(t.c, t.g)
    if isinstance(t, S.TrigCosSeries):
        return "cos(u*theta)"
    if isinstance(t, S.AltTrigCosSeries):
        return "(-1)^(u-1)*cos(u*theta)"
    if isinstance(t, S.TrigSinSeries):
        return "sin(u*theta)"
    if isinstance(t, S.OddTrigSinSeries):
        return "sin((2*u-1)*theta)"
    if isinstance(t, S.AltPolySin):
        return f"(-1)^(u-1)*u^{2 * t.k - 1}*sin(u*theta)"
    if isinstance(t, S.AltPolyCos):
        return f"(-1)^(u-1)*u^{2 * t.k}*cos(u*theta)"
    if isinstance(t, S.Binomial):
        head = f"binom({t.a},u)"
        if t.x == 1:
            return head
        return f"{head}*{_geo_text(Fraction(1), t.x)}"
    if isinstance(t, S.Combo):
        parts = [f"{_coef(c)}*({render_series(m)})" for c, m in t.items]
        return " + ".join(parts) if parts else "0"
    raise InvalidArgument(f"{type(t).__name__} has no expression syntax")


def render_function(e) -> str:
    return e.render()


def render(parsed: ParsedExpr) -> str:
    if isinstance(parsed.target, Limit):
        return render_function(parsed.body)
    return render_series(parsed.body)


def class_of(parsed: ParsedExpr) -> str:
    return type(parsed.body).__name__
