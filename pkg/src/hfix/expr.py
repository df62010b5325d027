"""Parse and print one-variable complex polynomial/rational expressions.

Grammar (whitespace insignificant)::

    expr   := term (("+"|"-") term)*
    term   := factor (("*"|"/") factor)*
    factor := ("-")? base ("^" uint)*
    base   := "z" | "i" | number | "(" expr ")"
    number := digits ("." digits)? ("i")?

A number written directly before ``i`` (``0.5i``) is an imaginary literal;
otherwise juxtaposition is rejected (``2z`` is an error). Division by an
expression containing ``z`` is allowed once, as the outermost operation.
"""

from dataclasses import dataclass

import numpy as np

from .errors import ParseError, ScaleError
from .poly import Polynomial, RationalMap

MAX_DEGREE = 1024

_NUM, _Z, _I, _OP, _LP, _RP, _END = "number", "z", "i", "op", "(", ")", "end"


@dataclass(frozen=True)
class _Tok:
    kind: str
    pos: int
    text: str = ""
    value: complex = 0j
    integral: bool = False


@dataclass(frozen=True)
class FunctionExpr:
    text: str
    kind: str  # "polynomial" or "rational"
    value: RationalMap


def _tokenize(data):
    toks = []
    i, n = 0, len(data)
    while i < n:
        ch = data[i]
        if ch in b" \t\r\n":
            i += 1
        elif 48 <= ch <= 57:
            start = i
            while i < n and 48 <= data[i] <= 57:
                i += 1
            integral = True
            if i < n and data[i] == 46:  # '.'
                i += 1
                if i >= n or not 48 <= data[i] <= 57:
                    raise ParseError("expected digits after '.'", i)
                while i < n and 48 <= data[i] <= 57:
                    i += 1
                integral = False
            text = data[start:i].decode("ascii")
            value = float(text)
            if not np.isfinite(value):
                raise ParseError("number out of range", start)
            if i < n and data[i] == 105:  # 'i'
                i += 1
                toks.append(_Tok(_NUM, start, text + "i", complex(0.0, value)))
            else:
                toks.append(_Tok(_NUM, start, text, complex(value), integral))
        elif ch == 122:
            toks.append(_Tok(_Z, i, "z"))
            i += 1
        elif ch == 105:
            toks.append(_Tok(_I, i, "i"))
            i += 1
        elif ch in b"+-*/^":
            toks.append(_Tok(_OP, i, chr(ch)))
            i += 1
        elif ch == 40:
            toks.append(_Tok(_LP, i, "("))
            i += 1
        elif ch == 41:
            toks.append(_Tok(_RP, i, ")"))
            i += 1
        else:
            raise ParseError(f"unexpected character {bytes([ch])!r}", i)
    toks.append(_Tok(_END, n))
    return toks


class _Value:
    """Polynomial, or the single permitted quotient ``num/den`` with z in den."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        self.num = num
        self.den = den

    @property
    def rational(self):
        return self.den is not None


class _Parser:
    def __init__(self, data):
        self.toks = _tokenize(data)
        self.k = 0

    @property
    def tok(self):
        return self.toks[self.k]

    def advance(self):
        t = self.toks[self.k]
        self.k += 1
        return t

    def parse(self):
        v = self.expr()
        t = self.tok
        if t.kind != _END:
            if t.kind in (_NUM, _Z, _I, _LP):
                raise ParseError("implicit multiplication is not supported; use '*'", t.pos)
            raise ParseError(f"unexpected {t.text!r}", t.pos)
        return v

    def _no_quotient(self, v, pos):
        if v.rational:
            raise ParseError("a quotient by an expression in z must be the whole expression", pos)

    def _check_degree(self, p, pos):
        if p.degree > MAX_DEGREE:
            raise ParseError(f"degree exceeds {MAX_DEGREE}", pos)
        return p

    def expr(self):
        v = self.term()
        while self.tok.kind == _OP and self.tok.text in "+-":
            op = self.advance()
            self._no_quotient(v, op.pos)
            w = self.term()
            self._no_quotient(w, op.pos)
            v = _Value(v.num + w.num if op.text == "+" else v.num - w.num)
        return v

    def term(self):
        v = self.factor()
        while self.tok.kind == _OP and self.tok.text in "*/":
            op = self.advance()
            w = self.factor()
            if op.text == "*":
                self._no_quotient(v, op.pos)
                self._no_quotient(w, op.pos)
                v = _Value(self._check_degree(v.num * w.num, op.pos))
                continue
            self._no_quotient(v, op.pos)
            self._no_quotient(w, op.pos)
            if w.num.is_zero():
                raise ParseError("division by zero", op.pos)
            if w.num.degree == 0:
                v = _Value(v.num * (1.0 / w.num.lead))
            else:
                v = _Value(v.num, w.num)
        return v

    def factor(self):
        neg = None
        if self.tok.kind == _OP and self.tok.text == "-":
            neg = self.advance()
        v = self.base()
        while self.tok.kind == _OP and self.tok.text == "^":
            op = self.advance()
            e = self.tok
            if e.kind != _NUM or not e.integral:
                raise ParseError("exponent not a nonnegative integer", e.pos)
            self.advance()
            self._no_quotient(v, op.pos)
            k = int(e.text)
            if v.num.degree > 0 and k * v.num.degree > MAX_DEGREE:
                raise ParseError(f"degree exceeds {MAX_DEGREE}", e.pos)
            v = _Value(v.num ** k)
        if neg is not None:
            v = _Value(-v.num, v.den)
        return v

    def base(self):
        t = self.tok
        if t.kind == _Z:
            self.advance()
            return _Value(Polynomial([0.0, 1.0]))
        if t.kind == _I:
            self.advance()
            return _Value(Polynomial([1j]))
        if t.kind == _NUM:
            self.advance()
            return _Value(Polynomial([t.value]))
        if t.kind == _LP:
            self.advance()
            v = self.expr()
            if self.tok.kind != _RP:
                raise ParseError("expected ')'", self.tok.pos)
            self.advance()
            return v
        if t.kind == _END:
            raise ParseError("unexpected end of input", t.pos)
        raise ParseError(f"unexpected {t.text!r}", t.pos)


def parse_expression(text):
    """Parse ``text`` into a :class:`FunctionExpr`; raises ParseError."""
    if isinstance(text, bytes):
        data = text
        text = data.decode("utf-8", errors="replace")
    else:
        data = text.encode("utf-8", errors="surrogatepass")
    with np.errstate(over="ignore", invalid="ignore"):
        v = _Parser(data).parse()
    num = v.num
    den = v.den if v.rational else Polynomial([1.0])
    for p in (num, den):
        if not np.all(np.isfinite(p.coeffs)):
            raise ParseError("coefficient overflow", 0)
    try:
        value = RationalMap(num, den)
    except ScaleError:
        raise ParseError("coefficient overflow", 0) from None
    return FunctionExpr(text, "rational" if v.rational else "polynomial", value)


def parse_function(text):
    """Parse ``text`` into a :class:`RationalMap` (denominator ``[1]`` for polynomials)."""
    return parse_expression(text).value


def parse_complex(text):
    """Parse a constant such as ``"0.25"``, ``"1+2i"`` or ``"-0.5i"``."""
    m = parse_function(text)
    if m.degree != 0:
        raise ParseError("expected a constant, found an expression in z", 0)
    return m.num.lead / m.den.lead


def _fmt_real(x):
    return np.format_float_positional(float(x), unique=True, trim="-")


def format_complex(c):
    c = complex(c)
    sign = "-" if np.signbit(c.imag) else "+"
    return f"({_fmt_real(c.real)}{sign}{_fmt_real(abs(c.imag))}i)"


def format_polynomial(p):
    terms = []
    for k, c in enumerate(p.coeffs):
        if c == 0:
            continue
        coef = format_complex(c)
        if k == 0:
            terms.append(coef)
        elif k == 1:
            terms.append(f"{coef}*z")
        else:
            terms.append(f"{coef}*z^{k}")
    return " + ".join(terms) if terms else "(0+0i)"


def format_function(rmap):
    """Canonical text: ascending powers, explicit ``*``, coefficients as ``(a+bi)``."""
    if rmap.is_polynomial() and rmap.den.lead == 1:
        return format_polynomial(rmap.num)
    return f"({format_polynomial(rmap.num)}) / ({format_polynomial(rmap.den)})"
