"""Text syntax for scalars, algebra elements and forms.

Grammar (juxtaposition is multiplication, ``^`` binds tightest)::

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor (factor | '*' factor | '/' factor)*
    factor := atom ('^' (['-'] int | eta))*
    atom   := int | 'q' | 'a' | 'as' | 'g' | 'gs' | 'em' | 'ep' | 'e3' | '(' expr ')'

``em^ep`` is read as the wedge ``em ep``, so rendered forms parse back.
Division is only allowed by nonzero scalars.
"""
from dataclasses import dataclass
import re

from qhyper.algebra import AlgElt, alpha, alpha_star, gamma, gamma_star
from qhyper.coeffs import ONE, QRat, qpow

__all__ = ["ParseError", "Expr", "tokenize", "parse", "evaluate", "parse_value", "parse_scalar", "parse_alg", "parse_form"]


class ParseError(ValueError):
    """Syntax or evaluation error, annotated with a character position."""

    def __init__(self, message, pos=None, text=None):
        self.pos = pos
        self.text = text
        if pos is not None:
            message = f"at position {pos}: {message}"
            if text is not None:
                message += f"\n  {text}\n  {' ' * pos}^"
        super().__init__(message)


_INT = re.compile(r"\d+")
_WORD = re.compile(r"[A-Za-z_]\w*")
NAMES = ("as", "gs", "em", "ep", "e3", "a", "g", "q")
ETA = ("em", "ep", "e3")
_OPS = "+-*/^()"


@dataclass(frozen=True)
class Token:
    kind: str  # "int", "name", "op", "end"
    text: str
    pos: int


def tokenize(text):
    out = []
    pos = 0
    while pos < len(text):
        ch = text[pos]
        if ch.isspace():
            pos += 1
            continue
        if ch in _OPS:
            out.append(Token("op", ch, pos))
            pos += 1
            continue
        m = _INT.match(text, pos) or _WORD.match(text, pos)
        if m is None:
            raise ParseError(f"unknown token {ch!r}", pos, text)
        word = m.group(0)
        if word.isdigit():
            out.append(Token("int", word, pos))
        elif word in NAMES:
            out.append(Token("name", word, pos))
        else:
            raise ParseError(f"unknown token {word!r}", pos, text)
        pos = m.end()
    if not out:
        raise ParseError("empty expression", 0, text)
    out.append(Token("end", "", len(text)))
    return out


@dataclass(frozen=True)
class Expr:
    """Syntax tree node: op in {'int', 'name', 'neg', '+', '-', '*', '/', '^'}."""

    op: str
    args: tuple
    pos: int = 0

    def render(self):
        if self.op in ("int", "name"):
            return str(self.args[0])
        if self.op == "neg":
            return f"(-{self.args[0].render()})"
        if self.op == "^":
            return f"{self.args[0].render()}^{self.args[1]}"
        return f"({self.args[0].render()} {self.op} {self.args[1].render()})"


class _Parser:
    def __init__(self, text):
        self.text = text
        self.toks = tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def fail(self, msg, tok=None):
        tok = tok or self.peek()
        raise ParseError(msg, tok.pos, self.text)

    def expect(self, text):
        tok = self.peek()
        if tok.kind != "op" or tok.text != text:
            self.fail(f"expected {text!r}, found {tok.text or 'end of input'!r}")
        return self.take()

    def parse(self):
        e = self.expr()
        if self.peek().kind != "end":
            self.fail(f"unexpected {self.peek().text!r}")
        return e

    def expr(self):
        tok = self.peek()
        if tok.kind == "op" and tok.text in "+-":
            self.take()
            e = self.term()
            if tok.text == "-":
                e = Expr("neg", (e,), tok.pos)
        else:
            e = self.term()
        while self.peek().kind == "op" and self.peek().text in "+-":
            op = self.take()
            e = Expr(op.text, (e, self.term()), op.pos)
        return e

    def _starts_factor(self, tok):
        return tok.kind in ("int", "name") or (tok.kind == "op" and tok.text == "(")

    def term(self):
        e = self.factor()
        while True:
            tok = self.peek()
            if tok.kind == "op" and tok.text in "*/":
                self.take()
                e = Expr(tok.text, (e, self.factor()), tok.pos)
            elif self._starts_factor(tok):
                e = Expr("*", (e, self.factor()), tok.pos)
            else:
                return e

    def factor(self):
        e = self.atom()
        while self.peek().kind == "op" and self.peek().text == "^":
            caret = self.take()
            tok = self.peek()
            if tok.kind == "name" and tok.text in ETA:
                self.take()
                e = Expr("*", (e, Expr("name", (tok.text,), tok.pos)), caret.pos)
                continue
            sign = 1
            if tok.kind == "op" and tok.text in "+-":
                self.take()
                sign = -1 if tok.text == "-" else 1
                tok = self.peek()
            if tok.kind != "int":
                self.fail("exponent must be an integer")
            self.take()
            e = Expr("^", (e, sign * int(tok.text)), caret.pos)
        return e

    def atom(self):
        tok = self.peek()
        if tok.kind == "int":
            self.take()
            return Expr("int", (int(tok.text),), tok.pos)
        if tok.kind == "name":
            self.take()
            return Expr("name", (tok.text,), tok.pos)
        if tok.kind == "op" and tok.text == "(":
            self.take()
            e = self.expr()
            self.expect(")")
            return e
        self.fail(f"expected a factor, found {tok.text or 'end of input'!r}")


def parse(text):
    """Parse text into an Expr tree."""
    return _Parser(text).parse()


# evaluation: values live in QRat, AlgElt or Form, lifted as needed


def _level(v):
    from qhyper.forms import Form

    if isinstance(v, QRat):
        return 0
    if isinstance(v, AlgElt):
        return 1
    if isinstance(v, Form):
        return 2
    raise TypeError(type(v))


def _lift(v, level):
    from qhyper.forms import Form

    cur = _level(v)
    if cur >= level:
        return v
    if cur == 0:
        v = AlgElt.scalar(v)
    if level == 2:
        v = Form.from_alg(v)
    return v


def _name_value(name):
    from qhyper.forms import eta_3, eta_minus, eta_plus

    return {
        "q": lambda: qpow(1),
        "a": alpha,
        "as": alpha_star,
        "g": gamma,
        "gs": gamma_star,
        "em": eta_minus,
        "ep": eta_plus,
        "e3": eta_3,
    }[name]()


def _mul(x, y):
    from qhyper.forms import wedge

    lx, ly = _level(x), _level(y)
    if lx == 0 and ly == 0:
        return x * y
    if lx == 0:
        return y.scale(x)
    if ly == 0:
        return x.scale(y)
    if lx == 1 and ly == 1:
        return x * y
    return wedge(_lift(x, 2), _lift(y, 2))


def _add(x, y):
    level = max(_level(x), _level(y))
    return _lift(x, level) + _lift(y, level)


def _power(x, e, pos, text):
    if _level(x) == 0:
        if e < 0 and not x:
            raise ParseError("zero raised to a negative power", pos, text)
        return x ** e
    if e < 0:
        raise ParseError("negative powers are only allowed for scalars", pos, text)
    out = ONE
    for _ in range(e):
        out = _mul(out, x)
    return out


def evaluate(expr, text=None):
    """Evaluate an Expr to a QRat, AlgElt or Form."""
    op = expr.op
    if op == "int":
        return QRat.from_int(expr.args[0])
    if op == "name":
        return _name_value(expr.args[0])
    if op == "neg":
        v = evaluate(expr.args[0], text)
        return -v
    if op == "^":
        return _power(evaluate(expr.args[0], text), expr.args[1], expr.pos, text)
    x = evaluate(expr.args[0], text)
    y = evaluate(expr.args[1], text)
    if op == "+":
        return _add(x, y)
    if op == "-":
        return _add(x, -y)
    if op == "*":
        return _mul(x, y)
    if op == "/":
        if _level(y) != 0:
            raise ParseError("division is only allowed by scalars", expr.pos, text)
        if not y:
            raise ParseError("division by zero", expr.pos, text)
        return _mul(x, y.inverse())
    raise ParseError(f"unknown operator {op!r}", expr.pos, text)


def parse_value(text):
    return evaluate(parse(text), text)


def parse_scalar(text):
    v = parse_value(text)
    if _level(v) == 0:
        return v
    if _level(v) == 1 and set(v.terms) <= {(0, 0, 0)}:
        return v.coefficient(0, 0, 0)
    raise ParseError("expected a scalar in q", 0, text)


def parse_alg(text):
    v = parse_value(text)
    if _level(v) == 2:
        if set(v.terms) <= {0}:
            return v.coefficient(0)
        raise ParseError("expected an algebra element, found a form", 0, text)
    return _lift(v, 1)


def parse_form(text):
    return _lift(parse_value(text), 2)
