"""Exact arithmetic in the rational function field Q(q).

A :class:`QRat` stores ``q^val * num(q) / den(q)`` with ``num`` and ``den``
integer polynomials (tuples, lowest degree first) such that

* ``num[0] != 0`` and ``den[0] != 0`` (all powers of q live in ``val``),
* ``num`` and ``den`` are coprime in Z[q], contents included,
* ``den`` has a positive leading coefficient.

This makes the representation unique, so equality and hashing are
structural.  Rational scalars such as 1/2 simply carry an integer
constant denominator.
"""
from fractions import Fraction
from math import gcd

from qhyper import kernel as K

__all__ = [
    "QRat",
    "ZERO",
    "ONE",
    "Q",
    "qrat",
    "qpow",
    "qint",
    "qrat_add",
    "qrat_mul",
    "qrat_eval",
    "PoleError",
]


class PoleError(ZeroDivisionError):
    """Raised when a rational function is evaluated at one of its poles."""


def _strip_low(p):
    z = 0
    while z < len(p) and p[z] == 0:
        z += 1
    return (p[z:], z) if z else (p, 0)


def _shift(p, s):
    return (0,) * s + p if s else p


class QRat:
    __slots__ = ("num", "val", "den", "_hash")

    def __init__(self, num=(), val=0, den=(1,)):
        # trusted constructor: callers must pass canonical data
        self.num = num
        self.val = val
        self.den = den
        self._hash = None

    # ------------------------------------------------------------------
    # construction
    @staticmethod
    def normalize(num, val=0, den=(1,)):
        """Canonical QRat for ``q^val * num / den`` with arbitrary integer polys."""
        num = K.p_trim(tuple(num))
        den = K.p_trim(tuple(den))
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            return ZERO
        num, z = _strip_low(num)
        val += z
        den, z = _strip_low(den)
        val -= z
        if len(den) == 1:
            d = den[0]
            if d != 1:
                c = gcd(K.p_content(num), d)
                if d < 0:
                    c = -c
                num = K.p_divexact_int(num, c)
                den = (d // c,)
            return QRat(num, val, den)
        g = K.p_gcd(num, den)
        if g != (1,):
            num = K.p_divexact(num, g)
            den = K.p_divexact(den, g)
        c = gcd(K.p_content(num), K.p_content(den))
        if den[-1] < 0:
            c = -c
        if c != 1:
            num = K.p_divexact_int(num, c)
            den = K.p_divexact_int(den, c)
        return QRat(num, val, den)

    @staticmethod
    def from_int(n):
        n = int(n)
        return QRat((n,), 0, (1,)) if n else ZERO

    @staticmethod
    def from_fraction(x):
        x = Fraction(x)
        if x == 0:
            return ZERO
        return QRat((x.numerator,), 0, (x.denominator,))

    @staticmethod
    def from_terms(terms):
        """Laurent polynomial from a mapping exponent -> rational coefficient."""
        terms = {e: Fraction(c) for e, c in terms.items() if c}
        if not terms:
            return ZERO
        lo = min(terms)
        hi = max(terms)
        den = 1
        for c in terms.values():
            den = den * c.denominator // gcd(den, c.denominator)
        num = [0] * (hi - lo + 1)
        for e, c in terms.items():
            num[e - lo] = int(c * den)
        return QRat.normalize(num, lo, (den,))

    @staticmethod
    def coerce(x):
        if isinstance(x, QRat):
            return x
        if isinstance(x, int):
            return QRat.from_int(x)
        if isinstance(x, Fraction):
            return QRat.from_fraction(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to QRat")

    @staticmethod
    def parse(text):
        from qhyper.expr import parse_scalar

        return parse_scalar(text)

    # ------------------------------------------------------------------
    # predicates and views
    def is_zero(self):
        return not self.num

    def is_one(self):
        return self.num == (1,) and self.val == 0 and self.den == (1,)

    def is_laurent(self):
        return len(self.den) == 1

    def laurent_terms(self):
        """Mapping exponent -> Fraction; only defined for Laurent polynomials."""
        if not self.is_laurent():
            raise ValueError("not a Laurent polynomial")
        d = self.den[0]
        return {self.val + i: Fraction(c, d) for i, c in enumerate(self.num) if c}

    def numerator_terms(self):
        return {self.val + i: c for i, c in enumerate(self.num) if c}

    def denominator_terms(self):
        return {i: c for i, c in enumerate(self.den) if c}

    # ------------------------------------------------------------------
    # arithmetic
    def __add__(self, other):
        if not isinstance(other, QRat):
            try:
                other = QRat.coerce(other)
            except TypeError:
                return NotImplemented
        return qrat_add(self, other)

    __radd__ = __add__

    def __neg__(self):
        if not self.num:
            return self
        return QRat(K.p_neg(self.num), self.val, self.den)

    def __sub__(self, other):
        if not isinstance(other, QRat):
            try:
                other = QRat.coerce(other)
            except TypeError:
                return NotImplemented
        return qrat_add(self, -other)

    def __rsub__(self, other):
        return QRat.coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, QRat):
            try:
                other = QRat.coerce(other)
            except TypeError:
                return NotImplemented
        return qrat_mul(self, other)

    __rmul__ = __mul__

    def inverse(self):
        if not self.num:
            raise ZeroDivisionError("inverse of zero")
        if len(self.num) == 1 and len(self.den) == 1:
            n, d = self.num[0], self.den[0]
            if n < 0:
                n, d = -n, -d
            return QRat((d,), -self.val, (n,))
        return QRat.normalize(self.den, -self.val, self.num)

    def __truediv__(self, other):
        if not isinstance(other, QRat):
            try:
                other = QRat.coerce(other)
            except TypeError:
                return NotImplemented
        return qrat_mul(self, other.inverse())

    def __rtruediv__(self, other):
        return QRat.coerce(other) / self

    def __pow__(self, e):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inverse() ** (-e)
        out = ONE
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def shift(self, e):
        """Multiply by q^e."""
        if not self.num or not e:
            return self
        return QRat(self.num, self.val + e, self.den)

    # ------------------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, QRat):
            return self.num == other.num and self.val == other.val and self.den == other.den
        if isinstance(other, (int, Fraction)):
            return self == QRat.coerce(other)
        return NotImplemented

    def __hash__(self):
        h = self._hash
        if h is None:
            h = self._hash = hash((self.num, self.val, self.den))
        return h

    def __bool__(self):
        return bool(self.num)

    def __call__(self, q0):
        return qrat_eval(self, q0)

    def __repr__(self):
        return f"QRat({self.render()!r})"

    def __str__(self):
        return self.render()

    # ------------------------------------------------------------------
    def is_compound(self):
        """True when the text form is a bare sum and needs parentheses as a factor."""
        if not self.num or self.den != (1,) or len(self.num) == 1:
            return False
        c = K.p_content(self.num)
        return c == 1 and self.num[0] > 0 and self.val == 0

    def render(self):
        """Factored text, e.g. ``-q^4*(1+q^2)`` or ``1/(1+q^2)``."""
        if not self.num:
            return "0"
        c = K.p_content(self.num)
        if self.num[0] < 0:
            c = -c
        prim = K.p_divexact_int(self.num, c) if c != 1 else self.num
        d = K.p_content(self.den)
        qden = K.p_divexact_int(self.den, d) if d != 1 else self.den
        sign = "-" if c < 0 else ""
        factors = []
        if abs(c) != 1:
            factors.append(str(abs(c)))
        if self.val:
            factors.append(_qpow_text(self.val))
        if len(prim) > 1:
            factors.append("(" + _poly_text(prim) + ")")
        if not factors:
            factors.append("1")
        if len(factors) == 1 and len(prim) > 1 and self.den == (1,) and not sign:
            text = _poly_text(prim)
        else:
            text = sign + "*".join(factors)
        if self.den == (1,):
            return text
        if len(qden) == 1:
            dtext = str(d)
        elif d == 1:
            dtext = "(" + _poly_text(qden) + ")"
        else:
            dtext = "(" + str(d) + "*(" + _poly_text(qden) + "))"
        return text + "/" + dtext


def _qpow_text(e):
    return "q" if e == 1 else f"q^{e}"


def _poly_text(p):
    parts = []
    for e, c in enumerate(p):
        if not c:
            continue
        if e == 0:
            body = str(abs(c))
        else:
            body = _qpow_text(e) if abs(c) == 1 else f"{abs(c)}*{_qpow_text(e)}"
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("-" if c < 0 else "+") + body)
    return "".join(parts)


ZERO = QRat((), 0, (1,))
ONE = QRat((1,), 0, (1,))
Q = QRat((1,), 1, (1,))


def qrat(x):
    """Coerce an int, Fraction, QRat or text to QRat."""
    if isinstance(x, str):
        return QRat.parse(x)
    return QRat.coerce(x)


def qpow(e):
    return QRat((1,), e, (1,))


def qrat_add(a, b):
    if not a.num:
        return b
    if not b.num:
        return a
    v = a.val if a.val < b.val else b.val
    na = _shift(a.num, a.val - v)
    nb = _shift(b.num, b.val - v)
    if a.den == b.den:
        n = K.p_add(na, nb)
        if not n:
            return ZERO
        if a.den == (1,):
            n, z = _strip_low(n)
            return QRat(n, v + z, (1,))
        return QRat.normalize(n, v, a.den)
    n = K.p_add(K.p_mul(na, b.den), K.p_mul(nb, a.den))
    return QRat.normalize(n, v, K.p_mul(a.den, b.den))


def qrat_mul(a, b):
    if not a.num or not b.num:
        return ZERO
    if a.den == (1,) and b.den == (1,):
        if len(a.num) == 1:
            return QRat(K.p_scale(b.num, a.num[0]), a.val + b.val, (1,))
        if len(b.num) == 1:
            return QRat(K.p_scale(a.num, b.num[0]), a.val + b.val, (1,))
        return QRat(K.p_mul(a.num, b.num), a.val + b.val, (1,))
    return QRat.normalize(K.p_mul(a.num, b.num), a.val + b.val, K.p_mul(a.den, b.den))


def qint(n):
    """The q-integer [n] = 1 + q^2 + ... + q^(2(n-1)); [0] = 0."""
    if n < 0:
        raise ValueError("q-integer needs n >= 0")
    if n == 0:
        return ZERO
    return QRat(tuple(1 - (i % 2) for i in range(2 * n - 1)), 0, (1,))


def _horner(p, x):
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def qrat_eval(a, q0):
    """Exact value of ``a`` at the rational point ``q = q0``."""
    q0 = Fraction(q0)
    a = QRat.coerce(a)
    if not a.num:
        return Fraction(0)
    d = _horner(a.den, q0)
    if d == 0 or (a.val < 0 and q0 == 0):
        raise PoleError(f"{a.render()} has a pole at q={q0}")
    return _horner(a.num, q0) * q0**a.val / d
