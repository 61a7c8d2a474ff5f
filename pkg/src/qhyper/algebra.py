"""The Hopf *-algebra SU_q(1,1) in normal-ordered form.

Elements are finite combinations of basis monomials ``alpha^a gamma^k gammastar^l``
where a negative ``a`` stands for ``alphastar^|a|``.  Products are computed in
closed form: moving ``gamma^k gammastar^l`` past ``alpha^b`` costs ``q^(-(k+l) b)``,
and mixed alpha/alphastar powers collapse through

    alpha^m alphastar^m = prod_{i=1..m} (1 + q^(2i) rho)
    alphastar^m alpha^m = prod_{i=0..m-1} (1 + q^(-2i) rho)

with ``rho = gamma gammastar`` and ``rho alpha = q^-2 alpha rho``.
"""
from functools import lru_cache

from qhyper.coeffs import ONE, ZERO, QRat, qint, qpow

__all__ = [
    "Monomial",
    "AlgElt",
    "TensorElt",
    "GroupElt",
    "mono_mul",
    "mul",
    "star",
    "coproduct",
    "counit",
    "antipode",
    "zdegree",
    "jproject",
    "germ_scalar",
    "alpha",
    "alpha_star",
    "gamma",
    "gamma_star",
    "rho",
    "xi",
    "unit",
    "INHOMOGENEOUS",
]

INHOMOGENEOUS = "inhomogeneous"


class Monomial(tuple):
    """Exponent triple (a, k, l) for alpha^a gamma^k gammastar^l."""

    __slots__ = ()

    def __new__(cls, a=0, k=0, l=0):
        if k < 0 or l < 0:
            raise ValueError("gamma exponents must be nonnegative")
        return tuple.__new__(cls, (a, k, l))

    @property
    def a(self):
        return self[0]

    @property
    def k(self):
        return self[1]

    @property
    def l(self):
        return self[2]

    def zdegree(self):
        return self[0] + self[1] - self[2]

    def render(self):
        a, k, l = self
        parts = []
        if a > 0:
            parts.append("a" if a == 1 else f"a^{a}")
        elif a < 0:
            parts.append("as" if a == -1 else f"as^{-a}")
        if k:
            parts.append("g" if k == 1 else f"g^{k}")
        if l:
            parts.append("gs" if l == 1 else f"gs^{l}")
        return " ".join(parts) if parts else "1"

    def __repr__(self):
        return f"Monomial({self[0]}, {self[1]}, {self[2]})"


def _poly_rho(factors):
    """Expand prod (1 + q^e rho) over exponents e; returns list of QRat by rho-power."""
    coeffs = [ONE]
    for e in factors:
        shifted = [ZERO] + [c.shift(e) for c in coeffs]
        coeffs = [x + y for x, y in zip(coeffs + [ZERO], shifted)]
    return coeffs


@lru_cache(maxsize=None)
def _alpha_pair(a, b):
    """alpha^a * alpha^b as a tuple of (a', j, coeff): coeff * alpha^a' rho^j."""
    if a >= 0 and b >= 0 or a <= 0 and b <= 0:
        return ((a + b, 0, ONE),)
    out = []
    if a > 0:
        s = -b
        m = min(a, s)
        es = _poly_rho([2 * i for i in range(1, m + 1)])
        if a >= s:
            out = [(a - s, j, e) for j, e in enumerate(es)]
        else:
            out = [(a - s, j, e.shift(2 * j * (s - a))) for j, e in enumerate(es)]
    else:
        t = -a
        m = min(t, b)
        es = _poly_rho([-2 * i for i in range(m)])
        if t >= b:
            out = [(b - t, j, e) for j, e in enumerate(es)]
        else:
            out = [(b - t, j, e.shift(-2 * j * (b - t))) for j, e in enumerate(es)]
    return tuple(x for x in out if x[2])


@lru_cache(maxsize=1 << 16)
def mono_mul(m1, m2):
    """Product of two basis monomials as a tuple of (Monomial, QRat)."""
    a, k, l = m1
    b, m, n = m2
    pre = -(k + l) * b
    out = []
    for a2, j, c in _alpha_pair(a, b):
        out.append((Monomial(a2, k + m + j, l + n + j), c.shift(pre)))
    return tuple(out)


class AlgElt:
    """Finite linear combination of normal-ordered monomials over Q(q)."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        if terms is None:
            self.terms = {}
        else:
            self.terms = {Monomial(*m): QRat.coerce(c) for m, c in terms.items() if c}

    @staticmethod
    def _raw(terms):
        e = AlgElt.__new__(AlgElt)
        e.terms = terms
        return e

    @staticmethod
    def scalar(c):
        c = QRat.coerce(c)
        return AlgElt._raw({Monomial(0, 0, 0): c} if c else {})

    @staticmethod
    def mono(a=0, k=0, l=0, coeff=ONE):
        coeff = QRat.coerce(coeff)
        return AlgElt._raw({Monomial(a, k, l): coeff} if coeff else {})

    @staticmethod
    def parse(text):
        from qhyper.expr import parse_alg

        return parse_alg(text)

    # ------------------------------------------------------------------
    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, AlgElt):
            return self.terms == other.terms
        if isinstance(other, (int, QRat)):
            return self == AlgElt.scalar(other)
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        if not isinstance(other, AlgElt):
            try:
                other = AlgElt.scalar(other)
            except TypeError:
                return NotImplemented
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m)
            if s is None:
                out[m] = c
            else:
                s = s + c
                if s:
                    out[m] = s
                else:
                    del out[m]
        return AlgElt._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return AlgElt._raw({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, AlgElt):
            try:
                other = AlgElt.scalar(other)
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return AlgElt.scalar(other) - self

    def scale(self, c):
        c = QRat.coerce(c)
        if not c:
            return AlgElt()
        if c.is_one():
            return self
        return AlgElt._raw({m: x * c for m, x in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, AlgElt):
            return mul(self, other)
        if isinstance(other, (int, QRat)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, QRat)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, e):
        if not isinstance(e, int) or e < 0:
            return NotImplemented
        out = unit()
        for _ in range(e):
            out = out * self
        return out

    # ------------------------------------------------------------------
    def star(self):
        return star(self)

    def zdegree(self):
        return zdegree(self)

    def homogeneous_parts(self):
        """Mapping z-degree -> homogeneous component."""
        parts = {}
        for m, c in self.terms.items():
            parts.setdefault(m.zdegree(), {})[m] = c
        return {n: AlgElt._raw(t) for n, t in parts.items()}

    def sorted_terms(self):
        return sorted(self.terms.items())

    def coefficient(self, a=0, k=0, l=0):
        return self.terms.get(Monomial(a, k, l), ZERO)

    def render(self):
        if not self.terms:
            return "0"
        out = []
        for m, c in self.sorted_terms():
            out.append(_term_text(c, m.render() if m != (0, 0, 0) else ""))
        return _join_terms(out)

    __str__ = render

    def __repr__(self):
        return f"AlgElt({self.render()!r})"


def _term_text(c, body):
    """Signed text for ``c * body``; returns (negative, text-without-sign)."""
    neg = c.num[0] < 0
    cc = -c if neg else c
    if not body:
        text = cc.render()
        if cc.is_compound():
            text = "(" + text + ")"
        return neg, text
    if cc.is_one():
        return neg, body
    text = cc.render()
    if cc.is_compound():
        text = "(" + text + ")"
    return neg, text + " " + body


def _join_terms(items):
    out = []
    for i, (neg, text) in enumerate(items):
        if i == 0:
            out.append(("-" if neg else "") + text)
        else:
            out.append((" - " if neg else " + ") + text)
    return "".join(out)


def unit():
    return AlgElt.mono(0, 0, 0)


def alpha():
    return AlgElt.mono(1, 0, 0)


def alpha_star():
    return AlgElt.mono(-1, 0, 0)


def gamma():
    return AlgElt.mono(0, 1, 0)


def gamma_star():
    return AlgElt.mono(0, 0, 1)


def rho():
    """rho = gamma gammastar, a generator of the hyperboloid algebra."""
    return AlgElt.mono(0, 1, 1)


def xi():
    """xi = alpha gammastar, the other hyperboloid generator."""
    return AlgElt.mono(1, 0, 1)


def mul(x, y):
    out = {}
    get = out.get
    for m1, c1 in x.terms.items():
        for m2, c2 in y.terms.items():
            c12 = c1 * c2
            for m, c in mono_mul(m1, m2):
                v = c12 * c
                s = get(m)
                out[m] = v if s is None else s + v
    return AlgElt._raw({m: c for m, c in out.items() if c})


def _star_mono(m):
    a, k, l = m
    return Monomial(-a, l, k), qpow((k + l) * a)


def star(x):
    """Antimultiplicative involution; acts as the identity on Q(q)."""
    out = {}
    for m, c in x.terms.items():
        m2, f = _star_mono(m)
        out[m2] = c * f
    return AlgElt._raw(out)


def antipode(x):
    out = {}
    for (a, k, l), c in x.terms.items():
        f = qpow(k - l + (k + l) * a)
        if (k + l) % 2:
            f = -f
        m2 = Monomial(-a, k, l)
        s = out.get(m2)
        v = c * f
        out[m2] = v if s is None else s + v
    return AlgElt._raw({m: c for m, c in out.items() if c})


def counit(x):
    out = ZERO
    for (a, k, l), c in x.terms.items():
        if k == 0 and l == 0:
            out = out + c
    return out


def zdegree(x):
    """The unique n with Delta_P(x) = x (x) z^n, or INHOMOGENEOUS."""
    degs = {m.zdegree() for m in x.terms}
    if not degs:
        return 0
    if len(degs) > 1:
        return INHOMOGENEOUS
    return degs.pop()


# ----------------------------------------------------------------------
# tensor square and coproduct


class TensorElt:
    """Element of P (x) P, expanded on pairs of basis monomials."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    @staticmethod
    def simple(x, y):
        out = {}
        for m1, c1 in x.terms.items():
            for m2, c2 in y.terms.items():
                out[(m1, m2)] = c1 * c2
        return TensorElt(out)

    def __add__(self, other):
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out[k] + v if k in out else v
        return TensorElt(out)

    def __sub__(self, other):
        return self + other.scale(-ONE)

    def scale(self, c):
        return TensorElt({k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        out = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                c12 = c1 * c2
                for ma, ca in mono_mul(a1, a2):
                    cc = c12 * ca
                    for mb, cb in mono_mul(b1, b2):
                        key = (ma, mb)
                        v = cc * cb
                        out[key] = out[key] + v if key in out else v
        return TensorElt(out)

    def __eq__(self, other):
        return isinstance(other, TensorElt) and self.terms == other.terms

    def pairs(self):
        """Iterate (coeff, left AlgElt, right AlgElt) over the expansion."""
        for (m1, m2), c in sorted(self.terms.items()):
            yield c, AlgElt.mono(*m1), AlgElt.mono(*m2)

    def apply(self, f, g):
        """Sum of c * f(x) (x) g(y) regrouped as a TensorElt."""
        out = TensorElt()
        for c, x, y in self.pairs():
            out = out + TensorElt.simple(f(x), g(y)).scale(c)
        return out

    def multiply(self):
        """The multiplication map P (x) P -> P."""
        out = AlgElt()
        for c, x, y in self.pairs():
            out = out + (x * y).scale(c)
        return out

    def render(self):
        if not self.terms:
            return "0"
        items = []
        for (m1, m2), c in sorted(self.terms.items()):
            items.append(_term_text(c, f"{m1.render()} (x) {m2.render()}"))
        return _join_terms(items)

    __str__ = render

    def __repr__(self):
        return f"TensorElt({self.render()!r})"


def _gen_coproducts():
    A, As, G, Gs = Monomial(1, 0, 0), Monomial(-1, 0, 0), Monomial(0, 1, 0), Monomial(0, 0, 1)
    q = qpow(1)
    return {
        "a": TensorElt({(A, A): ONE, (Gs, G): q}),
        "as": TensorElt({(As, As): ONE, (G, Gs): q}),
        "g": TensorElt({(G, A): ONE, (As, G): ONE}),
        "gs": TensorElt({(Gs, As): ONE, (A, Gs): ONE}),
    }


_GEN_DELTA = _gen_coproducts()
_UNIT_DELTA = TensorElt({(Monomial(), Monomial()): ONE})


@lru_cache(maxsize=None)
def _mono_coproduct(m):
    a, k, l = m
    out = _UNIT_DELTA
    gen = _GEN_DELTA["a"] if a > 0 else _GEN_DELTA["as"]
    for _ in range(abs(a)):
        out = out * gen
    for _ in range(k):
        out = out * _GEN_DELTA["g"]
    for _ in range(l):
        out = out * _GEN_DELTA["gs"]
    return out


def coproduct(x):
    out = TensorElt()
    for m, c in x.terms.items():
        out = out + _mono_coproduct(m).scale(c)
    return out


# ----------------------------------------------------------------------
# structure group G = C[z, z^-1] and the projection j


class GroupElt:
    """Laurent polynomial sum c_n z^n with coefficients in Q(q)."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {n: QRat.coerce(c) for n, c in (terms or {}).items() if c}

    def __eq__(self, other):
        return isinstance(other, GroupElt) and self.terms == other.terms

    def __add__(self, other):
        out = dict(self.terms)
        for n, c in other.terms.items():
            out[n] = out[n] + c if n in out else c
        return GroupElt(out)

    def __mul__(self, other):
        out = {}
        for n1, c1 in self.terms.items():
            for n2, c2 in other.terms.items():
                n = n1 + n2
                out[n] = out[n] + c1 * c2 if n in out else c1 * c2
        return GroupElt(out)

    def coproduct(self):
        """Delta'(z^n) = z^n (x) z^n, returned as {(n, n): c}."""
        return {(n, n): c for n, c in self.terms.items()}

    def render(self):
        if not self.terms:
            return "0"
        items = []
        for n, c in sorted(self.terms.items()):
            body = "" if n == 0 else ("z" if n == 1 else f"z^{n}")
            items.append(_term_text(c, body))
        return _join_terms(items)

    __str__ = render

    def __repr__(self):
        return f"GroupElt({self.render()!r})"


def jproject(x):
    """The *-Hopf epimorphism j: alpha -> z, gamma -> 0."""
    out = {}
    for (a, k, l), c in x.terms.items():
        if k == 0 and l == 0:
            out[a] = out[a] + c if a in out else c
    return GroupElt(out)


@lru_cache(maxsize=None)
def germ_scalar(n):
    """c_n with pi'(z^n) = c_n * varsigma.

    c_0 = 0, c_1 = 1/(1+q^2), c_-1 = -q^2/(1+q^2) and
    q^2 c_(n+1) + c_(n-1) = (1+q^2) c_n in both directions.
    """
    one_q2 = qint(2)
    if n == 0:
        return ZERO
    if n == 1:
        return ONE / one_q2
    if n == -1:
        return -qpow(2) / one_q2
    if n > 1:
        return (one_q2 * germ_scalar(n - 1) - germ_scalar(n - 2)).shift(-2)
    return one_q2 * germ_scalar(n + 1) - germ_scalar(n + 2).shift(2)
