"""Differential forms on SU_q(1,1) over the basis of eta-words.

A :class:`Form` stores left coefficients on the eight words built from
``eta_-``, ``eta_+``, ``eta_3`` (in that letter order).  Words are bit masks:
``EM = 1``, ``EP = 2``, ``E3 = 4``.

Coefficients pass through words by the z-degree rule

    eta_3 x = q^(-2 n) x eta_3,    eta_(+-) x = q^(-n) x eta_(+-)

for x homogeneous of z-degree n, and letters reorder by

    eta_+ eta_- = -q^2 eta_- eta_+,  eta_3 eta_- = -q^4 eta_- eta_3,
    eta_3 eta_+ = -q^-4 eta_+ eta_3,  squares vanish.
"""
from functools import lru_cache

from qhyper.algebra import INHOMOGENEOUS, AlgElt, Monomial, _join_terms, _term_text, mul, star, unit
from qhyper.coeffs import ONE, QRat, qint, qpow

__all__ = [
    "EM",
    "EP",
    "E3",
    "WORDS",
    "Form",
    "wedge",
    "differential",
    "form_star",
    "horizontal_part",
    "is_base",
    "is_horizontal",
    "metric_left",
    "hodge_left",
    "hodge_left_inv",
    "hodge_right",
    "hodge_right_inv",
    "codifferential_left",
    "codifferential_right",
    "eta_minus",
    "eta_plus",
    "eta_3",
    "dvol",
    "NotBaseFormError",
]

EM, EP, E3 = 1, 2, 4
WORDS = (0, EM, EP, E3, EM | EP, EM | E3, EP | E3, EM | EP | E3)
_LETTERS = (EM, EP, E3)
_TOKEN = {EM: "em", EP: "ep", E3: "e3"}
_WEIGHT = {EM: -2, EP: 2, E3: 0}


class NotBaseFormError(ValueError):
    """An operation defined on base forms received something else."""


def letters(w):
    return [x for x in _LETTERS if w & x]


def word_degree(w):
    return bin(w).count("1")


def word_weight(w):
    return sum(_WEIGHT[x] for x in letters(w))


def word_token(w):
    return "^".join(_TOKEN[x] for x in letters(w))


def _pass_exp(w):
    """Exponent p with W x = q^(-n p) x W for x of z-degree n."""
    return sum(2 if x == E3 else 1 for x in letters(w))


_SWAP = {(EP, EM): (-1, 2), (E3, EM): (-1, 4), (E3, EP): (-1, -4)}
_ORDER = {EM: 0, EP: 1, E3: 2}


@lru_cache(maxsize=None)
def word_mul(w1, w2):
    """Product of two words: (QRat factor, word) or None when it vanishes."""
    if w1 & w2:
        return None
    seq = letters(w1) + letters(w2)
    sign, e = 1, 0
    changed = True
    while changed:
        changed = False
        for i in range(len(seq) - 1):
            x, y = seq[i], seq[i + 1]
            if _ORDER[x] > _ORDER[y]:
                s, f = _SWAP[(x, y)]
                sign *= s
                e += f
                seq[i], seq[i + 1] = y, x
                changed = True
    c = qpow(e)
    return (c if sign > 0 else -c), w1 | w2


class Form:
    """Element of Omega(P): mapping word -> left coefficient (AlgElt)."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {w: x for w, x in (terms or {}).items() if x}

    @staticmethod
    def _raw(terms):
        f = Form.__new__(Form)
        f.terms = terms
        return f

    @staticmethod
    def from_alg(x, word=0):
        if isinstance(x, (int, QRat)):
            x = AlgElt.scalar(x)
        return Form._raw({word: x} if x else {})

    @staticmethod
    def parse(text):
        from qhyper.expr import parse_form

        return parse_form(text)

    # ------------------------------------------------------------------
    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, Form):
            return self.terms == other.terms
        if isinstance(other, AlgElt):
            return self == Form.from_alg(other)
        if isinstance(other, (int, QRat)):
            return self == Form.from_alg(AlgElt.scalar(other))
        return NotImplemented

    def __hash__(self):
        return hash(frozenset((w, hash(x)) for w, x in self.terms.items()))

    def __add__(self, other):
        other = _as_form(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for w, x in other.terms.items():
            if w in out:
                s = out[w] + x
                if s:
                    out[w] = s
                else:
                    del out[w]
            else:
                out[w] = x
        return Form._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return Form._raw({w: -x for w, x in self.terms.items()})

    def __sub__(self, other):
        other = _as_form(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return _as_form(other) - self

    def scale(self, c):
        c = QRat.coerce(c)
        if not c:
            return Form()
        return Form._raw({w: x.scale(c) for w, x in self.terms.items()})

    def __mul__(self, other):
        other = _as_form(other)
        if other is None:
            return NotImplemented
        return wedge(self, other)

    def __rmul__(self, other):
        other = _as_form(other)
        if other is None:
            return NotImplemented
        return wedge(other, self)

    # ------------------------------------------------------------------
    def coefficient(self, word):
        return self.terms.get(word, AlgElt())

    def degrees(self):
        return {word_degree(w) for w in self.terms}

    def degree(self):
        """Form degree; raises when the form mixes degrees."""
        ds = self.degrees()
        if not ds:
            return 0
        if len(ds) > 1:
            raise ValueError("form is not degree-homogeneous")
        return ds.pop()

    def degree_part(self, k):
        return Form._raw({w: x for w, x in self.terms.items() if word_degree(w) == k})

    def weight_parts(self):
        """Split by total weight zdeg(coefficient) + weight(word)."""
        parts = {}
        for w, x in self.terms.items():
            ww = word_weight(w)
            for n, xn in x.homogeneous_parts().items():
                parts.setdefault(n + ww, {})[w] = xn
        return {n: Form._raw(t) for n, t in parts.items()}

    def weight(self):
        ps = self.weight_parts()
        if not ps:
            return 0
        if len(ps) > 1:
            return INHOMOGENEOUS
        return next(iter(ps))

    def right_coefficients(self):
        """Coefficients y_W with self = sum W y_W."""
        out = {}
        for w, x in self.terms.items():
            p = _pass_exp(w)
            y = AlgElt()
            for n, xn in x.homogeneous_parts().items():
                y = y + xn.scale(qpow(n * p))
            out[w] = y
        return out

    @staticmethod
    def from_right(coeffs):
        """Inverse of :meth:`right_coefficients`."""
        out = {}
        for w, y in coeffs.items():
            p = _pass_exp(w)
            x = AlgElt()
            for n, yn in y.homogeneous_parts().items():
                x = x + yn.scale(qpow(-n * p))
            if x:
                out[w] = x
        return Form._raw(out)

    def star(self):
        return form_star(self)

    def d(self):
        return differential(self)

    def render(self):
        if not self.terms:
            return "0"
        items = []
        for w in WORDS:
            x = self.terms.get(w)
            if x is None:
                continue
            for m, c in x.sorted_terms():
                parts = []
                if m != (0, 0, 0) or not w:
                    parts.append(m.render() if m != (0, 0, 0) else "")
                if w:
                    parts.append(word_token(w))
                body = " ".join(p for p in parts if p)
                items.append(_term_text(c, body))
        return _join_terms(items)

    __str__ = render

    def __repr__(self):
        return f"Form({self.render()!r})"


def _as_form(x):
    if isinstance(x, Form):
        return x
    if isinstance(x, AlgElt):
        return Form.from_alg(x)
    if isinstance(x, (int, QRat)):
        return Form.from_alg(AlgElt.scalar(x))
    return None


def eta_minus():
    return Form.from_alg(unit(), EM)


def eta_plus():
    return Form.from_alg(unit(), EP)


def eta_3():
    return Form.from_alg(unit(), E3)


def dvol():
    """dvol = eta_- eta_+."""
    return Form.from_alg(unit(), EM | EP)


def _pass(x, w):
    """The coefficient x' with W x = x' W."""
    p = _pass_exp(w)
    if not p:
        return x
    parts = x.homogeneous_parts()
    if len(parts) == 1:
        n, xn = next(iter(parts.items()))
        return xn.scale(qpow(-n * p)) if n else xn
    out = AlgElt()
    for n, xn in parts.items():
        out = out + (xn.scale(qpow(-n * p)) if n else xn)
    return out


def wedge(u, v):
    """Graded product in left-coefficient normal form."""
    u = _as_form(u)
    v = _as_form(v)
    out = {}
    for w1, x in u.terms.items():
        for w2, y in v.terms.items():
            wm = word_mul(w1, w2)
            if wm is None:
                continue
            f, w = wm
            c = mul(x, _pass(y, w1)).scale(f)
            if w in out:
                out[w] = out[w] + c
            else:
                out[w] = c
    return Form({w: x for w, x in out.items() if x})


def lmul(x, u):
    """Left multiplication of a form by an algebra element."""
    return Form({w: mul(x, y) for w, y in u.terms.items()})


def rmul(u, x):
    """Right multiplication of a form by an algebra element."""
    return Form({w: mul(y, _pass(x, w)) for w, y in u.terms.items()})


# ----------------------------------------------------------------------
# differential


def _gen_differentials():
    one_q2 = qint(2)
    a, as_, g, gs = (Monomial(1, 0, 0), Monomial(-1, 0, 0), Monomial(0, 1, 0), Monomial(0, 0, 1))
    return {
        a: Form({E3: AlgElt.mono(*a, coeff=ONE / one_q2), EP: AlgElt.mono(*gs, coeff=qpow(1))}),
        as_: Form({E3: AlgElt.mono(*as_, coeff=-qpow(2) / one_q2), EM: AlgElt.mono(*g)}),
        g: Form({E3: AlgElt.mono(*g, coeff=ONE / one_q2), EP: AlgElt.mono(*as_)}),
        gs: Form({E3: AlgElt.mono(*gs, coeff=-qpow(2) / one_q2), EM: AlgElt.mono(*a, coeff=qpow(-1))}),
    }


_DGEN = _gen_differentials()


def _split_first(m):
    a, k, l = m
    if a > 0:
        return Monomial(1, 0, 0), Monomial(a - 1, k, l)
    if a < 0:
        return Monomial(-1, 0, 0), Monomial(a + 1, k, l)
    if k:
        return Monomial(0, 1, 0), Monomial(0, k - 1, l)
    return Monomial(0, 0, 1), Monomial(0, 0, l - 1)


@lru_cache(maxsize=1 << 14)
def _d_mono(m):
    if m == (0, 0, 0):
        return Form()
    if m in _DGEN:
        return _DGEN[m]
    first, rest = _split_first(m)
    return rmul(_DGEN[first], AlgElt.mono(*rest)) + lmul(AlgElt.mono(*first), _d_mono(rest))


def d_alg(x):
    """Differential of a 0-form."""
    out = Form()
    for m, c in x.terms.items():
        out = out + _d_mono(m).scale(c)
    return out


def _d_letters():
    q2 = qpow(2)
    return {
        E3: Form({EM | EP: AlgElt.scalar(-qint(2))}),
        EP: wedge(Form.from_alg(q2, E3), eta_plus()),
        EM: wedge(Form.from_alg(-qpow(-2), E3), eta_minus()),
    }


@lru_cache(maxsize=None)
def _d_word(w):
    ls = letters(w)
    if not ls:
        return Form()
    dl = _d_letters()
    first = ls[0]
    rest = 0
    for x in ls[1:]:
        rest |= x
    rest_form = Form.from_alg(unit(), rest)
    out = wedge(dl[first], rest_form)
    if rest:
        out = out - wedge(Form.from_alg(unit(), first), _d_word(rest))
    return out


def differential(u):
    """Exterior derivative, extended by the graded Leibniz rule; d^2 = 0."""
    u = _as_form(u)
    out = Form()
    for w, x in u.terms.items():
        wf = Form.from_alg(unit(), w)
        out = out + wedge(d_alg(x), wf)
        if w:
            out = out + lmul(x, _d_word(w))
    return out


# ----------------------------------------------------------------------
# star


_LETTER_STAR = {E3: (-1, E3), EM: (1, EP), EP: (1, EM)}


@lru_cache(maxsize=None)
def _word_star(w):
    ls = letters(w)
    k = len(ls)
    out = Form.from_alg(unit())
    for x in reversed(ls):
        s, y = _LETTER_STAR[x]
        out = wedge(out, Form.from_alg(AlgElt.scalar(s), y))
    if (k * (k - 1) // 2) % 2:
        out = -out
    return out


def form_star(u):
    """Graded antimultiplicative involution, (x W)* = W* x*."""
    u = _as_form(u)
    out = Form()
    for w, x in u.terms.items():
        out = out + rmul(_word_star(w), star(x))
    return out


# ----------------------------------------------------------------------
# horizontal and base forms


def horizontal_part(u):
    u = _as_form(u)
    return Form._raw({w: x for w, x in u.terms.items() if not w & E3})


def is_horizontal(u):
    return all(not w & E3 for w in _as_form(u).terms)


def is_base(u):
    """Horizontal with zdeg(coefficient) + weight(word) = 0 termwise."""
    u = _as_form(u)
    for w, x in u.terms.items():
        if w & E3:
            return False
        ww = word_weight(w)
        for m in x.terms:
            if m.zdegree() + ww:
                return False
    return True


def _require_base(u):
    u = _as_form(u)
    if not is_base(u):
        raise NotBaseFormError(f"not a base form: {u.render()}")
    return u


def metric_left(u, v):
    """Left quantum Riemannian metric; forms of different degree are orthogonal."""
    u = _require_base(u)
    v = _require_base(v)
    if not u or not v:
        return AlgElt()
    ku, kv = u.degree(), v.degree()
    if ku != kv:
        return AlgElt()
    if ku == 0:
        return mul(u.coefficient(0), star(v.coefficient(0)))
    if ku == 2:
        return mul(u.coefficient(EM | EP), star(v.coefficient(EM | EP)))
    x1, y1 = u.coefficient(EM), u.coefficient(EP)
    x2, y2 = v.coefficient(EM), v.coefficient(EP)
    return mul(x1, star(x2)).scale(qpow(2)) + mul(y1, star(y2))


def _by_degree(u):
    return {k: u.degree_part(k) for k in u.degrees()}


def hodge_left(u):
    """Left Hodge operator: b -> b* dvol, x em + y ep -> -y* em + x* ep, b dvol -> b*."""
    u = _require_base(u)
    out = Form()
    for k, part in _by_degree(u).items():
        if k == 0:
            out = out + Form.from_alg(star(part.coefficient(0)), EM | EP)
        elif k == 1:
            x, y = part.coefficient(EM), part.coefficient(EP)
            out = out + Form({EM: -star(y), EP: star(x)})
        else:
            out = out + Form.from_alg(star(part.coefficient(EM | EP)))
    return out


def hodge_left_inv(u):
    """Inverse of :func:`hodge_left`: x em + y ep -> y* em - x* ep."""
    u = _require_base(u)
    out = Form()
    for k, part in _by_degree(u).items():
        if k == 0:
            out = out + Form.from_alg(star(part.coefficient(0)), EM | EP)
        elif k == 1:
            x, y = part.coefficient(EM), part.coefficient(EP)
            out = out + Form({EM: star(y), EP: -star(x)})
        else:
            out = out + Form.from_alg(star(part.coefficient(EM | EP)))
    return out


def hodge_right(u):
    """Right Hodge operator, hodge_left after the star."""
    u = _require_base(u)
    return hodge_left(form_star(u))


def hodge_right_inv(u):
    u = _require_base(u)
    return form_star(hodge_left_inv(u))


def codifferential_left(u):
    """(-1)^(k+1) hodge_left_inv . d . hodge_left on base (k+1)-forms; zero on functions."""
    u = _require_base(u)
    out = Form()
    for k1, part in _by_degree(u).items():
        if k1 == 0:
            continue
        v = hodge_left_inv(differential(hodge_left(part)))
        out = out + (v if k1 % 2 == 0 else -v)
    return out


def codifferential_right(u):
    """(-1)^(k+1) hodge_right_inv . d . hodge_right on base (k+1)-forms."""
    u = _require_base(u)
    out = Form()
    for k1, part in _by_degree(u).items():
        if k1 == 0:
            continue
        v = hodge_right_inv(differential(hodge_right(part)))
        out = out + (v if k1 % 2 == 0 else -v)
    return out
