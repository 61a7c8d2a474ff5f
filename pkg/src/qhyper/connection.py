"""Connections, covariant derivatives, curvature and the gauge action.

Every connection is ``omega(varsigma) = eta_3 + mu`` for a base 1-form ``mu``
with ``mu* = -mu``; ``mu = 0`` is the canonical connection.  For a
horizontal form of weight n, the coaction is ``phi (x) z^n``, so the
germ-map terms reduce to the scalars ``c_n = germ_scalar(n)``.
"""
from dataclasses import dataclass

from qhyper.algebra import AlgElt, antipode, coproduct, germ_scalar
from qhyper.coeffs import ZERO, QRat, qint, qpow
from qhyper.forms import (
    E3,
    EM,
    EP,
    Form,
    NotBaseFormError,
    differential,
    dvol,
    eta_3,
    form_star,
    horizontal_part,
    is_base,
    is_horizontal,
    lmul,
    wedge,
    word_degree,
)

__all__ = [
    "Qpc",
    "GermValue",
    "germs",
    "covariant_D",
    "covariant_D_germ",
    "covariant_D_omega",
    "covariant_Dhat_omega",
    "curvature",
    "is_regular",
    "gauge_transform",
    "gauge_transform_inv",
    "CANONICAL",
    "NotHorizontalError",
]


class NotHorizontalError(ValueError):
    """A covariant derivative received a form containing eta_3."""


class Qpc:
    """Quantum principal connection, stored as its displacement mu."""

    __slots__ = ("mu",)

    def __init__(self, mu=None):
        mu = Form() if mu is None else Form.parse(mu) if isinstance(mu, str) else mu
        if mu:
            if not is_base(mu) or mu.degrees() != {1}:
                raise NotBaseFormError("mu must be a base 1-form")
            if form_star(mu) != -mu:
                raise ValueError("mu must be anti-selfadjoint (mu* = -mu)")
        self.mu = mu

    def is_canonical(self):
        return not self.mu

    def form(self):
        """omega(varsigma) = eta_3 + mu."""
        return eta_3() + self.mu

    def __eq__(self, other):
        return isinstance(other, Qpc) and self.mu == other.mu

    def __repr__(self):
        return f"Qpc({self.mu.render()!r})"


CANONICAL = Qpc()


@dataclass(frozen=True)
class GermValue:
    """Coordinates of pi(p) on eta_-, eta_+, eta_3."""

    c_minus: QRat
    c_plus: QRat
    c_3: QRat

    def to_form(self):
        return Form({EM: AlgElt.scalar(self.c_minus), EP: AlgElt.scalar(self.c_plus), E3: AlgElt.scalar(self.c_3)})

    def __add__(self, other):
        return GermValue(self.c_minus + other.c_minus, self.c_plus + other.c_plus, self.c_3 + other.c_3)

    def scale(self, c):
        return GermValue(self.c_minus * c, self.c_plus * c, self.c_3 * c)


def germs(p):
    """Quantum germs map pi(p) = S(p_(1)) d p_(2)."""
    out = Form()
    for c, x, y in coproduct(p).pairs():
        out = out + lmul(antipode(x), differential(y)).scale(c)
    coords = {}
    for w, x in out.terms.items():
        if word_degree(w) != 1 or set(x.terms) - {(0, 0, 0)}:
            raise ArithmeticError(f"germs map left a non-scalar remainder: {out.render()}")
        coords[w] = x.coefficient(0, 0, 0)
    return GermValue(coords.get(EM, ZERO), coords.get(EP, ZERO), coords.get(E3, ZERO))


def _require_horizontal(phi):
    if isinstance(phi, AlgElt):
        phi = Form.from_alg(phi)
    if not is_horizontal(phi):
        raise NotHorizontalError(f"not horizontal: {phi.render()}")
    return phi


def covariant_D(phi):
    """Covariant derivative of the canonical connection: horizontal part of d."""
    phi = _require_horizontal(phi)
    return horizontal_part(differential(phi))


def _by_weight_and_degree(phi):
    for n, part in phi.weight_parts().items():
        for k in part.degrees():
            yield n, k, part.degree_part(k)


def covariant_D_germ(phi):
    """D(phi) = d(phi) - (-1)^k c_n phi eta_3 for weight-n pieces of degree k."""
    phi = _require_horizontal(phi)
    out = differential(phi)
    for n, k, part in _by_weight_and_degree(phi):
        c = germ_scalar(n)
        if c:
            term = wedge(part, eta_3()).scale(c)
            out = out - term if k % 2 == 0 else out + term
    return out


def covariant_D_omega(omega, phi):
    """D^omega(phi) = D(phi) - (-1)^k c_n phi mu."""
    phi = _require_horizontal(phi)
    out = covariant_D(phi)
    if omega.mu:
        for n, k, part in _by_weight_and_degree(phi):
            c = germ_scalar(n)
            if c:
                term = wedge(part, omega.mu).scale(c)
                out = out - term if k % 2 == 0 else out + term
    return out


def covariant_Dhat_omega(omega, phi):
    """Dual covariant derivative: D(phi) + c_(-n) mu phi."""
    phi = _require_horizontal(phi)
    out = covariant_D(phi)
    if omega.mu:
        for n, k, part in _by_weight_and_degree(phi):
            c = germ_scalar(-n)
            if c:
                out = out + wedge(omega.mu, part).scale(c)
    return out


def curvature(omega):
    """R(varsigma) = d mu - (1+q^2) eta_- eta_+."""
    return differential(omega.mu) - dvol().scale(qint(2))


def is_regular(omega, corpus):
    """Check (eta_3+mu) phi = (-1)^k q^(-2n) phi (eta_3+mu) on a horizontal corpus."""
    w = omega.form()
    for phi in corpus:
        phi = _require_horizontal(phi)
        for n, k, part in _by_weight_and_degree(phi):
            lhs = wedge(w, part)
            rhs = wedge(part, w).scale(qpow(-2 * n))
            if k % 2:
                rhs = -rhs
            if lhs != rhs:
                return False
    return True


def _check_mu(mu):
    if mu and (not is_base(mu) or mu.degrees() != {1} or form_star(mu) != -mu):
        raise ValueError("gauge transformation needs an anti-selfadjoint base 1-form")


def _transform(mu, u):
    if isinstance(u, AlgElt):
        u = Form.from_alg(u)
    out = Form()
    for w, x in u.terms.items():
        out = out + Form({w: x})
        if w & E3:
            prefix = Form.from_alg(AlgElt.scalar(1), w & ~E3)
            out = out + lmul(x, wedge(prefix, mu))
    return out


def gauge_transform(mu, u):
    """Left module map fixing eta_+-, sending eta_3 to mu + eta_3."""
    _check_mu(mu)
    return _transform(mu, u)


def gauge_transform_inv(mu, u):
    _check_mu(mu)
    return _transform(-mu, u)
