"""Associated bundles Mor(delta^n, Delta_P) as free modules over the hyperboloid.

Sections of degree n are z-degree-n elements of P.  The module bases are

    T^j_n(1) = alpha^(n-j) gamma^j          (n >= 0)
    T^j_n(1) = alphastar^(m-j) gammastar^j  (n = -m < 0)

and the dual generators ``x_nj = r_j T^j(1)*`` and ``y_nj = s_j T^j(1)*``
solve the triangular partition-of-unity systems

    sum_j x_nj T^j(1) = 1,     sum_j T^j(1) y_nj = 1.
"""
from dataclasses import dataclass, field
from functools import lru_cache

from qhyper.algebra import INHOMOGENEOUS, AlgElt, mul, star, zdegree
from qhyper.coeffs import ONE, ZERO
from qhyper.forms import Form, is_base, lmul, rmul

__all__ = [
    "Section",
    "DualSystem",
    "basis_section",
    "dual_left",
    "dual_right",
    "decompose_left",
    "decompose_right",
    "recompose_left",
    "recompose_right",
    "WeightMismatchError",
]


class WeightMismatchError(ValueError):
    """A form or section does not have the requested z-weight."""


class Section:
    """Element of Mor(delta^n, Delta_P), identified with T(1)."""

    __slots__ = ("value", "n")

    def __init__(self, value, n=None):
        if isinstance(value, str):
            value = AlgElt.parse(value)
        deg = zdegree(value)
        if deg == INHOMOGENEOUS:
            raise WeightMismatchError("a section must be z-homogeneous")
        if n is None:
            n = deg
        elif value and deg != n:
            raise WeightMismatchError(f"section has degree {deg}, expected {n}")
        self.value = value
        self.n = n

    def __eq__(self, other):
        return isinstance(other, Section) and self.n == other.n and self.value == other.value

    def __add__(self, other):
        return Section(self.value + other.value, self.n)

    def __sub__(self, other):
        return Section(self.value - other.value, self.n)

    def scale(self, c):
        return Section(self.value.scale(c), self.n)

    def star(self):
        return Section(star(self.value), -self.n)

    def render(self):
        return self.value.render()

    __str__ = render

    def __repr__(self):
        return f"Section({self.value.render()!r}, n={self.n})"


def basis_section(n, j):
    """The module generator T^j_n."""
    m = abs(n)
    if not 0 <= j <= m:
        raise IndexError(f"j={j} out of range 0..{m}")
    if n >= 0:
        return Section(AlgElt.mono(n - j, j, 0), n)
    return Section(AlgElt.mono(-(m - j), 0, j), n)


@dataclass(frozen=True)
class DualSystem:
    n: int
    side: str
    gens: tuple
    coeffs: tuple
    matrix: tuple = field(repr=False, default=())


def _rho_coeffs(x, size):
    """Coefficients of a rho-polynomial; raises if x has other monomials."""
    out = [ZERO] * size
    for (a, k, l), c in x.terms.items():
        if a or k != l or k >= size:
            raise ArithmeticError(f"expected a polynomial in rho, got {x.render()}")
        out[k] = c
    return out


def _solve(n, products):
    m = abs(n)
    f = [_rho_coeffs(p, m + 1) for p in products]
    r = []
    for i in range(m + 1):
        acc = ONE if i == 0 else ZERO
        for j in range(i):
            acc = acc - r[j] * f[j][i]
        for j in range(i + 1, m + 1):
            if f[j][i]:
                raise ArithmeticError("partition system is not triangular")
        r.append(acc / f[i][i])
    return tuple(r), tuple(tuple(row) for row in f)


@lru_cache(maxsize=None)
def dual_left(n):
    """Dual generators x_nj with sum_j x_nj T^j(1) = 1."""
    ts = [basis_section(n, j).value for j in range(abs(n) + 1)]
    stars = [star(t) for t in ts]
    r, f = _solve(n, [mul(s, t) for s, t in zip(stars, ts)])
    gens = tuple(s.scale(c) for s, c in zip(stars, r))
    return DualSystem(n, "left", gens, r, f)


@lru_cache(maxsize=None)
def dual_right(n):
    """Dual generators y_nj with sum_j T^j(1) y_nj = 1."""
    ts = [basis_section(n, j).value for j in range(abs(n) + 1)]
    stars = [star(t) for t in ts]
    r, f = _solve(n, [mul(t, s) for s, t in zip(stars, ts)])
    gens = tuple(s.scale(c) for s, c in zip(stars, r))
    return DualSystem(n, "right", gens, r, f)


def _as_form(tau):
    if isinstance(tau, Section):
        tau = tau.value
    if isinstance(tau, AlgElt):
        tau = Form.from_alg(tau)
    return tau


def _check_weight(tau, n):
    w = tau.weight()
    if tau and w != n:
        raise WeightMismatchError(f"form has weight {w}, expected {n}")


def decompose_left(tau, n):
    """Coefficients mu_j = tau x_nj (base forms), as a list of (Form, j)."""
    tau = _as_form(tau)
    _check_weight(tau, n)
    return [(rmul(tau, x), j) for j, x in enumerate(dual_left(n).gens)]


def decompose_right(tau, n):
    """Coefficients mu_j = y_nj tau (base forms), as a list of (j, Form)."""
    tau = _as_form(tau)
    _check_weight(tau, n)
    return [(j, lmul(y, tau)) for j, y in enumerate(dual_right(n).gens)]


def recompose_left(coeffs, n):
    out = Form()
    for mu, j in coeffs:
        out = out + rmul(mu, basis_section(n, j).value)
    return out


def recompose_right(coeffs, n):
    out = Form()
    for j, mu in coeffs:
        out = out + lmul(basis_section(n, j).value, mu)
    return out


def all_base(coeffs):
    return all(is_base(mu) for mu in (c[0] if isinstance(c[0], Form) else c[1] for c in coeffs))
